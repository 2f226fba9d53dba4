//! The depression transform is an exact algebraic identity, so it is tested
//! as one: scale * f(x) = g(a*x + b) + residual at many points, for many
//! random polynomials, in exact integer arithmetic. The second half checks
//! the consequence the enumerator relies on: counting over the image
//! progression of g reproduces the box counts of f class by class.

use num_bigint::BigInt;
use num_traits::Zero;
use paucity_core::depress::{depress, image_domain};
use paucity_core::enumeration::{
    enumerate, enumerate_on_image, trivial_count, EnumerateOptions,
};
use paucity_core::oracle::{brute_counts, OracleConfig};
use paucity_core::poly::IntPolynomial;
use paucity_core::domain::Domain;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_poly(rng: &mut ChaCha8Rng) -> IntPolynomial {
    let d = rng.gen_range(3..=8);
    let mut coeffs: Vec<i64> = (0..d).map(|_| rng.gen_range(-9..=9)).collect();
    coeffs.push(rng.gen_range(1..=4));
    IntPolynomial::from_i64(&coeffs)
}

#[test]
fn transform_identity_holds_pointwise() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdee9_0001);
    for _ in 0..200 {
        let f = random_poly(&mut rng);
        let form = depress(&f).unwrap();
        let d = f.degree_or_zero();

        // Shape invariants: monic, zero subleading coefficient, zero
        // constant term, de-biased by the original subleading coefficient.
        assert_eq!(form.g.coeff(d), BigInt::from(1), "g must be monic: {f}");
        assert!(form.g.coeff(d - 1).is_zero(), "subleading must vanish: {f}");
        assert!(form.g.coeff(0).is_zero(), "constant must vanish: {f}");
        assert_eq!(form.map.a, f.coeff(d) * BigInt::from(d));
        assert_eq!(form.map.b, f.coeff(d - 1));

        for x in -10..=10 {
            let x = BigInt::from(x);
            let lhs = &form.scale * f.eval(&x);
            let y = &form.map.a * &x + &form.map.b;
            let rhs = form.g.eval(&y) + &form.residual;
            assert_eq!(lhs, rhs, "identity failed for {f} at x");
        }
    }
}

#[test]
fn depressing_a_depressed_polynomial_leaves_no_residue() {
    // A polynomial already in companion shape has subleading coefficient 0
    // and constant term 0, so the new map is y = d*x and nothing is left
    // over: the transform only rescales.
    for text in ["x^3-27x", "x^4-6x^2+8x", "x^5+3x^3-2x^2+x"] {
        let f = IntPolynomial::parse(text).unwrap();
        let form = depress(&f).unwrap();
        assert!(form.residual.is_zero(), "residual for {text}");
        assert!(form.map.b.is_zero(), "shift for {text}");
        assert_eq!(form.map.a, BigInt::from(f.degree_or_zero()));
    }
}

#[test]
fn image_counts_reproduce_box_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdee9_0002);
    let opts = EnumerateOptions::default();
    let mut checked = 0;
    while checked < 20 {
        let f = random_poly(&mut rng);
        if f.degree_or_zero() > 5 {
            continue; // keep image magnitudes comfortable
        }
        let (s, b) = if checked % 4 == 3 { (3, 8) } else { (2, 25) };
        let form = depress(&f).unwrap();
        let on_box = enumerate(&f, s, b, &opts).unwrap().summary;
        let on_image = enumerate_on_image(&form, s, b, &opts).unwrap().summary;
        assert_eq!(
            (on_box.total, on_box.trivial, on_box.shared, on_box.disjoint),
            (
                on_image.total,
                on_image.trivial,
                on_image.shared,
                on_image.disjoint
            ),
            "image/box mismatch for {f}, s={s}, B={b}"
        );
        checked += 1;
    }
}

#[test]
fn image_domain_matches_the_map() {
    let f = IntPolynomial::parse("x^3+3x^2").unwrap();
    let form = depress(&f).unwrap();
    let img = image_domain(&form.map, 12).unwrap();
    assert_eq!((img.first, img.step, img.count), (6, 3, 12));
}

#[test]
fn closed_form_trivial_counts_match_the_oracle() {
    let cfg = OracleConfig::default();
    // The trivial count is polynomial-independent, so any f works here.
    let f = IntPolynomial::parse("x^3+x").unwrap();
    for s in [2u8, 3u8] {
        for b in 1..=12u64 {
            let slow = brute_counts(&f, s, &Domain::Box { bound: b }, &cfg).unwrap();
            assert_eq!(
                trivial_count(s, b).unwrap(),
                slow.trivial,
                "closed form vs oracle at s={s}, B={b}"
            );
        }
    }
}

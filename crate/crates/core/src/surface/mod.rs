//! The fixed-tail surfaces and their exact algebra.
//!
//! Fixing the last 2s-3 variables of the depressed equation at a tuple n
//! leaves the affine surface
//!
//! ```text
//!     g(y1) + g(y2) - e3*g(y3) = c_n,     e3 = +1 for s = 2, -1 for s = 3
//! ```
//!
//! The surface is singular exactly when c_n is a signed sum of three
//! critical values of g; that membership is decided with no floating point
//! by building the integer polynomial S whose roots are all such sums (a
//! resultant cascade, squarefree at every step) and testing S(c_n) = 0.
//! This module also counts integer points on one surface and audits the
//! catalogue of low-degree parametric curves that could, in principle,
//! carry solution families — tagging why each fails to produce all-positive
//! points.

pub mod audit;
pub mod resultant;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use std::collections::HashMap;

use crate::domain::Domain;
use crate::poly::IntPolynomial;
use crate::SurfaceError;
use resultant::{bivariate_resultant, resultant as int_resultant, squarefree_part, BivarPoly};

/// One surface: polynomial, arity, fixed tail, sign and right-hand constant.
#[derive(Clone, Debug)]
pub struct SurfaceSpec {
    pub g: IntPolynomial,
    pub s: u8,
    /// n_4, ..., n_(2s): one entry for s = 2, three for s = 3.
    pub n: Vec<i64>,
    /// Sign on g(y3): +1 when s = 2 (y3 sits on the right-hand side),
    /// -1 when s = 3 (all of y1, y2, y3 are left-hand variables).
    pub eps3: i8,
    /// Right-hand constant: the sum of g over the fixed tail.
    pub c_n: BigInt,
}

impl SurfaceSpec {
    pub fn new(g: &IntPolynomial, s: u8, n: &[i64]) -> Result<Self, SurfaceError> {
        if !matches!(s, 2 | 3) {
            return Err(SurfaceError::UnsupportedS(s));
        }
        let d = g.degree().unwrap_or(0);
        if d < 2 {
            return Err(SurfaceError::DegreeTooLow { found: d, min: 2 });
        }
        let expected = 2 * s as usize - 3;
        if n.len() != expected {
            return Err(SurfaceError::WrongTupleLength {
                expected,
                found: n.len(),
            });
        }
        if n.iter().any(|&v| v <= 0) {
            return Err(SurfaceError::NonPositiveTuple);
        }
        let eps3 = if s == 2 { 1 } else { -1 };
        let c_n = n.iter().map(|&v| g.eval_i64(v)).sum();
        Ok(SurfaceSpec {
            g: g.clone(),
            s,
            n: n.to_vec(),
            eps3,
            c_n,
        })
    }
}

/// How a critical-sum polynomial was assembled, kept for reporting.
#[derive(Clone, Debug)]
pub struct Provenance {
    /// C: squarefree polynomial whose roots are the critical values of g.
    pub critical: IntPolynomial,
    /// Roots are all two-term sums of critical values.
    pub pair_sum: IntPolynomial,
    /// The sign the third critical value enters with.
    pub eps3: i8,
}

/// S: squarefree integer polynomial whose roots are exactly the values
/// g(q1) + g(q2) - e3*g(q3) over critical points g'(qi) = 0.
#[derive(Clone, Debug)]
pub struct CriticalSumPolynomial {
    pub poly: IntPolynomial,
    pub provenance: Provenance,
}

/// Squarefree polynomial in z whose roots are the critical values of g:
/// the z-resultant eliminates x from (g'(x), z - g(x)).
pub fn critical_value_polynomial(g: &IntPolynomial) -> Result<IntPolynomial, SurfaceError> {
    let d = g.degree().unwrap_or(0);
    if d < 2 {
        return Err(SurfaceError::DegreeTooLow { found: d, min: 2 });
    }
    let dg = BivarPoly::from_univariate_in_u(&g.derivative());
    // z - g(u): constant-in-z coefficients from -g, plus z on u^0
    let mut coeffs: Vec<IntPolynomial> = g
        .coeffs()
        .iter()
        .map(|c| IntPolynomial::constant(-c))
        .collect();
    coeffs[0] = coeffs[0].add(&IntPolynomial::from_i64(&[0, 1]));
    let z_minus_g = BivarPoly::new(coeffs);
    Ok(squarefree_part(&bivariate_resultant(&dg, &z_minus_g)))
}

/// Squarefree polynomial whose roots are {p + sign*q : P(p) = 0, Q(q) = 0},
/// by eliminating u from (P(u), Q~(z - u)) with Q~(t) = Q(sign * t).
/// Operands with no roots at all yield the constant 1.
pub fn compose_sums(
    p: &IntPolynomial,
    q: &IntPolynomial,
    sign: i8,
) -> Result<IntPolynomial, SurfaceError> {
    if p.is_zero() || q.is_zero() {
        return Err(SurfaceError::InvalidOperand(
            "compose_sums needs nonzero operands".into(),
        ));
    }
    assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
    if p.degree_or_zero() == 0 || q.degree_or_zero() == 0 {
        return Ok(IntPolynomial::from_i64(&[1]));
    }
    let q_tilde = if sign == 1 { q.clone() } else { q.reflect() };
    let left = BivarPoly::from_univariate_in_u(p);
    let right = BivarPoly::compose_z_minus_u(&q_tilde);
    Ok(squarefree_part(&bivariate_resultant(&left, &right)))
}

/// Build S for g with the given sign on the third term:
/// S = compose_sums(compose_sums(C, C, +1), C, -e3), C the critical-value
/// polynomial. deg S <= (d-1)^3.
pub fn critical_sum_polynomial(
    g: &IntPolynomial,
    eps3: i8,
) -> Result<CriticalSumPolynomial, SurfaceError> {
    let critical = critical_value_polynomial(g)?;
    let pair_sum = compose_sums(&critical, &critical, 1)?;
    let poly = compose_sums(&pair_sum, &critical, -eps3)?;
    Ok(CriticalSumPolynomial {
        poly,
        provenance: Provenance {
            critical,
            pair_sum,
            eps3,
        },
    })
}

/// Is the surface singular? True iff S(c_n) = 0 exactly.
pub fn singular_test(spec: &SurfaceSpec) -> Result<bool, SurfaceError> {
    let s = critical_sum_polynomial(&spec.g, spec.eps3)?;
    Ok(singular_test_with(spec, &s))
}

/// Singularity test against a prebuilt S (the polynomial depends only on g
/// and the sign, so censuses build it once and evaluate per tail).
pub fn singular_test_with(spec: &SurfaceSpec, s: &CriticalSumPolynomial) -> bool {
    assert_eq!(
        s.provenance.eps3, spec.eps3,
        "critical-sum polynomial was built for the other sign"
    );
    s.poly.eval(&spec.c_n).is_zero()
}

/// Same predicate through a second exact route that never interpolates:
/// specialize z := c_n first, then take one univariate integer resultant.
/// Res_u(P2(u), C(-e3*(c_n - u))) vanishes iff c_n is a critical sum.
pub fn singular_test_direct(spec: &SurfaceSpec) -> Result<bool, SurfaceError> {
    let critical = critical_value_polynomial(&spec.g)?;
    let pair_sum = compose_sums(&critical, &critical, 1)?;
    if pair_sum.degree_or_zero() == 0 || critical.degree_or_zero() == 0 {
        return Ok(false);
    }
    let eps = BigInt::from(spec.eps3);
    // t = -e3*(c_n - u) = -e3*c_n + e3*u
    let line = IntPolynomial::from_coeffs(vec![-(&eps) * &spec.c_n, eps]);
    let specialized = critical.compose(&line);
    Ok(int_resultant(&pair_sum, &specialized).is_zero())
}

/// Census of singular tails over a domain of n-coordinates (the full box by
/// default; the image progression of a depressed map if the caller passes
/// one). For s = 3 the tail ranges over the lexicographic cube domain^3.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub g: IntPolynomial,
    pub s: u8,
    pub domain: Domain,
    pub singular_count: u64,
    /// First tails found singular, in lexicographic order (capped).
    pub singular_sample: Vec<Vec<i64>>,
    pub critical_sum: CriticalSumPolynomial,
    /// count / B^2, the normalized density tracked on s = 3 ladders.
    pub count_per_b2: Option<f64>,
}

pub const CENSUS_SAMPLE_CAP: usize = 32;

pub fn singular_census(
    g: &IntPolynomial,
    s: u8,
    domain: &Domain,
) -> Result<CensusReport, SurfaceError> {
    if !matches!(s, 2 | 3) {
        return Err(SurfaceError::UnsupportedS(s));
    }
    let eps3 = if s == 2 { 1 } else { -1 };
    let csp = critical_sum_polynomial(g, eps3)?;
    let points = domain
        .points()
        .map_err(|e| SurfaceError::InvalidOperand(e.to_string()))?;
    let values: Vec<BigInt> = points.par_iter().map(|&p| g.eval_i64(p)).collect();

    let (singular_count, singular_sample) = if s == 2 {
        let hits: Vec<Vec<i64>> = points
            .par_iter()
            .zip(values.par_iter())
            .filter(|(_, c)| csp.poly.eval(c).is_zero())
            .map(|(&p, _)| vec![p])
            .collect();
        (hits.len() as u64, cap_sample(hits))
    } else {
        // lexicographic (n4, n5, n6); parallel over the leading coordinate
        let per_first: Vec<(u64, Vec<Vec<i64>>)> = (0..points.len())
            .into_par_iter()
            .map(|i| {
                let mut count = 0u64;
                let mut sample = Vec::new();
                for j in 0..points.len() {
                    let vij = &values[i] + &values[j];
                    for k in 0..points.len() {
                        let c = &vij + &values[k];
                        if csp.poly.eval(&c).is_zero() {
                            count += 1;
                            if sample.len() < CENSUS_SAMPLE_CAP {
                                sample.push(vec![points[i], points[j], points[k]]);
                            }
                        }
                    }
                }
                (count, sample)
            })
            .collect();
        let mut count = 0u64;
        let mut sample = Vec::new();
        for (c, mut s) in per_first {
            count += c;
            if sample.len() < CENSUS_SAMPLE_CAP {
                sample.append(&mut s);
            }
        }
        (count, cap_sample(sample))
    };

    let count_per_b2 = (s == 3).then(|| {
        let b = domain.len() as f64;
        singular_count as f64 / (b * b)
    });
    Ok(CensusReport {
        g: g.clone(),
        s,
        domain: domain.clone(),
        singular_count,
        singular_sample,
        critical_sum: csp,
        count_per_b2,
    })
}

fn cap_sample(mut sample: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    sample.truncate(CENSUS_SAMPLE_CAP);
    sample
}

/// Integer points on one surface with every coordinate in the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfacePoints {
    /// (y1, y2, y3) triples in lexicographic order; (y1, y2) is ordered, so
    /// mirror-image points are both listed.
    pub points: Vec<[i64; 3]>,
}

impl SurfacePoints {
    pub fn count(&self) -> u64 {
        self.points.len() as u64
    }
}

/// Count points by looping over ordered (y1, y2) and inverting g for y3.
///
/// The inversion is a hybrid: a hash of g-values over the non-monotone head
/// of the domain, plus binary search on the strictly increasing tail (g is
/// eventually increasing since its leading coefficient is positive). The
/// `exclusions` are values banned for left-hand coordinates — y1, y2 for
/// s = 2 and additionally y3 for s = 3, where y3 is a left-hand variable —
/// and s = 2 always enforces y3 distinct from y1 and y2.
pub fn points_on_surface(
    spec: &SurfaceSpec,
    domain: &Domain,
    exclusions: &[i64],
) -> Result<SurfacePoints, SurfaceError> {
    let lookup = HybridInverse::build(&spec.g, domain)?;
    collect_points(spec, domain, exclusions, |t| lookup.preimages(t))
}

/// Same contract through a presorted full value-table join; the two routes
/// must agree and the tests hold them to that.
pub fn points_on_surface_by_table(
    spec: &SurfaceSpec,
    domain: &Domain,
    exclusions: &[i64],
) -> Result<SurfacePoints, SurfaceError> {
    let points = domain_points(domain)?;
    let mut table: Vec<(BigInt, i64)> = points
        .par_iter()
        .map(|&p| (spec.g.eval_i64(p), p))
        .collect();
    table.sort_unstable();
    collect_points(spec, domain, exclusions, move |t| {
        let lo = table.partition_point(|(v, _)| v < t);
        let hi = table.partition_point(|(v, _)| v <= t);
        table[lo..hi].iter().map(|&(_, p)| p).collect()
    })
}

fn domain_points(domain: &Domain) -> Result<Vec<i64>, SurfaceError> {
    domain
        .points()
        .map_err(|e| SurfaceError::InvalidOperand(e.to_string()))
}

fn collect_points(
    spec: &SurfaceSpec,
    domain: &Domain,
    exclusions: &[i64],
    preimages: impl Fn(&BigInt) -> Vec<i64>,
) -> Result<SurfacePoints, SurfaceError> {
    let points = domain_points(domain)?;
    let values: Vec<BigInt> = points.iter().map(|&p| spec.g.eval_i64(p)).collect();
    let banned = |y: i64| exclusions.contains(&y);
    let mut out = Vec::new();
    for (i, &y1) in points.iter().enumerate() {
        if banned(y1) {
            continue;
        }
        for (j, &y2) in points.iter().enumerate() {
            if banned(y2) {
                continue;
            }
            // e3*g(y3) = g(y1) + g(y2) - c_n
            let lhs = &values[i] + &values[j] - &spec.c_n;
            let target = if spec.eps3 == 1 { lhs } else { -lhs };
            for y3 in preimages(&target) {
                if spec.s == 2 && (y3 == y1 || y3 == y2) {
                    continue;
                }
                if spec.s == 3 && banned(y3) {
                    continue;
                }
                out.push([y1, y2, y3]);
            }
        }
    }
    Ok(SurfacePoints { points: out })
}

/// Preimage queries for g over a fixed domain: exact hash lookup on the
/// finitely many points before g turns monotone, binary search after.
struct HybridInverse {
    head: HashMap<BigInt, Vec<i64>>,
    tail_points: Vec<i64>,
    tail_values: Vec<BigInt>,
}

impl HybridInverse {
    fn build(g: &IntPolynomial, domain: &Domain) -> Result<Self, SurfaceError> {
        let points = domain_points(domain)?;
        // g'(y) > 0 for y >= 1 + max |c_i| / c_top over the derivative's
        // lower coefficients (Cauchy bound), so g is strictly increasing
        // from there on. A non-positive leading coefficient has no such
        // tail; everything goes in the hash.
        let dg = g.derivative();
        let top = dg.leading().expect("degree >= 2").clone();
        let tail_start = if top > BigInt::zero() {
            let max_low = dg.coeffs()[..dg.degree_or_zero()]
                .iter()
                .map(|c| c.magnitude().clone())
                .max()
                .unwrap_or_default();
            let bound = (BigInt::from(max_low) + &top - 1) / &top + 1;
            i64::try_from(&bound).unwrap_or(i64::MAX)
        } else {
            i64::MAX
        };

        let split = points.partition_point(|&p| p < tail_start);
        let mut head: HashMap<BigInt, Vec<i64>> = HashMap::new();
        for &p in &points[..split] {
            head.entry(g.eval_i64(p)).or_default().push(p);
        }
        let tail_points = points[split..].to_vec();
        let tail_values: Vec<BigInt> =
            tail_points.par_iter().map(|&p| g.eval_i64(p)).collect();
        debug_assert!(tail_values.windows(2).all(|w| w[0] < w[1]));
        Ok(HybridInverse {
            head,
            tail_points,
            tail_values,
        })
    }

    fn preimages(&self, target: &BigInt) -> Vec<i64> {
        let mut hits = self.head.get(target).cloned().unwrap_or_default();
        if let Ok(at) = self.tail_values.binary_search(target) {
            hits.push(self.tail_points[at]);
        }
        hits
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::depress::depress;
    use crate::domain::Domain;

    fn poly(text: &str) -> IntPolynomial {
        IntPolynomial::parse(text).unwrap()
    }

    #[test]
    fn spec_construction_checks_shape() {
        let g = poly("y^3-27y");
        let spec = SurfaceSpec::new(&g, 2, &[6]).unwrap();
        assert_eq!(spec.eps3, 1);
        assert_eq!(spec.c_n, BigInt::from(54));
        let spec3 = SurfaceSpec::new(&g, 3, &[1, 2, 3]).unwrap();
        assert_eq!(spec3.eps3, -1);
        // g(1)+g(2)+g(3) = -26 - 46 - 54
        assert_eq!(spec3.c_n, BigInt::from(-126));
        assert!(matches!(
            SurfaceSpec::new(&g, 4, &[1]),
            Err(SurfaceError::UnsupportedS(4))
        ));
        assert!(matches!(
            SurfaceSpec::new(&g, 2, &[1, 2]),
            Err(SurfaceError::WrongTupleLength { expected: 1, found: 2 })
        ));
        assert!(matches!(
            SurfaceSpec::new(&g, 3, &[1, 0, 2]),
            Err(SurfaceError::NonPositiveTuple)
        ));
        assert!(matches!(
            SurfaceSpec::new(&poly("y"), 2, &[1]),
            Err(SurfaceError::DegreeTooLow { found: 1, min: 2 })
        ));
    }

    #[test]
    fn critical_values_of_worked_cubics_and_quartic() {
        // y^3-27y: critical points +-3, values -+54
        assert_eq!(
            critical_value_polynomial(&poly("y^3-27y")).unwrap(),
            poly("z^2-2916")
        );
        // y^3: the degenerate critical value 0, squarefree part z
        assert_eq!(critical_value_polynomial(&poly("y^3")).unwrap(), poly("z"));
        // y^4-6y^2+8y: g' = 4(y-1)^2(y+2), values {3, -24}
        assert_eq!(
            critical_value_polynomial(&poly("y^4-6y^2+8y")).unwrap(),
            poly("z^2+21z-72") // (z-3)(z+24)
        );
    }

    #[test]
    fn compose_sums_matches_worked_examples() {
        let c = poly("z^2-2916");
        // pairwise sums of {-54, 54} are {-108, 0, 108}
        assert_eq!(
            compose_sums(&c, &c, 1).unwrap(),
            poly("z^3-11664z")
        );
        // 0 - 0 = 0
        let z = poly("z");
        assert_eq!(compose_sums(&z, &z, -1).unwrap(), z);
        // single roots shift: {3} + {-24} = {-21}
        assert_eq!(
            compose_sums(&poly("z-3"), &poly("z+24"), 1).unwrap(),
            poly("z+21")
        );
    }

    #[test]
    fn critical_sum_cascade_for_the_worked_cubic() {
        // (a + b - c) over {+-54}^3 = {-162, -54, 54, 162}
        let s = critical_sum_polynomial(&poly("y^3-27y"), 1).unwrap();
        let expect = poly("z^2-2916").mul(&poly("z^2-26244"));
        assert_eq!(s.poly, expect);
        assert_eq!(s.provenance.pair_sum, poly("z^3-11664z"));
        assert_eq!(s.provenance.critical, poly("z^2-2916"));
    }

    #[test]
    fn singular_test_flags_the_worked_cases() {
        let g = poly("y^3-27y");
        let singular = SurfaceSpec::new(&g, 2, &[6]).unwrap();
        assert!(singular_test(&singular).unwrap());
        let smooth = SurfaceSpec::new(&g, 2, &[1]).unwrap();
        assert!(!singular_test(&smooth).unwrap());
        // pure power: only critical sum is 0, any positive tail is smooth
        let cube = SurfaceSpec::new(&poly("y^3"), 2, &[1]).unwrap();
        assert!(!singular_test(&cube).unwrap());
        // same answers through the specialize-first route
        assert!(singular_test_direct(&singular).unwrap());
        assert!(!singular_test_direct(&smooth).unwrap());
        assert!(!singular_test_direct(&cube).unwrap());
    }

    #[test]
    fn quartic_tail_one_is_singular() {
        // g(1) = 3 is itself a critical value; 3 = 3 + (-24) - (-24) etc.
        let g = poly("y^4-6y^2+8y");
        let spec = SurfaceSpec::new(&g, 2, &[1]).unwrap();
        assert!(singular_test(&spec).unwrap());
        assert!(singular_test_direct(&spec).unwrap());
    }

    #[test]
    fn census_of_the_worked_cubic_is_bounded() {
        // c_n = g(n) lands in {-162, -54, 54, 162} exactly at n = 3
        // (g(3) = -54) and n = 6 (g(6) = 54); nothing larger can, since
        // g(7) = 154 and g(8) = 296 straddle the one remaining value 162
        // and g keeps climbing.
        let g = poly("y^3-27y");
        let census = singular_census(&g, 2, &Domain::Box { bound: 10 }).unwrap();
        assert_eq!(census.singular_count, 2);
        assert_eq!(census.singular_sample, vec![vec![3], vec![6]]);
        let wide = singular_census(&g, 2, &Domain::Box { bound: 1000 }).unwrap();
        assert_eq!(wide.singular_count, 2);
        assert_eq!(wide.singular_sample, vec![vec![3], vec![6]]);
        // bounded: growing the box changes nothing
        let wider = singular_census(&g, 2, &Domain::Box { bound: 4000 }).unwrap();
        assert_eq!(wider.singular_count, 2);
        // and the count is within the degree of S
        assert!(census.singular_count <= census.critical_sum.poly.degree_or_zero() as u64);
    }

    #[test]
    fn census_of_pure_cube_is_empty_in_positives() {
        let census = singular_census(&poly("y^3"), 3, &Domain::Box { bound: 5 }).unwrap();
        assert_eq!(census.singular_count, 0);
        assert!(census.singular_sample.is_empty());
        assert_eq!(census.count_per_b2, Some(0.0));
    }

    #[test]
    fn degree_bound_of_critical_sum_polynomial() {
        for text in ["y^3-27y", "y^4-6y^2+8y", "y^5-5y^3+4y"] {
            let g = poly(text);
            let d = g.degree().unwrap();
            for eps3 in [1, -1] {
                let s = critical_sum_polynomial(&g, eps3).unwrap();
                assert!(
                    s.poly.degree_or_zero() <= (d - 1).pow(3),
                    "deg S = {} too big for {text}",
                    s.poly.degree_or_zero()
                );
            }
        }
    }

    #[test]
    fn points_on_worked_surfaces() {
        let g = poly("y^3");
        // 9^3 + 10^3 - 12^3 = 1 = g(1)
        let spec = SurfaceSpec::new(&g, 2, &[1]).unwrap();
        let pts = points_on_surface(&spec, &Domain::Box { bound: 12 }, &[]).unwrap();
        assert_eq!(pts.points, vec![[9, 10, 12], [10, 9, 12]]);
        // 9^3 + 15^3 - 16^3 = 8 = g(2)
        let spec2 = SurfaceSpec::new(&g, 2, &[2]).unwrap();
        let pts2 = points_on_surface(&spec2, &Domain::Box { bound: 16 }, &[]).unwrap();
        assert!(pts2.points.contains(&[9, 15, 16]));
        assert!(pts2.points.contains(&[15, 9, 16]));
        // shared-coordinate candidates (2, k, k) are rejected for s = 2
        assert!(pts2.points.iter().all(|p| p[2] != p[0] && p[2] != p[1]));
    }

    #[test]
    fn out_of_range_constant_means_no_points() {
        let g = poly("y^3-27y");
        // c_n far above 2*max g on the domain
        let spec = SurfaceSpec::new(&g, 2, &[1000]).unwrap();
        let pts = points_on_surface(&spec, &Domain::Box { bound: 10 }, &[]).unwrap();
        assert!(pts.points.is_empty());
    }

    #[test]
    fn hybrid_and_table_joins_agree() {
        // non-monotone quartic over a box and over a progression
        let g = poly("y^4-10y^2");
        for n in [1, 2, 3] {
            let spec = SurfaceSpec::new(&g, 2, &[n]).unwrap();
            for domain in [
                Domain::Box { bound: 14 },
                Domain::Progression { first: 2, step: 3, count: 9 },
            ] {
                let a = points_on_surface(&spec, &domain, &[]).unwrap();
                let b = points_on_surface_by_table(&spec, &domain, &[]).unwrap();
                assert_eq!(a, b, "n={n} domain={domain:?}");
            }
        }
        let g3 = poly("y^3-27y");
        let spec3 = SurfaceSpec::new(&g3, 3, &[1, 2, 3]).unwrap();
        let dom = Domain::Box { bound: 12 };
        let a = points_on_surface(&spec3, &dom, &[2, 3]).unwrap();
        let b = points_on_surface_by_table(&spec3, &dom, &[2, 3]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exclusions_ban_left_hand_coordinates() {
        let g = poly("y^3");
        let spec = SurfaceSpec::new(&g, 2, &[1]).unwrap();
        let dom = Domain::Box { bound: 12 };
        // banning 9 kills both mirror points; banning the right-hand y3
        // value does not
        let none = points_on_surface(&spec, &dom, &[9]).unwrap();
        assert!(none.points.is_empty());
        let still = points_on_surface(&spec, &dom, &[12]).unwrap();
        assert_eq!(still.count(), 2);
    }

    #[test]
    fn census_runs_on_the_image_progression_too() {
        let df = depress(&poly("x^3+3x^2")).unwrap();
        let img = crate::depress::image_domain(&df.map, 12).unwrap();
        let census = singular_census(&df.g, 2, &Domain::from(&img)).unwrap();
        // g = y^3-27y on {6, 9, ..., 39}: only n = 6 lands on a critical sum
        assert_eq!(census.singular_sample, vec![vec![6]]);
    }
}

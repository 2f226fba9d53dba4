//! Fraction-free elimination over the integers.
//!
//! Everything the surface layer needs reduces to three primitives: a
//! subresultant gcd (for squarefree parts), a univariate integer resultant
//! (Cohen, *A Course in Computational Algebraic Number Theory*, alg. 3.3.7),
//! and a resultant of two polynomials in Z[z][u] eliminating u. The bivariate
//! case is computed pointwise — specialize z, take the fast univariate
//! resultant, reconstruct by exact finite-difference interpolation — which
//! stays polynomial-sized where a direct bivariate remainder sequence drowns
//! in coefficient blowup. Unit tests check both against an independent
//! Sylvester-determinant oracle.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::poly::IntPolynomial;

/// Pseudo-remainder: the R with lc(b)^(deg a - deg b + 1) * a = q*b + R and
/// deg R < deg b. Requires deg a >= deg b >= 0 and b nonzero.
pub fn pseudo_rem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("pseudo_rem by zero polynomial");
    let mut r = a.clone();
    let lb = b.leading().expect("nonzero").clone();
    let mut steps = a.degree_or_zero() as i64 - db as i64 + 1;
    while !r.is_zero() && r.degree_or_zero() >= db && steps > 0 {
        let dr = r.degree_or_zero();
        let lead = r.leading().expect("nonzero").clone();
        // r <- lb*r - lead*x^(dr-db)*b
        r = r
            .mul_scalar(&lb)
            .sub(&b.mul(&IntPolynomial::monomial(lead, dr - db)));
        steps -= 1;
    }
    // Top up the scaling so the full lb^(da-db+1) factor is applied even when
    // leading terms cancelled early; keeps the subresultant bookkeeping exact.
    while steps > 0 {
        r = r.mul_scalar(&lb);
        steps -= 1;
    }
    r
}

/// Exact division by a scalar; panics if any coefficient fails to divide
/// (an internal-invariant breach in the callers, never a user error).
fn div_scalar_exact(p: &IntPolynomial, c: &BigInt) -> IntPolynomial {
    assert!(!c.is_zero(), "division by zero scalar");
    IntPolynomial::from_coeffs(
        p.coeffs()
            .iter()
            .map(|a| {
                let (q, r) = num_integer::Integer::div_rem(a, c);
                assert!(r.is_zero(), "inexact scalar division in remainder sequence");
                q
            })
            .collect(),
    )
}

fn big_div_exact(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(a, b);
    assert!(r.is_zero(), "inexact integer division in remainder sequence");
    q
}

/// Exact polynomial division; panics when b does not divide a over Z.
pub fn div_exact(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    assert!(!b.is_zero(), "division by zero polynomial");
    if a.is_zero() {
        return IntPolynomial::zero();
    }
    let da = a.degree_or_zero();
    let db = b.degree_or_zero();
    assert!(da >= db, "exact division with deg a < deg b");
    let lb = b.leading().expect("nonzero");
    let mut rem = a.clone();
    let mut q = vec![BigInt::zero(); da - db + 1];
    while !rem.is_zero() && rem.degree_or_zero() >= db {
        let dr = rem.degree_or_zero();
        let c = big_div_exact(rem.leading().expect("nonzero"), lb);
        rem = rem.sub(&b.mul(&IntPolynomial::monomial(c.clone(), dr - db)));
        q[dr - db] = c;
        if rem.degree_or_zero() == dr && !rem.is_zero() {
            panic!("exact division failed to reduce degree");
        }
    }
    assert!(rem.is_zero(), "inexact polynomial division");
    IntPolynomial::from_coeffs(q)
}

/// GCD in Z[x] via the subresultant remainder sequence; the result is
/// primitive up to the gcd of the contents, with positive leading
/// coefficient.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() {
        return b.sign_normalized();
    }
    if b.is_zero() {
        return a.sign_normalized();
    }
    let content = num_integer::Integer::gcd(&a.content(), &b.content());
    let mut p = a.primitive_part();
    let mut q = b.primitive_part();
    if p.degree_or_zero() < q.degree_or_zero() {
        std::mem::swap(&mut p, &mut q);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if q.is_zero() {
            return p.primitive_part().sign_normalized().mul_scalar(&content);
        }
        if q.degree_or_zero() == 0 {
            // coprime primitive parts
            return IntPolynomial::constant(content);
        }
        let delta = (p.degree_or_zero() - q.degree_or_zero()) as u32;
        let r = pseudo_rem(&p, &q);
        p = q;
        q = if r.is_zero() {
            IntPolynomial::zero()
        } else {
            div_scalar_exact(&r, &(&g * h.pow(delta)))
        };
        g = p.leading().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            big_div_exact(&g.pow(delta), &h.pow(delta - 1))
        };
    }
}

/// The product of (x - r) over the distinct roots, as a primitive integer
/// polynomial with positive leading coefficient scaled by nothing beyond
/// primitivity: p / gcd(p, p').
pub fn squarefree_part(p: &IntPolynomial) -> IntPolynomial {
    if p.is_zero() {
        return IntPolynomial::zero();
    }
    if p.degree_or_zero() == 0 {
        return IntPolynomial::constant(BigInt::one());
    }
    let pp = p.primitive_part().sign_normalized();
    let g = poly_gcd(&pp, &pp.derivative());
    if g.degree_or_zero() == 0 {
        return pp;
    }
    div_exact(&pp, &g).primitive_part().sign_normalized()
}

/// Resultant of two integer polynomials (Cohen alg. 3.3.7: subresultant
/// sequence with content split off up front).
pub fn resultant(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let mut p = a.clone();
    let mut q = b.clone();
    let mut negate = false;
    if p.degree_or_zero() < q.degree_or_zero() {
        if p.degree_or_zero() % 2 == 1 && q.degree_or_zero() % 2 == 1 {
            negate = !negate;
        }
        std::mem::swap(&mut p, &mut q);
    }
    if q.degree_or_zero() == 0 {
        // Res(p, c) = c^(deg p)
        let r = q.coeff(0).pow(p.degree_or_zero() as u32);
        return if negate { -r } else { r };
    }
    let ca = p.content();
    let cb = q.content();
    let mut t = ca.pow(q.degree_or_zero() as u32) * cb.pow(p.degree_or_zero() as u32);
    if negate {
        t = -t;
    }
    p = p.primitive_part();
    q = q.primitive_part();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let dp = p.degree_or_zero();
        let dq = q.degree_or_zero();
        if dp % 2 == 1 && dq % 2 == 1 {
            t = -t;
        }
        let delta = (dp - dq) as u32;
        let r = pseudo_rem(&p, &q);
        if r.is_zero() {
            // q has positive degree here, so a common factor survives
            return BigInt::zero();
        }
        p = q;
        q = div_scalar_exact(&r, &(&g * h.pow(delta)));
        g = p.leading().expect("nonzero").clone();
        h = if delta == 0 {
            h
        } else {
            big_div_exact(&g.pow(delta), &h.pow(delta - 1))
        };
        if q.degree_or_zero() == 0 {
            break;
        }
    }
    let dp = p.degree_or_zero() as u32;
    let lead = q.coeff(0).pow(dp);
    let h_final = if dp == 0 { h } else { big_div_exact(&lead, &h.pow(dp - 1)) };
    t * h_final
}

/// Polynomial in Z[z][u]: `coeffs[k]` is the z-polynomial on u^k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarPoly {
    coeffs: Vec<IntPolynomial>,
}

impl BivarPoly {
    pub fn new(mut coeffs: Vec<IntPolynomial>) -> Self {
        while coeffs.last().is_some_and(IntPolynomial::is_zero) {
            coeffs.pop();
        }
        BivarPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_u(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead_u(&self) -> Option<&IntPolynomial> {
        self.coeffs.last()
    }

    pub fn max_z_degree(&self) -> usize {
        self.coeffs.iter().map(IntPolynomial::degree_or_zero).max().unwrap_or(0)
    }

    /// Specialize z to a constant, leaving a univariate polynomial in u.
    pub fn eval_z(&self, z: &BigInt) -> IntPolynomial {
        IntPolynomial::from_coeffs(self.coeffs.iter().map(|c| c.eval(z)).collect())
    }

    /// P(u) with constant coefficients (no z at all).
    pub fn from_univariate_in_u(p: &IntPolynomial) -> Self {
        BivarPoly::new(
            p.coeffs()
                .iter()
                .map(|c| IntPolynomial::constant(c.clone()))
                .collect(),
        )
    }

    /// Substitute u := z - u into a univariate p, i.e. expand p(z - u).
    /// Horner in (z - u): multiply by (z - u) then add the next coefficient.
    pub fn compose_z_minus_u(p: &IntPolynomial) -> Self {
        let z = IntPolynomial::from_i64(&[0, 1]);
        let mut acc: Vec<IntPolynomial> = Vec::new();
        for c in p.coeffs().iter().rev() {
            // acc <- acc * (z - u) + c
            let mut next = vec![IntPolynomial::zero(); acc.len() + 1];
            for (k, q) in acc.iter().enumerate() {
                next[k] = next[k].add(&q.mul(&z)); // * z
                next[k + 1] = next[k + 1].sub(q); // * (-u)
            }
            next[0] = next[0].add(&IntPolynomial::constant(c.clone()));
            acc = next;
        }
        BivarPoly::new(acc)
    }
}

/// Resultant with respect to u of two polynomials in Z[z][u], as a
/// polynomial in z.
///
/// Both leading u-coefficients must be nonzero constants so that
/// specializing z never drops the u-degree; then Res commutes with
/// evaluation and the polynomial of degree at most
/// `deg_u(a)*deg_z(b) + deg_u(b)*deg_z(a)` is pinned down by evaluating at
/// that many+1 integer nodes and interpolating exactly.
pub fn bivariate_resultant(a: &BivarPoly, b: &BivarPoly) -> IntPolynomial {
    assert!(!a.is_zero() && !b.is_zero(), "resultant of zero polynomial");
    let da = a.degree_u();
    let db = b.degree_u();
    if da == 0 {
        // Res(c(z), b) = c(z)^(deg_u b)
        return poly_pow(a.lead_u().expect("nonzero"), db);
    }
    if db == 0 {
        let r = poly_pow(b.lead_u().expect("nonzero"), da);
        return if (da * db) % 2 == 1 { r.neg() } else { r };
    }
    for p in [a, b] {
        let lead = p.lead_u().expect("nonzero");
        assert_eq!(
            lead.degree_or_zero(),
            0,
            "leading u-coefficient must be a nonzero constant"
        );
    }
    let n = da * b.max_z_degree() + db * a.max_z_degree();
    if n == 0 {
        let z0 = BigInt::zero();
        return IntPolynomial::constant(resultant(&a.eval_z(&z0), &b.eval_z(&z0)));
    }
    let values: Vec<BigInt> = (0..=n as u64)
        .into_par_iter()
        .map(|z0| {
            let z0 = BigInt::from(z0);
            resultant(&a.eval_z(&z0), &b.eval_z(&z0))
        })
        .collect();
    interpolate_at_naturals(values)
}

fn poly_pow(p: &IntPolynomial, k: usize) -> IntPolynomial {
    let mut out = IntPolynomial::constant(BigInt::one());
    for _ in 0..k {
        out = out.mul(p);
    }
    out
}

/// Exact interpolation through (i, v[i]) for i = 0..=N, where the values are
/// known to come from an integer polynomial of degree <= N.
///
/// Newton forward differences give p(z) = sum_k D^k v0 * C(z, k); clearing
/// the denominator once, N! * p(z) = sum_k D^k v0 * (N!/k!) * z(z-1)..(z-k+1),
/// is pure integer arithmetic, and the final division by N! must be exact —
/// asserted coefficient by coefficient.
fn interpolate_at_naturals(mut v: Vec<BigInt>) -> IntPolynomial {
    let n = v.len() - 1;
    for k in 1..=n {
        for i in (k..=n).rev() {
            let prev = v[i - 1].clone();
            v[i] -= prev;
        }
    }
    let mut n_fact = BigInt::one();
    for i in 2..=n {
        n_fact *= BigInt::from(i);
    }
    let mut scale = n_fact.clone(); // N!/k!, updated as k grows
    let mut falling = IntPolynomial::constant(BigInt::one());
    let mut acc = vec![BigInt::zero(); n + 1];
    for (k, diff) in v.iter().enumerate() {
        if k > 0 {
            falling = falling.mul(&IntPolynomial::from_coeffs(vec![
                BigInt::from(-((k as i64) - 1)),
                BigInt::one(),
            ]));
            scale = big_div_exact(&scale, &BigInt::from(k));
        }
        if !diff.is_zero() {
            let w = diff * &scale;
            for (j, c) in falling.coeffs().iter().enumerate() {
                acc[j] += c * &w;
            }
        }
    }
    IntPolynomial::from_coeffs(acc.iter().map(|c| big_div_exact(c, &n_fact)).collect())
}

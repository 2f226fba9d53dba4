//! Depression transform: rewrite a degree-d integer polynomial f so that a
//! single monic polynomial g with no second-highest or constant term carries
//! all of its additive structure.
//!
//! For f(x) = a0*x^d + a1*x^(d-1) + ... + a_d with a0 > 0 and d >= 3, there
//! are integers b_2..b_d with
//!
//!   a0^(d-1) * d^d * f(x) = g(a0*d*x + a1) + b_d,
//!   g(y) = y^d + b_2*y^(d-2) + ... + b_(d-1)*y.
//!
//! Equal sums of f-values over 1..B therefore biject with equal sums of
//! g-values over the arithmetic progression {a0*d*x + a1}, which is what the
//! enumeration and surface modules consume. All intermediates stay integral:
//! the b_i fall out of exact binomial expansions of (a0*d*x + a1)^k, never
//! from solving a linear system.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::poly::IntPolynomial;
use crate::PolyError;

/// y = a*x + b with a > 0; the change of variable attached to a depression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub a: BigInt,
    pub b: BigInt,
}

impl AffineMap {
    pub fn apply(&self, x: &BigInt) -> BigInt {
        &self.a * x + &self.b
    }

    /// Human-readable form, e.g. `y=3x+3`.
    pub fn text(&self) -> String {
        let mut out = format!("y={}x", self.a);
        if self.b.is_positive() {
            out.push('+');
            out.push_str(&self.b.to_string());
        } else if self.b.is_negative() {
            out.push_str(&self.b.to_string());
        }
        out
    }
}

/// Result of depressing f: scale * f(x) = g(map(x)) + residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepressedForm {
    /// Monic, zero coefficient on y^(d-1), zero constant term.
    pub g: IntPolynomial,
    /// a0^(d-1) * d^d
    pub scale: BigInt,
    pub map: AffineMap,
    /// b_d, the constant pulled out of g.
    pub residual: BigInt,
}

impl DepressedForm {
    /// The defining identity, evaluated exactly at one point.
    pub fn check_at(&self, f: &IntPolynomial, x: &BigInt) -> bool {
        let lhs = f.eval(x) * &self.scale;
        let rhs = self.g.eval(&self.map.apply(x)) + &self.residual;
        lhs == rhs
    }
}

/// Depress f; requires deg f >= 3 and positive leading coefficient.
pub fn depress(f: &IntPolynomial) -> Result<DepressedForm, PolyError> {
    let d = match f.degree() {
        Some(d) if d >= 3 => d,
        other => {
            return Err(PolyError::DegreeTooLow {
                found: other.unwrap_or(0),
                min: 3,
            })
        }
    };
    let a0 = f.leading().expect("degree checked").clone();
    if !a0.is_positive() {
        return Err(PolyError::NonPositiveLeading);
    }
    let a1 = f.coeff(d - 1);

    let d_big = BigInt::from(d);
    let scale = a0.pow(d as u32 - 1) * d_big.pow(d as u32);
    let map = AffineMap {
        a: &a0 * &d_big,
        b: a1,
    };

    // Re-express scale*f in powers of (a*x + b), top power down. Each step's
    // leading division is exact by construction of the scale factor.
    let mut rest = f.mul_scalar(&scale);
    let mut g_coeffs = vec![BigInt::zero(); d + 1];
    let mut residual = BigInt::zero();
    for k in (0..=d).rev() {
        let lead = rest.coeff(k);
        if lead.is_zero() {
            continue;
        }
        let a_pow = map.a.pow(k as u32);
        let (c, rem) = num_integer::Integer::div_rem(&lead, &a_pow);
        assert!(rem.is_zero(), "depression coefficient must be integral");
        rest = rest.sub(&IntPolynomial::linear_power(&map.a, &map.b, k).mul_scalar(&c));
        if k == 0 {
            residual = c;
        } else {
            g_coeffs[k] = c;
        }
    }
    assert!(rest.is_zero(), "depression expansion must terminate exactly");
    assert!(g_coeffs[d].is_one(), "depressed form must be monic");
    assert!(
        g_coeffs[d - 1].is_zero(),
        "second-highest coefficient must vanish"
    );

    Ok(DepressedForm {
        g: IntPolynomial::from_coeffs(g_coeffs),
        scale,
        map,
        residual,
    })
}

/// The image of {1..B} under an affine map, as a strictly increasing
/// arithmetic progression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageDomain {
    pub first: i64,
    pub step: i64,
    pub count: u64,
}

/// Progression {a*x + b : 1 <= x <= B}. The endpoints must fit in machine
/// words; sums of polynomial values stay arbitrary-precision regardless.
pub fn image_domain(map: &AffineMap, b: u64) -> Result<ImageDomain, PolyError> {
    if !map.a.is_positive() {
        return Err(PolyError::NonMonotoneMap);
    }
    if b == 0 {
        return Err(PolyError::Parse("domain bound must be at least 1".into()));
    }
    let first = (&map.a + &map.b)
        .to_i64()
        .ok_or(PolyError::MachineRange)?;
    let step = map.a.to_i64().ok_or(PolyError::MachineRange)?;
    let last = (&map.a * BigInt::from(b) + &map.b)
        .to_i64()
        .ok_or(PolyError::MachineRange)?;
    let _ = last; // only bounds-checked
    Ok(ImageDomain {
        first,
        step,
        count: b,
    })
}

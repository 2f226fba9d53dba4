//! Audit of the finite catalogue of lines and conics that can lie on a
//! surface g(y1) + g(y2) - e3*g(y3) = c_n.
//!
//! The catalogue is closed: up to reparametrization, a curve of degree at
//! most 2 on the surface must have its nonconstant components equal to
//! +-t or +-t^2 (direction coefficients outside {0, +-1} are ruled out by
//! Fermat-Wiles for the leading terms), leaving seven shapes whose free
//! constants are roots of explicit polynomial equations:
//!
//! ```text
//!   (t, -t, m)   (t^2, -t^2, m)      need g(t) + g(-t) constant
//!   (t, m, t)    (m, t, t)   (t^2, m, t^2)     s = 2 only
//!   (t, m, -t)   (m, t, -t)          need g(t) - e3*g(-t) constant
//! ```
//!
//! A shift representative is chosen for the conics: (t^2 + a, -t^2 - a, m)
//! lies on the surface for every a exactly when it does for a = 0, so only
//! the a = 0 member is reported. Every returned curve is re-verified by
//! exact substitution, and none can carry points that the solution count
//! accepts: either two coordinates have opposite signs, or a coordinate
//! repeats across the two sides of the underlying equation.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use std::fmt;

use super::SurfaceSpec;
use crate::poly::IntPolynomial;
use crate::SurfaceError;

/// A curve (y1(t), y2(t), y3(t)) of degree 1 or 2 with rational
/// coefficients, stored lowest-order first per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametricCurve {
    pub degree: u8,
    pub components: [Vec<BigRational>; 3],
}

/// Why a curve on the surface contributes nothing to the solution count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PositivityExclusion {
    /// Two components are negatives of each other, so no parameter makes
    /// every coordinate a positive integer.
    OppositeSigns,
    /// y3 always equals y1 or y2, which the s = 2 count rejects outright.
    RepeatedAcrossSides,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditedCurve {
    pub curve: ParametricCurve,
    pub exclusion: PositivityExclusion,
}

impl fmt::Display for ParametricCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| rat_poly_text(c)).collect();
        write!(f, "({})", comps.join(", "))
    }
}

fn rat_poly_text(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let lead = out.is_empty();
        let mag = if c.numer().sign() == Sign::Minus {
            out.push_str(if lead { "-" } else { " - " });
            -c
        } else {
            if !lead {
                out.push_str(" + ");
            }
            c.clone()
        };
        let mag_text = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("{}/{}", mag.numer(), mag.denom())
        };
        match k {
            0 => out.push_str(&mag_text),
            _ => {
                if !mag.is_one() {
                    out.push_str(&mag_text);
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Serialize for ParametricCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let components: Vec<Vec<[String; 2]>> = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|q| [q.numer().to_string(), q.denom().to_string()])
                    .collect()
            })
            .collect();
        let mut st = serializer.serialize_struct("ParametricCurve", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("components", &components)?;
        st.end()
    }
}

impl Serialize for PositivityExclusion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            PositivityExclusion::OppositeSigns => "opposite-signs",
            PositivityExclusion::RepeatedAcrossSides => "repeated-across-sides",
        })
    }
}

impl Serialize for AuditedCurve {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("AuditedCurve", 2)?;
        st.serialize_field("curve", &self.curve)?;
        st.serialize_field("excluded_because", &self.exclusion)?;
        st.end()
    }
}

/// All catalogue curves lying on the surface, each with the reason it
/// carries no counted point. Requires monic g so that the constants solved
/// for are exactly the integer roots of monic equations.
pub fn family_audit(spec: &SurfaceSpec) -> Result<Vec<AuditedCurve>, SurfaceError> {
    if !spec.g.is_monic() {
        return Err(SurfaceError::InvalidOperand(
            "family audit solves monic root equations; depress the polynomial first".into(),
        ));
    }
    let g = &spec.g;
    let eps3 = BigInt::from(spec.eps3);
    let t = IntPolynomial::from_i64(&[0, 1]);
    let neg_t = IntPolynomial::from_i64(&[0, -1]);
    let t2 = IntPolynomial::from_i64(&[0, 0, 1]);
    let neg_t2 = IntPolynomial::from_i64(&[0, 0, -1]);
    let konst = |m: &BigInt| IntPolynomial::constant(m.clone());

    let mut out = Vec::new();
    let mut push = |degree: u8, comps: [IntPolynomial; 3], exclusion: PositivityExclusion| {
        let substituted = g
            .compose(&comps[0])
            .add(&g.compose(&comps[1]))
            .sub(&g.compose(&comps[2]).mul_scalar(&eps3))
            .sub(&IntPolynomial::constant(spec.c_n.clone()));
        assert!(
            substituted.is_zero(),
            "catalogue produced a curve off the surface: ({}, {}, {})",
            comps[0], comps[1], comps[2]
        );
        out.push(AuditedCurve {
            curve: ParametricCurve {
                degree,
                components: rational_components(&comps, degree),
            },
            exclusion,
        });
    };

    // (t, -t, m) and (t^2, -t^2, m): the first two terms collapse to a
    // constant only when g(t) + g(-t) does; then e3*g(m) = c0 - c_n.
    let even_comb = g.add(&g.reflect());
    if even_comb.degree_or_zero() == 0 {
        let c0 = even_comb.coeff(0);
        let target = (&c0 - &spec.c_n) * &eps3;
        for m in integer_roots(&g.sub(&IntPolynomial::constant(target.clone())))? {
            push(1, [t.clone(), neg_t.clone(), konst(&m)], PositivityExclusion::OppositeSigns);
            push(
                2,
                [t2.clone(), neg_t2.clone(), konst(&m)],
                PositivityExclusion::OppositeSigns,
            );
        }
    }

    // (t, m, t), (m, t, t), (t^2, m, t^2): the repeated component cancels
    // only when it appears on both sides, i.e. s = 2; then g(m) = c_n.
    if spec.s == 2 {
        for m in integer_roots(&g.sub(&IntPolynomial::constant(spec.c_n.clone())))? {
            push(
                1,
                [t.clone(), konst(&m), t.clone()],
                PositivityExclusion::RepeatedAcrossSides,
            );
            push(
                1,
                [konst(&m), t.clone(), t.clone()],
                PositivityExclusion::RepeatedAcrossSides,
            );
            push(
                2,
                [t2.clone(), konst(&m), t2.clone()],
                PositivityExclusion::RepeatedAcrossSides,
            );
        }
    }

    // (t, m, -t) and (m, t, -t): need g(t) - e3*g(-t) constant c1; then
    // g(m) = c_n - c1.
    let skew_comb = g.sub(&g.reflect().mul_scalar(&eps3));
    if skew_comb.degree_or_zero() == 0 {
        let c1 = skew_comb.coeff(0);
        let target = &spec.c_n - &c1;
        for m in integer_roots(&g.sub(&IntPolynomial::constant(target.clone())))? {
            push(
                1,
                [t.clone(), konst(&m), neg_t.clone()],
                PositivityExclusion::OppositeSigns,
            );
            push(
                1,
                [konst(&m), t.clone(), neg_t.clone()],
                PositivityExclusion::OppositeSigns,
            );
        }
    }
    Ok(out)
}

fn rational_components(comps: &[IntPolynomial; 3], degree: u8) -> [Vec<BigRational>; 3] {
    let width = degree as usize + 1;
    let make = |p: &IntPolynomial| -> Vec<BigRational> {
        (0..width).map(|k| BigRational::from_integer(p.coeff(k))).collect()
    };
    [make(&comps[0]), make(&comps[1]), make(&comps[2])]
}

/// All integer roots of a nonzero integer polynomial, ascending, found
/// exactly: the real line is cut at integer brackets of the derivative's
/// real roots (computed recursively), and each strictly monotone stretch
/// is binary-searched with exact big-integer evaluation. No factoring, no
/// floating point, no candidate caps.
pub fn integer_roots(p: &IntPolynomial) -> Result<Vec<BigInt>, SurfaceError> {
    if p.is_zero() {
        return Err(SurfaceError::InvalidOperand(
            "the zero polynomial vanishes everywhere".into(),
        ));
    }
    if p.degree_or_zero() == 0 {
        return Ok(Vec::new());
    }
    let radius = root_radius(p);
    let brackets = root_brackets(&p.derivative());
    let mut roots = Vec::new();
    for (lo, hi) in monotone_ranges(&radius, &brackets) {
        if let Some((at, exact)) = monotone_zero(p, &lo, &hi) {
            if exact {
                roots.push(at);
            }
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// Every root (real or complex) of p has magnitude below this bound: a
/// relaxed Fujiwara bound 2 * max_k |a_(d-k)|^(1/k) + 2, valid since the
/// leading coefficient is at least 1 in magnitude.
fn root_radius(p: &IntPolynomial) -> BigInt {
    let d = p.degree().expect("nonzero polynomial");
    let mut best = BigInt::zero();
    for k in 1..=d {
        let a = p.coeff(d - k);
        if a.is_zero() {
            continue;
        }
        let r = BigInt::from(a.magnitude().nth_root(k as u32));
        if r > best {
            best = r;
        }
    }
    best * 2 + 2
}

/// Sorted integers c such that every real root of q lies in [c, c+1).
fn root_brackets(q: &IntPolynomial) -> Vec<BigInt> {
    match q.degree().unwrap_or(0) {
        0 => Vec::new(),
        1 => {
            // the single root -b/a lies in [floor(-b/a), floor(-b/a) + 1)
            let floor = (-q.coeff(0)).div_floor(&q.coeff(1));
            vec![floor]
        }
        _ => {
            let radius = root_radius(q);
            let inner = root_brackets(&q.derivative());
            let mut out = Vec::new();
            for (lo, hi) in monotone_ranges(&radius, &inner) {
                if let Some((at, _)) = monotone_zero(q, &lo, &hi) {
                    out.push(at);
                }
            }
            // roots inside an open gap (c, c+1) between stretches keep the
            // gap's own bracket
            out.extend(inner);
            out.sort();
            out.dedup();
            out
        }
    }
}

/// Closed integer ranges tiling [-radius, radius] such that no derivative
/// root (each confined to some [c, c+1) from `brackets`) lies strictly
/// inside a range's real hull — so the polynomial is strictly monotone on
/// each range.
fn monotone_ranges(radius: &BigInt, brackets: &[BigInt]) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    let mut lo = -radius.clone();
    for c in brackets {
        let hi = c.clone().min(radius.clone());
        if lo <= hi {
            out.push((lo.clone(), hi));
        }
        let next = c + 1;
        if next > lo {
            lo = next;
        }
    }
    if lo <= *radius {
        out.push((lo, radius.clone()));
    }
    out
}

/// The unique zero of a strictly monotone stretch, if any: returns the
/// integer where p vanishes exactly (flag true), or the left end of the
/// unit interval holding a non-integer sign change (flag false).
fn monotone_zero(p: &IntPolynomial, lo: &BigInt, hi: &BigInt) -> Option<(BigInt, bool)> {
    let s_lo = p.eval(lo).sign();
    if s_lo == Sign::NoSign {
        return Some((lo.clone(), true));
    }
    let s_hi = p.eval(hi).sign();
    if s_hi == Sign::NoSign {
        return Some((hi.clone(), true));
    }
    if s_lo == s_hi {
        return None;
    }
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    let two = BigInt::from(2);
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi).div_floor(&two);
        match p.eval(&mid).sign() {
            Sign::NoSign => return Some((mid, true)),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Some((lo, false))
}

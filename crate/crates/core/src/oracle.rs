//! Independent recomputation paths.
//!
//! Nothing here shares algorithms with the fast implementations it checks:
//! counting is a literal 2s-nested loop over ordered tuples, and the
//! singularity test works on floating-point roots instead of exact
//! resultants. The oracles ship in the library (not only in test code) so
//! any published number can be revalidated with `--oracle` from the CLI.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use crate::domain::Domain;
use crate::enumeration::CountSummary;
use crate::poly::IntPolynomial;
use crate::surface::SurfaceSpec;
use crate::OracleError;

#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest domain the quadruple loop will walk (s = 2).
    pub max_b_s2: u64,
    /// Largest domain the sextuple loop will walk (s = 3).
    pub max_b_s3: u64,
    /// Relative precision target for numeric roots.
    pub root_tolerance: f64,
    /// Membership slack when comparing c_n against numeric critical sums,
    /// scaled by max(1, |c_n|).
    pub membership_tolerance: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_b_s2: 30,
            max_b_s3: 12,
            root_tolerance: 1e-10,
            membership_tolerance: 1e-6,
        }
    }
}

/// Count ordered solutions by brute force: all |D|^(2s) ordered tuples,
/// exact big-integer sums, classification inline.
pub fn brute_counts(
    f: &IntPolynomial,
    s: u8,
    domain: &Domain,
    cfg: &OracleConfig,
) -> Result<CountSummary, OracleError> {
    let cap = match s {
        2 => cfg.max_b_s2,
        3 => cfg.max_b_s3,
        other => return Err(OracleError::UnsupportedS(other)),
    };
    if domain.len() > cap {
        return Err(OracleError::BudgetExceeded {
            size: domain.len(),
            max: cap,
        });
    }
    let points = domain
        .points()
        .map_err(|e| OracleError::BadDomain(e.to_string()))?;
    let v: Vec<BigInt> = points.iter().map(|&p| f.eval_i64(p)).collect();
    let n = v.len();

    let mut total = 0u64;
    let mut trivial = 0u64;
    let mut shared = 0u64;
    let mut disjoint = 0u64;

    if s == 2 {
        for i1 in 0..n {
            for i2 in 0..n {
                let lhs = &v[i1] + &v[i2];
                for i3 in 0..n {
                    let need = &lhs - &v[i3];
                    for i4 in 0..n {
                        if v[i4] == need {
                            total += 1;
                            let mut a = [i1, i2];
                            let mut b = [i3, i4];
                            a.sort_unstable();
                            b.sort_unstable();
                            if a == b {
                                trivial += 1;
                            } else if a[0] == b[0]
                                || a[0] == b[1]
                                || a[1] == b[0]
                                || a[1] == b[1]
                            {
                                shared += 1;
                            } else {
                                disjoint += 1;
                            }
                        }
                    }
                }
            }
        }
    } else {
        for i1 in 0..n {
            for i2 in 0..n {
                let s12 = &v[i1] + &v[i2];
                for i3 in 0..n {
                    let lhs = &s12 + &v[i3];
                    for i4 in 0..n {
                        let r4 = &lhs - &v[i4];
                        for i5 in 0..n {
                            let need = &r4 - &v[i5];
                            for i6 in 0..n {
                                if v[i6] == need {
                                    total += 1;
                                    let mut a = [i1, i2, i3];
                                    let mut b = [i4, i5, i6];
                                    a.sort_unstable();
                                    b.sort_unstable();
                                    if a == b {
                                        trivial += 1;
                                    } else if intersects(&a, &b) {
                                        shared += 1;
                                    } else {
                                        disjoint += 1;
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    Ok(CountSummary {
        polynomial: f.clone(),
        s,
        b: domain.len(),
        total,
        trivial,
        shared,
        disjoint,
    })
}

fn intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    false
}

/// Numeric counterpart of the exact singularity test: find the complex
/// critical points of g by root iteration, form every signed critical sum,
/// and check whether c_n lands within tolerance of one.
pub fn numeric_singular_test(spec: &SurfaceSpec, cfg: &OracleConfig) -> Result<bool, OracleError> {
    let deg = spec.g.degree_or_zero();
    if deg > 12 {
        return Err(OracleError::DegreeTooHigh { found: deg, max: 12 });
    }
    let dg = spec.g.derivative();
    let crit = aberth_roots(&dg, cfg.root_tolerance)?;
    let g_values: Vec<Complex64> = crit.iter().map(|&z| eval_complex(&spec.g, z)).collect();

    let c_n = bigint_to_f64(&spec.c_n);
    let tol = cfg.membership_tolerance * c_n.abs().max(1.0);
    let eps3 = f64::from(spec.eps3);
    for &a in &g_values {
        for &b in &g_values {
            for &c in &g_values {
                let sum = a + b - eps3 * c;
                if (sum - Complex64::new(c_n, 0.0)).norm() <= tol {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// All complex roots of an integer polynomial via Aberth-Ehrlich iteration.
pub fn aberth_roots(p: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>, OracleError> {
    let deg = match p.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(d) => d,
    };
    let coeffs = scaled_f64_coeffs(p);
    if deg == 1 {
        return Ok(vec![Complex64::new(-coeffs[0] / coeffs[1], 0.0)]);
    }

    // Cauchy-style inclusion radius for initial guesses on a circle.
    let lead = coeffs[deg].abs();
    let radius = 1.0
        + coeffs[..deg]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.45;
            Complex64::from_polar(radius * 0.85, angle)
        })
        .collect();

    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * k as f64)
        .collect();

    let mut converged = false;
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let pv = horner(&coeffs, z[i]);
            let dv = horner(&deriv, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let w = if dv.norm() == 0.0 {
                Complex64::new(1e-12, 1e-12)
            } else {
                pv / dv
            };
            let mut sum = Complex64::new(0.0, 0.0);
            for (j, &zj) in z.iter().enumerate() {
                if j != i {
                    let diff = z[i] - zj;
                    if diff.norm() > 0.0 {
                        sum += diff.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * sum;
            let step = if denom.norm() == 0.0 { w } else { w / denom };
            z[i] -= step;
            let rel = step.norm() / z[i].norm().max(1.0);
            max_step = max_step.max(rel);
        }
        if max_step < tol * 1e-2 {
            converged = true;
            break;
        }
    }

    if !converged {
        // Multiple roots stall the iteration short of the step target;
        // accept a root cluster whose residuals are still numerically zero.
        let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
        for &zi in &z {
            let bound = scale * zi.norm().max(1.0).powi(deg as i32) * 1e-7;
            if horner(&coeffs, zi).norm() > bound {
                return Err(OracleError::ConvergenceFailure(format!(
                    "residual {:.3e} above bound {:.3e} at {:?}",
                    horner(&coeffs, zi).norm(),
                    bound,
                    zi
                )));
            }
        }
    }
    Ok(z)
}

fn horner(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn eval_complex(p: &IntPolynomial, z: Complex64) -> Complex64 {
    let coeffs = scaled_f64_coeffs_raw(p.coeffs());
    horner(&coeffs, z)
}

fn bigint_to_f64(v: &BigInt) -> f64 {
    v.to_f64().unwrap_or(if v.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Coefficients as f64, uniformly downscaled by a power of two when they
/// exceed the double range (roots are invariant under uniform scaling).
fn scaled_f64_coeffs(p: &IntPolynomial) -> Vec<f64> {
    scaled_f64_coeffs_raw(p.coeffs())
}

fn scaled_f64_coeffs_raw(coeffs: &[BigInt]) -> Vec<f64> {
    let max_bits = coeffs.iter().map(|c| c.bits()).max().unwrap_or(0);
    if max_bits <= 960 {
        coeffs.iter().map(bigint_to_f64).collect()
    } else {
        let shift = (max_bits - 960) as usize;
        coeffs.iter().map(|c| bigint_to_f64(&(c >> shift))).collect()
    }
}

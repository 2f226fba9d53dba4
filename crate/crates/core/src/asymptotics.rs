//! Growth-rate ladders: run the enumerator over increasing bounds, fit a
//! log-log slope to the disjoint counts, and compare it with the exponents
//! the equation's degree and arity imply.
//!
//! The fit uses the DISJOINT class only — that is the class whose scarcity
//! is at stake; shared solutions have separate structure and are reported
//! but not fitted. Rungs with a zero disjoint count are excluded from the
//! fit rather than smoothed, since log(count + 1) would bias exactly the
//! small counts that matter here. Finite-size effects are expected, so
//! verdicts speak of consistency within a tolerance, never confirmation.

use rayon::prelude::*;
use std::time::Instant;

use crate::cache::{RunCache, RunKey};
use crate::domain::Domain;
use crate::enumeration::{enumerate, CountSummary, EnumerateOptions};
use crate::poly::IntPolynomial;
use crate::report::CountsDocument;
use crate::AsymptoticsError;

/// Default slack when comparing a fitted slope against a theoretical
/// exponent.
pub const DEFAULT_TOLERANCE: f64 = 0.15;

/// Exponent of the ladder the command-line self-test must recover: the
/// synthetic counts below grow exactly like B^(4/3).
pub const SELFTEST_POINTS: [(u64, u64); 4] =
    [(8, 80), (64, 1280), (512, 20480), (4096, 327680)];
pub const SELFTEST_SLOPE: f64 = 4.0 / 3.0;

/// The comparison exponents for one (degree, arity) pair.
///
/// For side length s and degree d, the nontrivial-solution bound carries
/// exponent 2s-3 + max(1/3, theta_d) with theta_d = 2/sqrt(d) + 1/(d-1);
/// s = 3 additionally has the classical 7/2 exponent; the trivial count
/// itself grows like B^s, which is the threshold paucity is measured
/// against.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundProfile {
    pub d: usize,
    pub s: u8,
    pub hua_exponent: Option<f64>,
    pub theorem_exponent: f64,
    pub paucity_threshold: f64,
}

impl BoundProfile {
    pub fn new(d: usize, s: u8) -> Self {
        assert!(matches!(s, 2 | 3), "side length must be 2 or 3");
        assert!(d >= 2, "degree must be at least 2");
        let theta = 2.0 / (d as f64).sqrt() + 1.0 / (d as f64 - 1.0);
        BoundProfile {
            d,
            s,
            hua_exponent: (s == 3).then_some(3.5),
            theorem_exponent: (2 * s as usize - 3) as f64 + theta.max(1.0 / 3.0),
            paucity_threshold: s as f64,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum FitOutcome {
    Fitted { slope: f64, stderr: f64 },
    /// Fewer than three rungs had a nonzero disjoint count.
    Insufficient { nonzero_points: usize },
}

/// Ordinary least squares of ln(count) on ln(B) over the points with
/// count > 0. Bounds must be distinct (ladders enforce strict increase).
pub fn fit_exponent(points: &[(u64, u64)]) -> FitOutcome {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|&&(_, count)| count > 0)
        .map(|&(b, count)| ((b as f64).ln(), (count as f64).ln()))
        .collect();
    if logs.len() < 3 {
        return FitOutcome::Insufficient {
            nonzero_points: logs.len(),
        };
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = logs
        .iter()
        .map(|p| (p.1 - (slope * p.0 + intercept)).powi(2))
        .sum();
    let stderr = (ss_res / (n - 2.0) / sxx).sqrt();
    FitOutcome::Fitted { slope, stderr }
}

/// Non-contradiction check of a fitted slope against a profile. The
/// wording is deliberate: a slope within tolerance of the exponent is
/// "consistent", never proof.
#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub consistent_with_theorem: bool,
    /// theorem_exponent - slope; positive means comfortably below.
    pub margin: f64,
    pub slope: f64,
    pub tolerance: f64,
    pub theorem_exponent: f64,
    pub paucity_threshold: f64,
    pub hua_exponent: Option<f64>,
    pub hua_consistent: Option<bool>,
}

pub fn compare_bounds(
    fit: &FitOutcome,
    profile: &BoundProfile,
    tolerance: f64,
) -> Option<Verdict> {
    match *fit {
        FitOutcome::Insufficient { .. } => None,
        FitOutcome::Fitted { slope, .. } => Some(Verdict {
            consistent_with_theorem: slope <= profile.theorem_exponent + tolerance,
            margin: profile.theorem_exponent - slope,
            slope,
            tolerance,
            theorem_exponent: profile.theorem_exponent,
            paucity_threshold: profile.paucity_threshold,
            hua_exponent: profile.hua_exponent,
            hua_consistent: profile.hua_exponent.map(|h| slope <= h + tolerance),
        }),
    }
}

#[derive(Clone, Debug)]
pub struct LadderRung {
    pub b: u64,
    /// A failed rung keeps its error text; the ladder carries on.
    pub outcome: Result<CountSummary, String>,
}

#[derive(Clone, Debug)]
pub struct LadderReport {
    pub polynomial: IntPolynomial,
    pub s: u8,
    pub rungs: Vec<LadderRung>,
    pub fit: FitOutcome,
}

impl LadderReport {
    /// (B, disjoint) over the successful rungs, ladder order.
    pub fn disjoint_points(&self) -> Vec<(u64, u64)> {
        self.rungs
            .iter()
            .filter_map(|r| r.outcome.as_ref().ok().map(|s| (r.b, s.disjoint)))
            .collect()
    }

    pub fn any_rung_succeeded(&self) -> bool {
        self.rungs.iter().any(|r| r.outcome.is_ok())
    }
}

#[derive(Clone, Debug, Default)]
pub struct LadderOptions<'a> {
    pub enumerate: EnumerateOptions,
    /// Reuse and persist per-rung counts here; a rerun after interruption
    /// picks up where it stopped.
    pub cache: Option<&'a RunCache>,
    /// Run rungs concurrently. Off by default: each rung already
    /// parallelizes internally, and sequential rungs keep peak memory to
    /// one table.
    pub parallel: bool,
}

pub fn run_ladder(
    f: &IntPolynomial,
    s: u8,
    b_list: &[u64],
    opts: &LadderOptions,
) -> Result<LadderReport, AsymptoticsError> {
    if b_list.len() < 2 || b_list[0] == 0 || b_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AsymptoticsError::InvalidLadder);
    }
    let run_rung = |&b: &u64| -> LadderRung {
        let key = RunKey::enumerate(f, s, &Domain::Box { bound: b });
        if let Some(cached) = opts.cache.and_then(|c| c.load(&key)) {
            if cached.s == s && cached.b == b {
                if let Ok(summary) = cached.to_summary() {
                    return LadderRung {
                        b,
                        outcome: Ok(summary),
                    };
                }
            }
        }
        let started = Instant::now();
        match enumerate(f, s, b, &opts.enumerate) {
            Ok(run) => {
                if let Some(cache) = opts.cache {
                    let doc = CountsDocument::new(
                        &run.summary,
                        "box",
                        started.elapsed().as_millis() as u64,
                    );
                    if let Err(err) = cache.store(&key, &doc) {
                        eprintln!(
                            "{}",
                            serde_json::json!({
                                "warning": "cache write failed",
                                "reason": err.to_string(),
                            })
                        );
                    }
                }
                LadderRung {
                    b,
                    outcome: Ok(run.summary),
                }
            }
            Err(err) => LadderRung {
                b,
                outcome: Err(err.to_string()),
            },
        }
    };
    let rungs: Vec<LadderRung> = if opts.parallel {
        b_list.par_iter().map(run_rung).collect()
    } else {
        b_list.iter().map(run_rung).collect()
    };
    let points: Vec<(u64, u64)> = rungs
        .iter()
        .filter_map(|r| r.outcome.as_ref().ok().map(|s| (r.b, s.disjoint)))
        .collect();
    Ok(LadderReport {
        polynomial: f.clone(),
        s,
        rungs,
        fit: fit_exponent(&points),
    })
}

//! JSON document shapes emitted by the command-line driver and stored in
//! the result cache, plus the CSV/TSV text formats.
//!
//! Every document carries the schema tag and serializes with a fixed field
//! order, so identical inputs (and cache states) produce byte-identical
//! output. Enumeration documents carry their original `elapsed_ms` through
//! the cache on purpose: a replayed run re-emits the stored bytes. Census
//! documents carry no timing at all — they are deterministic functions of
//! their inputs.

use serde::{Deserialize, Serialize};

use crate::asymptotics::{FitOutcome, LadderReport, Verdict};
use crate::depress::DepressedForm;
use crate::domain::Domain;
use crate::enumeration::{CountSummary, SolutionRecord};
use crate::poly::IntPolynomial;
use crate::surface::CensusReport;
use crate::{PolyError, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsBlock {
    pub total: u64,
    pub trivial: u64,
    pub shared: u64,
    pub disjoint: u64,
}

impl From<&CountSummary> for CountsBlock {
    fn from(s: &CountSummary) -> Self {
        CountsBlock {
            total: s.total,
            trivial: s.trivial,
            shared: s.shared,
            disjoint: s.disjoint,
        }
    }
}

/// One enumeration run. `mode` is "box" for the plain [1,B] domain and
/// "image" for a run over a depressed polynomial's image progression.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountsDocument {
    pub schema: String,
    pub poly: String,
    pub d: usize,
    pub s: u8,
    #[serde(rename = "B")]
    pub b: u64,
    pub mode: String,
    pub counts: CountsBlock,
    pub elapsed_ms: u64,
}

impl CountsDocument {
    pub fn new(summary: &CountSummary, mode: &str, elapsed_ms: u64) -> Self {
        CountsDocument {
            schema: SCHEMA.to_string(),
            poly: summary.polynomial.to_string(),
            d: summary.polynomial.degree_or_zero(),
            s: summary.s,
            b: summary.b,
            mode: mode.to_string(),
            counts: CountsBlock::from(summary),
            elapsed_ms,
        }
    }

    pub fn to_summary(&self) -> Result<CountSummary, PolyError> {
        Ok(CountSummary {
            polynomial: IntPolynomial::parse(&self.poly)?,
            s: self.s,
            b: self.b,
            total: self.counts.total,
            trivial: self.counts.trivial,
            shared: self.counts.shared,
            disjoint: self.counts.disjoint,
        })
    }
}

/// Singular tails are 1-tuples for s = 2 and 3-tuples for s = 3; the
/// sample serializes flat in the first case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum TailSample {
    Flat(Vec<i64>),
    Nested(Vec<Vec<i64>>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CensusDocument {
    pub schema: String,
    pub g: String,
    pub s: u8,
    #[serde(rename = "B")]
    pub b: u64,
    pub mode: String,
    pub singular_count: u64,
    pub singular_n_sample: TailSample,
    pub critical_sum_poly: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count_per_b2: Option<f64>,
}

impl CensusDocument {
    pub fn from_report(report: &CensusReport) -> Self {
        let mode = match report.domain {
            Domain::Box { .. } => "box",
            Domain::Progression { .. } => "image",
        };
        let sample = if report.s == 2 {
            TailSample::Flat(report.singular_sample.iter().map(|t| t[0]).collect())
        } else {
            TailSample::Nested(report.singular_sample.clone())
        };
        CensusDocument {
            schema: SCHEMA.to_string(),
            g: report.g.display_with('y'),
            s: report.s,
            b: report.domain.len(),
            mode: mode.to_string(),
            singular_count: report.singular_count,
            singular_n_sample: sample,
            critical_sum_poly: report.critical_sum.poly.display_with('z'),
            count_per_b2: report.count_per_b2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DepressDocument {
    pub schema: String,
    pub f: String,
    pub d: usize,
    pub g: String,
    pub map: String,
    pub map_a: String,
    pub map_b: String,
    pub scale: String,
    pub residual: String,
}

impl DepressDocument {
    pub fn new(f: &IntPolynomial, form: &DepressedForm) -> Self {
        DepressDocument {
            schema: SCHEMA.to_string(),
            f: f.to_string(),
            d: f.degree_or_zero(),
            g: form.g.display_with('y'),
            map: form.map.text(),
            map_a: form.map.a.to_string(),
            map_b: form.map.b.to_string(),
            scale: form.scale.to_string(),
            residual: form.residual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RungDocument {
    #[serde(rename = "B")]
    pub b: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<CountsBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FitDocument {
    Fitted { slope: f64, stderr: f64 },
    Insufficient { nonzero_points: usize },
}

impl From<&FitOutcome> for FitDocument {
    fn from(fit: &FitOutcome) -> Self {
        match *fit {
            FitOutcome::Fitted { slope, stderr } => FitDocument::Fitted { slope, stderr },
            FitOutcome::Insufficient { nonzero_points } => {
                FitDocument::Insufficient { nonzero_points }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictDocument {
    pub consistent_with_theorem: bool,
    pub margin: f64,
    pub slope: f64,
    pub tolerance: f64,
    pub theorem_exponent: f64,
    pub paucity_threshold: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hua_exponent: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hua_consistent: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LadderDocument {
    pub schema: String,
    pub poly: String,
    pub d: usize,
    pub s: u8,
    pub rungs: Vec<RungDocument>,
    pub fit: FitDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictDocument>,
}

impl LadderDocument {
    pub fn new(report: &LadderReport, verdict: Option<&Verdict>) -> Self {
        let rungs = report
            .rungs
            .iter()
            .map(|r| match &r.outcome {
                Ok(summary) => RungDocument {
                    b: r.b,
                    counts: Some(CountsBlock::from(summary)),
                    error: None,
                },
                Err(message) => RungDocument {
                    b: r.b,
                    counts: None,
                    error: Some(message.clone()),
                },
            })
            .collect();
        LadderDocument {
            schema: SCHEMA.to_string(),
            poly: report.polynomial.to_string(),
            d: report.polynomial.degree_or_zero(),
            s: report.s,
            rungs,
            fit: FitDocument::from(&report.fit),
            verdict: verdict.map(|v| VerdictDocument {
                consistent_with_theorem: v.consistent_with_theorem,
                margin: v.margin,
                slope: v.slope,
                tolerance: v.tolerance,
                theorem_exponent: v.theorem_exponent,
                paucity_threshold: v.paucity_threshold,
                hua_exponent: v.hua_exponent,
                hua_consistent: v.hua_consistent,
            }),
        }
    }
}

/// CSV for emitted solutions: header "x1,...,x{2s},class", one row per
/// ordered tuple, class spelled TRIVIAL/SHARED/DISJOINT.
pub fn solution_csv(s: u8, records: &[SolutionRecord]) -> String {
    let mut out = String::new();
    for i in 1..=(2 * s as usize) {
        out.push_str(&format!("x{i},"));
    }
    out.push_str("class\n");
    for record in records {
        for x in record.lhs.iter().chain(record.rhs.iter()) {
            out.push_str(&format!("{x},"));
        }
        out.push_str(record.class.as_str());
        out.push('\n');
    }
    out
}

/// Gnuplot-ready TSV over the successful rungs.
pub fn ladder_tsv(rungs: &[RungDocument]) -> String {
    let mut out = String::from("B\ttotal\ttrivial\tshared\tdisjoint\n");
    for rung in rungs {
        if let Some(c) = &rung.counts {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                rung.b, c.total, c.trivial, c.shared, c.disjoint
            ));
        }
    }
    out
}

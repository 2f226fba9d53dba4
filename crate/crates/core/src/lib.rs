//! Exact laboratory for equal sums of like polynomial values.
//!
//! Given an integer polynomial f of degree d >= 3 with positive leading
//! coefficient, the library counts and classifies ordered 2s-tuples in a box
//! with f(x_1)+...+f(x_s) = f(x_(s+1))+...+f(x_(2s)) for s in {2, 3}, and
//! provides the surrounding machinery:
//!
//! * [`poly`] / [`depress`] - exact polynomial arithmetic and the depression
//!   transform onto a monic normal form g over an arithmetic progression;
//! * [`enumeration`] - meet-in-the-middle counting with trivial / shared /
//!   disjoint classification;
//! * [`surface`] - the fixed-tail surfaces g(y1)+g(y2)-e3*g(y3) = c_n:
//!   exact singularity tests via resultant cascades, censuses, point counts
//!   and the audit of low-degree curve families;
//! * [`asymptotics`] - count ladders over doubling boxes, log-log exponent
//!   fits and comparison against proved exponent profiles;
//! * [`oracle`] - slow, independent recomputation paths (nested-loop counts,
//!   floating-point singularity checks) used to validate every fast path;
//! * [`cache`] / [`report`] - content-addressed result cache and the stable
//!   JSON document shapes shared with the CLI.

use thiserror::Error;

pub mod asymptotics;
pub mod cache;
pub mod depress;
pub mod domain;
pub mod enumeration;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod surface;

/// Version tag stamped into every JSON document and cache key.
pub const SCHEMA: &str = "paucity-lab/1";

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("degree {found} is below the minimum {min}")]
    DegreeTooLow { found: usize, min: usize },
    #[error("leading coefficient must be positive")]
    NonPositiveLeading,
    #[error("affine map must have a positive slope")]
    NonMonotoneMap,
    #[error("value does not fit in a machine word")]
    MachineRange,
}

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("s = {0} is unsupported; only s = 2 and s = 3 are implemented")]
    UnsupportedS(u8),
    #[error("domain is empty")]
    EmptyDomain,
    #[error("domain must be strictly ascending")]
    NonAscendingDomain,
    #[error("tuple lengths differ: lhs {lhs}, rhs {rhs}")]
    LengthMismatch { lhs: usize, rhs: usize },
    #[error("count does not fit in a machine word")]
    MachineRange,
    #[error(
        "sum table needs ~{required_bytes} bytes but the budget is {budget_bytes}; \
         a domain of size {fits_bound} would fit"
    )]
    MemoryBudgetExceeded {
        required_bytes: u64,
        budget_bytes: u64,
        fits_bound: u64,
    },
}

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("degree {found} is below the minimum {min}")]
    DegreeTooLow { found: usize, min: usize },
    #[error("s = {0} is unsupported; only s = 2 and s = 3 are implemented")]
    UnsupportedS(u8),
    #[error("fixed tail must have {expected} entries, found {found}")]
    WrongTupleLength { expected: usize, found: usize },
    #[error("fixed tail entries must be positive")]
    NonPositiveTuple,
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("domain size {size} exceeds the oracle budget {max}")]
    BudgetExceeded { size: u64, max: u64 },
    #[error("degree {found} exceeds the numeric root finder's comfort zone {max}")]
    DegreeTooHigh { found: usize, max: usize },
    #[error("root finding did not converge: {0}")]
    ConvergenceFailure(String),
    #[error("s = {0} is unsupported; only s = 2 and s = 3 are implemented")]
    UnsupportedS(u8),
    #[error("bad domain: {0}")]
    BadDomain(String),
}

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("ladder needs at least two strictly increasing bounds")]
    InvalidLadder,
}

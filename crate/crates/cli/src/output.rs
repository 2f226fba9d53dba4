//! Error-to-exit-code policy and the two output channels: documents as
//! pretty JSON on stdout, failures as single JSON lines on stderr.
//!
//! Exit codes: 0 success, 2 parse error (also clap's own code for bad
//! argument syntax), 3 violated precondition, 4 memory budget exceeded,
//! 5 oracle disagreement under --oracle.

use paucity_core::{AsymptoticsError, EnumerationError, OracleError, PolyError, SurfaceError};
use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Precondition(String),
    Budget(String),
    OracleMismatch(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
            CliError::OracleMismatch(_) => 5,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Precondition(_) => "precondition",
            CliError::Budget(_) => "memory-budget",
            CliError::OracleMismatch(_) => "oracle-mismatch",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m)
            | CliError::Precondition(m)
            | CliError::Budget(m)
            | CliError::OracleMismatch(m) => m,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(err: PolyError) -> Self {
        match err {
            PolyError::Parse(_) => CliError::Parse(err.to_string()),
            _ => CliError::Precondition(err.to_string()),
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(err: EnumerationError) -> Self {
        match err {
            EnumerationError::MemoryBudgetExceeded { .. } => CliError::Budget(err.to_string()),
            _ => CliError::Precondition(err.to_string()),
        }
    }
}

impl From<SurfaceError> for CliError {
    fn from(err: SurfaceError) -> Self {
        CliError::Precondition(err.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        CliError::Precondition(err.to_string())
    }
}

impl From<AsymptoticsError> for CliError {
    fn from(err: AsymptoticsError) -> Self {
        CliError::Precondition(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Precondition(err.to_string())
    }
}

/// Print the failure as one JSON line on stderr; returns the exit code.
pub fn fail(err: &CliError) -> i32 {
    eprintln!(
        "{}",
        serde_json::json!({
            "error": err.message(),
            "kind": err.kind(),
            "code": err.code(),
        })
    );
    err.code()
}

/// Pretty JSON plus trailing newline on stdout.
pub fn emit_json<T: Serialize>(doc: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(doc).expect("documents serialize")
    );
}

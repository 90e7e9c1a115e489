use thiserror::Error;

use crate::ir::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported format version {found} (expected {expected})")]
    Version { found: u32, expected: u32 },

    #[error("circuit failed validation:\n{0}")]
    Invalid(ValidationReport),

    #[error("dimension mismatch in {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("partial trace requires a nonempty keep set")]
    EmptyKeep,

    #[error("operator is not positive semidefinite (minimum eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("control qubit {qubit} collides with the controlled circuit")]
    ControlCollision { qubit: usize },

    #[error("circuit is not in normalized form (ancilla preparation must precede all gates)")]
    NonNormalized,

    #[error("{what} of {requested} exceeds the configured cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("unknown suite `{name}`; valid suites: {valid}")]
    UnknownSuite { name: String, valid: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

use thiserror::Error;

/// Errors raised by every fallible operation in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("density is undefined for an edgeless graph")]
    UndefinedDensity,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("pattern has {s} vertices, the solver limit is {limit}")]
    PatternTooLarge { s: usize, limit: usize },

    #[error("outside validity range: {0}")]
    Range(String),

    #[error("required structure absent: {0}")]
    StructureAbsent(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

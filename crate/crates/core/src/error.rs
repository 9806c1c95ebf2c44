use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown block `{0}`")]
    UnknownBlock(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the zero ideal is not allowed here: {0}")]
    ZeroIdeal(String),
    #[error("the unit ideal is not allowed here: {0}")]
    UnitIdeal(String),
    #[error("work limit of {limit} pair reductions exhausted")]
    ResourceExhausted { limit: u64 },
    #[error("containment certificate does not reproduce generator {index}")]
    CertificateFailure { index: usize },
    #[error("{0} is not contained in {1}")]
    NotContained(String, String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

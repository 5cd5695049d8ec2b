use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A fiber hit its point cap; any result built on it would be inexact.
    #[error("fiber at degree {degree:?} truncated after {cap} points")]
    TruncatedFiber { degree: Vec<i64>, cap: usize },

    #[error("completion budget of {0} candidates exceeded")]
    CompletionBudget(usize),

    #[error("time budget exhausted")]
    TimeBudget,

    #[error("malformed matrix file: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

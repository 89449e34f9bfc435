use thiserror::Error;

/// Errors for pmf construction and bound computations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid pmf: {0}")]
    InvalidPmf(String),

    #[error("not majorized: {0}")]
    NotMajorized(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("enumeration limit exceeded: {0}")]
    EnumerationLimit(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed input file: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid_argument(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn invalid_pmf(msg: impl Into<String>) -> Self {
        Error::InvalidPmf(msg.into())
    }
}

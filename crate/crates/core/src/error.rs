use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("{0}")]
    OutOfRange(String),

    #[error("{0}")]
    Domain(String),

    #[error("vector does not lie in the integral span of the standard basis: {0}")]
    NotInSpan(String),

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    /// Signals a bug rather than bad input.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation
    /// (e.g. a nonpositive argument to a mean on (0, ∞)).
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violates its declared range (e.g. a Heinz parameter
    /// outside [0, 1], β = 0 in a kernel denominator).
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("not Hermitian: {0}")]
    NotHermitian(String),

    #[error("not positive definite: {0}")]
    NotPositive(String),

    /// The hypothesis of a theorem checker is violated and exploration
    /// was not requested.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// The eigensolver failed its runtime accuracy contract.
    #[error("numerical accuracy contract violated: {0}")]
    Accuracy(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

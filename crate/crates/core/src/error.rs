use thiserror::Error;

/// Errors raised by the kernel, the model builders and the oracle solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("hypergeometric series hits a zero denominator at term {term}")]
    ZeroDenominator { term: usize },

    #[error("representation label must be a nonnegative integer, got {0}")]
    InvalidLabel(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("eigensolver did not converge: {0}")]
    NotConverged(String),

    #[error("verification failed: {name} residual {residual:e} exceeds {tol:e}")]
    Verification { name: String, residual: f64, tol: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

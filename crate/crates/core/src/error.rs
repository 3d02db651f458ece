//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the library.
///
/// Variants are grouped so callers (notably the CLI) can map them onto
/// coarse failure classes: invalid parameters/configuration, bad data,
/// and numeric trouble.
#[derive(Debug, Error)]
pub enum Error {
    /// A model or training parameter is outside its legal range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Input data violates a precondition (e.g. negative features under
    /// Poisson noise, labels outside {+1, -1}).
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector/matrix dimensions do not line up.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// A dataset with no examples was passed to an operation that needs one.
    #[error("empty dataset")]
    EmptyDataset,

    /// A data or model file could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// A metric or statistic is undefined for the given inputs
    /// (e.g. R-squared with zero-variance truths).
    #[error("undefined result: {0}")]
    Undefined(String),

    /// Numerical failure that could not be recovered from.
    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn dim(msg: impl Into<String>) -> Self {
        Error::DimMismatch(msg.into())
    }
}

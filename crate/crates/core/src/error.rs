use thiserror::Error;

/// Errors raised by constructions, analysis and document decoding.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RibbonError {
    /// An argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Parameters are individually valid but violate a construction constraint.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// A numerical procedure failed to converge or bracket.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// The input lacks information the operation needs.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unsupported schema version {found:?} (expected {expected:?})")]
    Version { found: String, expected: String },
}

pub type Result<T, E = RibbonError> = std::result::Result<T, E>;

pub(crate) fn domain(msg: impl Into<String>) -> RibbonError {
    RibbonError::Domain(msg.into())
}

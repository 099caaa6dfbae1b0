use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the domain of an operation (zero where nonzero is required,
    /// a singular matrix, an unknown generator, a violated field condition, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Shapes or ambients that do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// The grading does not make the defining form of a family homogeneous.
    #[error("unsupported grading: {0}")]
    UnsupportedGrading(String),

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A fixed computation window was exceeded.
    #[error("window exceeded: {0}")]
    Window(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn dimension(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}

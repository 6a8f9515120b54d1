use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    /// An internal consistency check failed (a computed square did not close,
    /// a sequence that must be exact was not, ...).
    #[error("internal fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim(msg: impl Into<String>) -> Error {
    Error::Dimension(msg.into())
}

impl Error {
    /// Prefixes the message with a location such as a JSON pointer.
    pub fn at(self, location: &str) -> Error {
        let wrap = |m: String| format!("at {location}: {m}");
        match self {
            Error::Dimension(m) => Error::Dimension(wrap(m)),
            Error::RingMismatch(m) => Error::RingMismatch(wrap(m)),
            Error::Unsupported(m) => Error::Unsupported(wrap(m)),
            Error::Parse(m) => Error::Parse(wrap(m)),
            Error::Invalid(m) => Error::Invalid(wrap(m)),
            Error::Internal(m) => Error::Internal(wrap(m)),
        }
    }
}

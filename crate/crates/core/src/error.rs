use thiserror::Error;

use crate::io::IngestError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An enumeration or construction would exceed a configured limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// The operation is only defined for a different sequence length.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The quantity has no defined value for this input.
    #[error("undefined: {0}")]
    Undefined(String),

    /// Two routes that must agree did not. Always a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Ingest(#[from] IngestError),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

use crate::prelude::*;
use core::fmt;

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    InvalidInput(String),
    /// An element was used with a group it does not belong to.
    BackendMismatch(String),
    /// A configured size bound was exceeded.
    Resource { what: &'static str, limit: usize },
    /// The request is outside what the implemented backends can decide.
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn mismatch(msg: impl Into<String>) -> Self {
        Error::BackendMismatch(msg.into())
    }

    /// True for errors caused by size bounds rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(m) => write!(f, "invalid input: {m}"),
            Error::BackendMismatch(m) => write!(f, "backend mismatch: {m}"),
            Error::Resource { what, limit } => write!(f, "{what} exceeded limit {limit}"),
            Error::Unsupported(m) => write!(f, "unsupported: {m}"),
        }
    }
}

impl core::error::Error for Error {}

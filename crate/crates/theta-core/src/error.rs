//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Library result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Failure modes of the library.
///
/// `Domain` is a mathematical precondition violation (input outside the
/// domain of an operation), `Validation` a malformed configuration or input
/// object, and `Internal` a numeric failure that should not occur for inputs
/// meeting the documented preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    Domain(String),
    Validation(String),
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Validation(msg) => write!(f, "validation error: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn validation(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

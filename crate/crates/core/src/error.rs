use thiserror::Error;

/// Errors produced by the library. Each variant maps to a CLI exit code.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent input (lengths, degrees, negative values, parse failures).
    #[error("input error: {0}")]
    Input(String),
    /// A builder produced something that is not a valid object (e.g. a non-M-convex set).
    #[error("construction error: {0}")]
    Construction(String),
    /// An operation was called outside of its documented domain.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A configurable resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    Resource(String),
    /// An internal consistency check failed. These are bugs or genuine
    /// counterexamples and are never silently resolved.
    #[error("internal assertion failed: {0}")]
    Internal(String),
    /// A point lies outside the domain of a map (used by the gauge module).
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) | Error::Construction(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Precondition(_) | Error::Domain(_) => 2,
            Error::Resource(_) => 3,
            Error::Internal(_) => 4,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
pub(crate) use input_err;

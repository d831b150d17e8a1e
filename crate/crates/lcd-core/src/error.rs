//! Error type shared across the crate.

/// Failure categories, mirrored by the CLI's exit codes.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The requested value does not exist (zero inverse, minimum weight of the
    /// zero code, and similar).
    #[error("domain error: {0}")]
    Domain(String),

    /// The caller violated a precondition (mismatched lengths, parameters out
    /// of range, malformed input).
    #[error("usage error: {0}")]
    Usage(String),

    /// The computation would exceed a hard capacity guard (packed width,
    /// codeword enumeration limit, graph size).
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn resource(msg: impl Into<String>) -> Error {
    Error::Resource(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

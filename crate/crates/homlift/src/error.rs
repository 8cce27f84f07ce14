use thiserror::Error;

/// Errors surfaced by the public operations.
///
/// `Invalid` covers user-controllable mistakes (shape mismatches,
/// non-commuting squares, hypothesis violations). `Internal` marks states the
/// ambient category makes impossible; seeing one means a construction bug or
/// a falsified theorem, and the CLI maps it to its own exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

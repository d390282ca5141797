use alloc::string::String;

/// Errors raised by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed matrices, codeword lists or parameter strings.
    #[error("format error: {0}")]
    Format(String),
    /// A computation would exceed one of the configured [`crate::Guards`].
    #[error("resource guard `{guard}` exceeded: needs {needed}, limit {limit}")]
    Resource { guard: &'static str, needed: u128, limit: u128 },
    /// A transformation left no codewords.
    #[error("transformation produced an empty code")]
    EmptyCode,
    /// Unknown catalog id or parameters outside a family's feasibility box.
    #[error("catalog error: {0}")]
    Catalog(String),
    /// Two independent computations disagreed. Always a bug.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    /// A theorem-level invariant failed on a processed code.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn format_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

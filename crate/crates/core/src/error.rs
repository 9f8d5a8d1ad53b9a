use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed index set: {0}")]
    MalformedIndexSet(String),

    /// A finite result would not fit the configured size limits.
    #[error("too large: {0}")]
    TooLarge(String),

    /// The cardinal rewriter reached a term that no rule rewrites.
    #[error("no rule applies to {0}")]
    NoRuleApplies(String),

    /// Normalization needed a finite value that exceeds the evaluation budget.
    #[error("cannot normalize: {0}")]
    Unnormalizable(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }
}

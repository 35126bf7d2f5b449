use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at token {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity that must be an integer (or non-negative) came out otherwise.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("desk-scale limit exceeded: {0}")]
    Limit(String),

    #[error("degenerate triple: {0}")]
    Degenerate(String),

    #[error("weight scenario error: {0}")]
    Scenario(String),

    #[error("certificate violated: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

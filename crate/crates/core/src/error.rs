use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed word: {0}")]
    MalformedWord(String),

    /// Requested size exceeds the configured (or hard) limit.
    #[error("capacity exceeded: k = {k} is above the limit {limit}")]
    Capacity { k: usize, limit: usize },

    /// A structural claim about the tensors failed to hold.
    #[error("structure violation: {0}")]
    StructureViolation(String),

    #[error("parse error at {position}: {message}")]
    Parse { position: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::MalformedWord(msg.into())
    }

    pub(crate) fn parse(position: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            position: position.into(),
            message: message.into(),
        }
    }
}

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 (or adjacency-list) input.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// A configured search or size budget was exhausted.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: u64 },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
        }
    }

    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

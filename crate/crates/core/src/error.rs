use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Inputs that violate an operation's preconditions.
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A configured size bound would be exceeded.
    #[error("resource bound exceeded: {0}")]
    Resource(String),

    /// An internal consistency check failed. This signals a convention
    /// mismatch or a bug upstream, never bad user input.
    #[error("convention error: {0}")]
    Convention(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn convention(msg: impl Into<String>) -> Self {
        Error::Convention(msg.into())
    }
}

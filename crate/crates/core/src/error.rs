use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A precondition on arguments was violated.
    #[error("{0}")]
    Input(String),

    /// The predicted work (or memory) exceeds the configured cap.
    #[error("refused: {what} needs an estimated {estimate} elementary operations (cap {cap})")]
    Refused {
        what: String,
        estimate: u128,
        cap: u128,
    },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

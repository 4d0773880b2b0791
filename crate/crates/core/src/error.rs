use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or out-of-range input (bad index, subset of the wrong
    /// universe, violated instance assumption, ...).
    #[error("invalid input: {0}")]
    Input(String),

    /// A text document failed to parse.
    #[error("{0}")]
    Parse(#[from] ParseError),

    /// An explicitly requested solver does not apply to the instance.
    #[error("strategy not applicable: {0}")]
    Strategy(String),

    /// A solver produced a witness that does not check out. Always a bug.
    #[error("internal verification failure: {0}")]
    Verification(String),

    /// An exhaustive search would exceed its configured limit.
    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    Resource {
        what: &'static str,
        needed: String,
        limit: String,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn strategy(msg: impl Into<String>) -> Self {
        Error::Strategy(msg.into())
    }
}

/// Location-tagged parse failure. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

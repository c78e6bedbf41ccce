use std::fmt;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph or certificate file failed to parse; `line` is 1-based.
    Parse { line: usize, message: String },
    /// A documented precondition of the called operation does not hold.
    Precondition(String),
    /// A structural guarantee failed at runtime. Reaching this means the
    /// input satisfied the stated preconditions but an existence argument
    /// the implementation relies on did not deliver, i.e. a bug.
    InternalContradiction(String),
    /// The instance is larger than the exhaustive-search cutoff.
    CutoffExceeded(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => write!(f, "parse error at line {line}: {message}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::InternalContradiction(msg) => write!(f, "internal contradiction: {msg}"),
            Error::CutoffExceeded(msg) => write!(f, "cutoff exceeded: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;

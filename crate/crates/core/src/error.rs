use std::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A constructor was applied outside its domain (wrong size, or a
    /// middle-image where one is forbidden).
    Domain(String),
    /// A shape failed validation; carries one message per violated invariant.
    InvalidShape(Vec<String>),
    /// Malformed literal text, with the byte offset of the problem.
    Syntax { offset: usize, message: String },
    /// A count does not fit in 64 bits.
    Overflow(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidShape(violations) => {
                write!(f, "invalid shape: {}", violations.join("; "))
            }
            Error::Syntax { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            Error::Overflow(msg) => write!(f, "overflow: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl Error {
    pub fn invalid(violations: Vec<String>) -> Error {
        Error::InvalidShape(violations)
    }
}

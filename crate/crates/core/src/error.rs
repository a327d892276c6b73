use thiserror::Error;

/// Errors produced by the toolkit.
///
/// `Domain` covers violated preconditions (bad vertex, self-loop, operation
/// applied to a graph outside its contract), `Parse` carries the byte offset
/// of the first offending byte in a graph6 or edge-list record, and
/// `Capability` flags requests beyond the built-in search bounds rather than
/// invalid ones.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("capability error: {0}")]
    Capability(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }

    pub fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }
}

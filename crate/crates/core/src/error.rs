use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument fell outside the domain an operation accepts.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unrecognized symbol `{0}`")]
    UnknownSymbol(String),

    /// A codeword that no encoder in this crate could have produced.
    #[error("cannot decode codeword: {0}")]
    Decode(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

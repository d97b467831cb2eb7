use thiserror::Error;

/// Failures reported by the library.
///
/// Every variant carries a short human-readable message; the CLI prints it
/// verbatim on stderr.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A count, index or depth exceeds what the input can supply.
    #[error("range error: {0}")]
    Range(String),
    /// A stream or enumeration did not supply the values the operation needs.
    #[error("input error: {0}")]
    Input(String),
    /// A textual literal could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

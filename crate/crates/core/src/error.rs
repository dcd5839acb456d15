use std::path::PathBuf;

use thiserror::Error;

/// Errors produced while building pages, configuring a measure or running it.
#[derive(Debug, Error)]
pub enum Error {
    /// A rate was requested whose denominator is zero.
    #[error("undefined rate: {0} is zero")]
    UndefinedRate(&'static str),

    /// Input that violates a domain invariant (e.g. a line containing a line break).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The measure configuration cannot be applied to the given pages.
    #[error("configuration error: {0}")]
    Config(String),

    /// A document could not be parsed.
    #[error("parse error in {source_name}: {message}")]
    Parse {
        source_name: String,
        message: String,
    },

    /// Two files in a directory share the same stem.
    #[error("duplicate page id '{id}' ({first} and {second})")]
    DuplicateId {
        id: String,
        first: PathBuf,
        second: PathBuf,
    },

    /// A ground-truth page has no hypothesis counterpart.
    #[error("no hypothesis for ground-truth page '{0}'")]
    Unpaired(String),

    /// The best path returned by the solver does not have the expected shape.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

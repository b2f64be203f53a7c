use std::io;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported metric: {0}")]
    UnsupportedMetric(String),

    /// Malformed data file (trace, label, dictionary or report).
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Bad run configuration, with the offending line when known.
    #[error("config error (line {line}): {message}")]
    Config { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn parse(path: &str, line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            path: path.to_string(),
            line,
            message: msg.into(),
        }
    }

    pub fn config(line: usize, msg: impl Into<String>) -> Self {
        Error::Config {
            line,
            message: msg.into(),
        }
    }
}

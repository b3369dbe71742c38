use std::path::PathBuf;

use thiserror::Error;
use tourneylab_core::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid config: {0}")]
    Config(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: CoreError,
    },
    #[error("invalid certificate: {0}")]
    Certificate(#[source] CoreError),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot start thread pool: {0}")]
    ThreadPool(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 usage or parameters, 3 I/O, 4 malformed input
    /// file, 5 rejected certificate.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Config(_) | Self::Core(_) | Self::ThreadPool(_) => 2,
            Self::Io { .. } => 3,
            Self::Parse { .. } => 4,
            Self::Certificate(_) => 5,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

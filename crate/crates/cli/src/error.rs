use std::path::PathBuf;

/// Everything that can stop a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] crcodes::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: line {line}, column {column}: {msg}", path.display())]
    Parse { path: PathBuf, line: usize, column: usize, msg: String },
    #[error("{0}")]
    Usage(String),
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const RESOURCE: i32 = 3;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(crcodes::Error::Resource { .. }) => exit::RESOURCE,
            CliError::Core(crcodes::Error::Inconsistent(_) | crcodes::Error::Invariant(_)) => exit::MISMATCH,
            _ => exit::INPUT,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

pub type CliResult<T> = Result<T, CliError>;

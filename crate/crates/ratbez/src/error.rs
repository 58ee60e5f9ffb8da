use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] ratbez_core::Error),
    #[error("malformed curve JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed table CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("degree range {min}..={max} must lie within 2..=30")]
    DegreeRange { min: usize, max: usize },
    #[error("row n = {degree}: {source}")]
    Row {
        degree: usize,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed table: {0}")]
    Table(String),
    #[error("invalid plot request: {0}")]
    Plot(String),
}

impl Error {
    /// Process exit code: 3 for I/O failures, 2 for bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 3,
            Error::Csv(e) if matches!(e.kind(), csv::ErrorKind::Io(_)) => 3,
            Error::Row { source, .. } => source.exit_code(),
            _ => 2,
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

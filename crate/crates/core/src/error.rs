use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("malformed graph: {0}")]
    Graph(String),
    #[error("graph parse error on line {line}: {msg}")]
    GraphParse { line: usize, msg: String },
    #[error("fusion ring invariant violated: {0}")]
    Fusion(String),
    #[error("subset is not closed under fusion and duality: {0}")]
    NotClosed(String),
    #[error("completion failed: {0}")]
    Completion(String),
    #[error("double system invariant violated: {0}")]
    Double(String),
    #[error("no exact representative found: {0}")]
    NotExact(String),
    #[error("data file {path} not found")]
    MissingData { path: PathBuf },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

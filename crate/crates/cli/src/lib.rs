//! File formats and self-check suites for `orthodiff-core`, shared by the
//! `orthodiff` binary and its tests.

pub mod format;
pub mod verify;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid JSON: {0}")]
    Json(#[source] serde_json::Error),
    #[error("invalid scalar {0:?}")]
    Scalar(String),
    #[error(transparent)]
    Core(#[from] orthodiff_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

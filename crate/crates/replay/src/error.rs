use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = ReplayError> = std::result::Result<T, E>;

/// Anything that stops a check from producing a report. All of these map to
/// exit status 2.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Lattice(#[from] delpezzo::Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

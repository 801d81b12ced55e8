use coxsolomon_core::CoxError;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoxError),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },

    #[error("no bundled fixture for type {0} (fixtures exist for H3, H4, F4, E6, E7, E8)")]
    NoFixture(String),

    #[error("malformed fixture {name}: {reason}")]
    BadFixture { name: String, reason: String },

    #[error("no cache directory: pass --cache-dir or set COXSOLOMON_CACHE")]
    NoCacheDir,

    #[error("cannot start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    /// Process exit status: 2 for internal cross-check failures, 3 for
    /// every other error. 1 is reserved for theorem violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(
                CoxError::CrossCheckMismatch { .. }
                | CoxError::SingularA
                | CoxError::TypeAssignmentAmbiguous { .. },
            ) => 2,
            _ => 3,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

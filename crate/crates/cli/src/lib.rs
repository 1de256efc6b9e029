//! Configuration, caching and report plumbing behind the `verify` binary.

pub mod cache;
pub mod config;
pub mod run;

pub use cache::Cache;
pub use config::{load_lattice_config, parse_lattice_config, LatticeConfig, Suite, SuiteConfig};
pub use run::{run_suite, VersionedReport, Versions};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error(transparent)]
    Core(#[from] smoothhopf::Error),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// Process exit status for the error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ConfigInvalid(_) | CliError::Io { .. } => 2,
            CliError::Core(smoothhopf::Error::Parse(_) | smoothhopf::Error::OddLattice(_)) => 2,
            CliError::Core(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

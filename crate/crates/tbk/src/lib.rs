//! File formats, reports and the `tbk` command-line front end.

pub mod cli;
pub mod io;
pub mod report;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A typed error from the computation, surfaced under its variant name.
    #[error("{0}")]
    Domain(#[from] tbk_core::Error),
    /// Unreadable or malformed input.
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Input(_) | CliError::Usage(_) => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.name(),
            CliError::Input(_) => "InputError",
            CliError::Usage(_) => "UsageError",
        }
    }
}

//! Command-line front end: ring description files, reports and the bundled examples.

pub mod analysis;
pub mod bundled;
pub mod report;
pub mod spec;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}:{line}: {msg}")]
    Spec { file: String, line: usize, msg: String },

    #[error("{0}")]
    Validation(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("golden file mismatch ({} lines)", .0.len())]
    Golden(Vec<String>),

    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec { .. } | CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Golden(_) => 4,
        }
    }
}

impl From<thilb_core::Error> for CliError {
    fn from(e: thilb_core::Error) -> Self {
        match e {
            thilb_core::Error::BudgetExceeded(m) => CliError::Budget(m),
            other => CliError::Validation(other.to_string()),
        }
    }
}

/// Parses a closure name as accepted on the command line.
pub fn hilbert_tag(name: &str) -> Result<thilb_core::hilbert::ClosureTag, CliError> {
    thilb_core::hilbert::ClosureTag::parse(name).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown closure `{name}`; expected none, limit, tight, frobenius or contracted"
        ))
    })
}

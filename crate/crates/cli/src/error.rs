use galois_factor_core::Error as CoreError;
use std::path::PathBuf;
use thiserror::Error;

/// Exit status for input, usage and validation failures.
pub const EXIT_INVALID: i32 = 1;
/// Exit status when an enumeration would exceed its budget.
pub const EXIT_BUDGET: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    /// `line` is 1-based.
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid JSON document: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn format(line: usize, message: impl Into<String>) -> Self {
        CliError::Format {
            line,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::BudgetExceeded { .. }) => EXIT_BUDGET,
            _ => EXIT_INVALID,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

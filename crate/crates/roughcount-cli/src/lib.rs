//! Command-line companion to `roughcount-core`: file ingestion, command
//! dispatch, serialization, and the bundled-example verifier.

pub mod cmd;
pub mod input;
pub mod verify;

use std::fmt;

/// Errors with a documented process exit code: 2 for parse failures,
/// 3 for semantic failures, 4 for a verifier divergence-set mismatch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Parse(String),
    Semantic(String),
    Erratum(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::Erratum(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Semantic(_) => "semantic",
            CliError::Erratum(_) => "erratum",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (CliError::Parse(msg) | CliError::Semantic(msg) | CliError::Erratum(msg)) = self;
        // one-line machine-parsable error record
        write!(f, "error\t{}\t{}", self.kind(), msg)
    }
}

impl std::error::Error for CliError {}

impl From<roughcount_core::error::Error> for CliError {
    fn from(e: roughcount_core::error::Error) -> Self {
        CliError::Semantic(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

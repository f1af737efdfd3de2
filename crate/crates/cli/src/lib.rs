//! Configuration parsing, report types and command implementations behind
//! the `ellzeta` binary.

pub mod commands;
pub mod config;
pub mod report;

use std::fmt;

/// Exit status classes: 1 for bad input, 2 for failed computations, 3 for
/// failed verifications.
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Computation(ellzeta::Error),
    VerificationFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::Computation(_) => 2,
            CliError::VerificationFailed(_) => 3,
        }
    }

    /// Variant name of the library error behind a computation failure.
    pub fn code(&self) -> Option<String> {
        match self {
            CliError::Computation(e) => {
                let d = format!("{e:?}");
                Some(d.split(['(', ' ', '{']).next().unwrap_or_default().to_string())
            }
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::Computation(_) => "computation",
            CliError::VerificationFailed(_) => "verification",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) | CliError::VerificationFailed(m) => write!(f, "{m}"),
            CliError::Computation(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ellzeta::Error> for CliError {
    fn from(e: ellzeta::Error) -> Self {
        use ellzeta::Error::*;
        match e {
            InvalidInput(_) | InvalidPolynomial(_) | Dimension { .. } | NotABasis | NotTotallyPositive | UnsupportedModulus
            | ZeroForm | ZeroVector => CliError::Validation(e.to_string()),
            other => CliError::Computation(other),
        }
    }
}

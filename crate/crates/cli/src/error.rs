use thiserror::Error;

use crate::expr::{EvalError, ParseError};

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const FAILURE: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const CAP_EXCEEDED: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Core(#[from] domlex::Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

fn is_cap(e: &domlex::Error) -> bool {
    matches!(
        e,
        domlex::Error::CapExceeded { .. }
            | domlex::Error::OrderTooLarge { .. }
            | domlex::Error::IsomorphismLimit { .. }
    )
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) | CliError::Eval(EvalError { source: e, .. }) if is_cap(e) => {
                exit::CAP_EXCEEDED
            }
            _ => exit::USAGE,
        }
    }
}

use thiserror::Error;

use crate::params::Violation;

/// Errors raised by the engines. Every failure is a hard error; no engine
/// falls back to an approximation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameter validation failed: {}", format_violations(.0))]
    Validation(Vec<Violation>),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("numerical integrity: value {value} is {residue:e} away from an integer")]
    NumericalIntegrity { value: String, residue: f64 },

    #[error("internal consistency: {0}")]
    Internal(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

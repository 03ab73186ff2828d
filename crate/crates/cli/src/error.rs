use thiserror::Error;

use crate::parse::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("theorem violation: {0}")]
    Theorem(String),
}

impl CliError {
    /// 0 success, 1 usage or parse error, 2 domain precondition, 3 theorem violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::Domain(_) => 2,
            CliError::Theorem(_) => 3,
        }
    }
}

impl From<matroidal_core::Error> for CliError {
    fn from(e: matroidal_core::Error) -> Self {
        use matroidal_core::Error as E;
        match e {
            E::Domain(msg) | E::Guard(msg) => CliError::Domain(msg),
            E::AmbientMismatch { .. } | E::ExponentOverflow | E::VariableOutOfRange { .. } | E::MixedFields => {
                CliError::Domain(e.to_string())
            }
            // a failed mathematical check or a broken internal invariant
            E::TheoremViolation(_) | E::Internal(_) | E::PairBudget(_) => CliError::Theorem(e.to_string()),
        }
    }
}

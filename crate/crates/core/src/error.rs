use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Objects living in polynomial rings with different variable counts.
    #[error("ambient mismatch: expected {expected} variables, found {found}")]
    AmbientMismatch { expected: usize, found: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    /// The input is outside the domain where the operation is defined.
    #[error("precondition violated: {0}")]
    Domain(String),

    /// A checked mathematical statement failed on a concrete instance. For
    /// the inputs the statements cover this signals a bug in this crate.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("polynomials over different coefficient fields")]
    MixedFields,

    #[error("Buchberger pair budget of {0} exceeded")]
    PairBudget(usize),

    #[error("enumeration refused: {0}")]
    Guard(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn theorem(msg: impl Into<String>) -> Self {
        Error::TheoremViolation(msg.into())
    }
}

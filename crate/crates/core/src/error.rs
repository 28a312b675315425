use thiserror::Error;

/// Errors surfaced by the library.
///
/// Each variant carries a stable machine-readable code (see [`Error::code`])
/// so batch reports and exit statuses stay scriptable.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("field element does not belong to this field: {0}")]
    FieldMismatch(String),

    #[error("zero has no multiplicative inverse")]
    NonInvertible,

    #[error("curve is singular: 4s^3 + 27t^2 = 0")]
    SingularCurve,

    #[error("point is not on the curve: {0}")]
    OffCurve(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("evaluation at a pole of the function")]
    PoleEvaluation,

    #[error("budget exceeded: needs {required} states, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    // A theorem-forced identity failed to hold; this is a bug, not bad input.
    #[error("internal invariant breach: {0}")]
    InvariantBreach(String),

    #[error("invalid config: {0}")]
    Config(String),
}

impl Error {
    /// Stable machine-readable error code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidField(_) => "FIELD_INVALID",
            Error::FieldMismatch(_) => "FIELD_MISMATCH",
            Error::NonInvertible => "NON_INVERTIBLE",
            Error::SingularCurve => "CURVE_SINGULAR",
            Error::OffCurve(_) => "POINT_OFF_CURVE",
            Error::InvalidArgument(_) => "INVALID_ARGUMENT",
            Error::PoleEvaluation => "POLE_EVALUATION",
            Error::BudgetExceeded { .. } => "BUDGET_EXCEEDED",
            Error::HypothesisViolation(_) => "HYPOTHESIS_VIOLATION",
            Error::InvariantBreach(_) => "INVARIANT_BREACH",
            Error::Config(_) => "CONFIG_INVALID",
        }
    }

    /// Coarse category used by the CLI to pick an exit status.
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::BudgetExceeded { .. } => ErrorCategory::Budget,
            Error::HypothesisViolation(_) => ErrorCategory::Hypothesis,
            Error::InvariantBreach(_) => ErrorCategory::Invariant,
            _ => ErrorCategory::Config,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    Config,
    Budget,
    Hypothesis,
    Invariant,
}

pub type Result<T> = std::result::Result<T, Error>;

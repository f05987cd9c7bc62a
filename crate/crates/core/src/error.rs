use thiserror::Error;

/// Errors raised by the lab. Verification failures are never errors; they
/// are carried in the corresponding report types.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum LabError {
    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("invalid step function: {0}")]
    InvalidStepFunction(String),

    #[error("cannot parse `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("superlevel set reaches the window boundary at {0}")]
    WindowTooSmall(String),

    #[error("tail truncation could not be certified: {0}")]
    TailNotCertified(String),

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("unsupported dimension {0}; only d = 1 and d = 2 are tabulated")]
    UnsupportedDimension(u32),

    #[error("the L^p norm of the input function vanishes")]
    ZeroNorm,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl LabError {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        LabError::Parse { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, LabError>;

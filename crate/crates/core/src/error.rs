use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("arithmetic overflow while computing {0}")]
    ArithmeticOverflow(&'static str),

    #[error("s_{j}: least admissible value {least} is below s_{prev_index} = {previous}", prev_index = .j - 1)]
    MonotonicityViolation { j: usize, least: i64, previous: i64 },

    #[error("binomial closure violated: {0}")]
    NonBinomialEscape(String),

    #[error("negative exponent in family member {0}")]
    NegativeExponent(String),

    #[error("leading form of {member} is {found}, expected {expected}")]
    LeadingFormMismatch {
        member: String,
        expected: String,
        found: String,
    },

    #[error("division by (1-t) failed at step {step}: remainder {remainder}")]
    NotDivisible { step: usize, remainder: i64 },

    #[error("internal limit exceeded: {0}")]
    InternalLimit(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

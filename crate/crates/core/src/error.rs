use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("chain size mismatch: {left} vs {right}")]
    ChainSizeMismatch { left: usize, right: usize },

    #[error("size mismatch: {left} points vs {right} points")]
    SizeMismatch { left: usize, right: usize },

    #[error("closure violation: {left} * {right} = {product} is not in the element set")]
    ClosureViolation {
        left: String,
        right: String,
        product: String,
    },

    #[error("not a monoid: {0}")]
    NotAMonoid(String),

    #[error("invalid action: `{}` fails at {}", .0.law, .0.counterexample.as_deref().unwrap_or_default().join(", "))]
    InvalidAction(Box<VerificationReport>),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

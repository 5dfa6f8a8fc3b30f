use thiserror::Error;

/// Errors raised by construction, enumeration, bijections, and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is not in the structure")]
    InvalidVertex(u32),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("vertex {0} is proper; left/right classification is defined only for improper vertices")]
    ProperVertex(u32),
    #[error("input is not a member of {set}: {reason}")]
    Membership { set: &'static str, reason: String },
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    #[error("enumeration ceiling exceeded: {family} with n={n} has {count} members (ceiling {ceiling})")]
    CeilingExceeded {
        family: String,
        n: usize,
        count: String,
        ceiling: u64,
    },
    #[error("shape size {got} does not match expected size {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("truncation order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("degenerate exponent at t = {t0}: {expr} = 0")]
    DegenerateExponent { t0: i64, expr: String },
    #[error("internal arithmetic error: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::InvalidStructure(format!("json: {e}"))
    }
}

impl Error {
    pub fn degenerate(t0: i64, expr: &str) -> Self {
        Error::DegenerateExponent {
            t0,
            expr: expr.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

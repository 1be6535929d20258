use thiserror::Error;

/// Errors raised by the analysis, construction and verification routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("malformed rational {0:?}: expected `p/q` or `p` with q > 0")]
    Parse(String),

    #[error("series truncated too early: coefficients through order {need} are required, known only below {have}")]
    InsufficientTruncation { need: i64, have: i64 },

    #[error("A + 2B = 0: the closed-form Fuchs indices are undefined; use the generic engine")]
    DegenerateBalance,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("numeric verification needs at least one usable sample point")]
    NoSamples,

    #[error("integration did not converge after {doublings} step doublings (last relative change {change:e})")]
    NoConvergence { doublings: u32, change: f64 },

    #[error("invalid range: {0}")]
    Range(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors produced by the exact arithmetic, enumeration and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands live over different variable universes")]
    UniverseMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable `{0}` in universe")]
    DuplicateVariable(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero substituted into a negative power of `{0}`")]
    ZeroToNegativePower(String),
    #[error("denominator vanishes after substitution")]
    ZeroDenominator,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{what} = {value} is out of range {min}..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),
    #[error("series has a nonzero constant term")]
    NonzeroConstantTerm,
    #[error("limit undefined: {0}")]
    LimitUndefined(String),
    #[error("pole order {found} exceeds the allowed maximum {max}")]
    PoleOrderTooHigh { found: usize, max: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(what: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || value > max {
        Err(Error::OutOfRange {
            what,
            value,
            min,
            max,
        })
    } else {
        Ok(())
    }
}

use thiserror::Error;

/// Errors raised by the exact kernels and the checkers built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor `{0}` is not a monomial in e")]
    NonMonomialDivisor(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("limit at e = 0 diverges (term of degree {0})")]
    Divergent(i64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("identity `{identity}` is not defined for scheme `{scheme}`")]
    UnsupportedScheme { identity: String, scheme: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Usage-class errors come from malformed input rather than from the mathematics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::UnknownIdentity(_) | Error::UnsupportedScheme { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Crate error type.

use thiserror::Error;

/// Errors surfaced by the public operations.
///
/// Contract violations (a non-prime modulus, a zero polynomial where a
/// nonzero one is required, ...) are reported as errors; internal
/// inconsistencies that would indicate a bug are hard assertions instead.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("expected a prime, got {0}")]
    NotPrime(String),
    #[error("zero polynomial rejected: {0}")]
    ZeroPolynomial(&'static str),
    #[error("polynomial must be monic: {0}")]
    NotMonic(String),
    #[error("polynomial must be primitive (content 1)")]
    NotPrimitive,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("input polynomial is reducible (factor {0})")]
    Reducible(String),
    #[error("irreducibility undecided within budget")]
    IrreducibilityUnknown,
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("factorization incomplete (composite cofactor {0})")]
    IncompleteFactorization(String),
    #[error("discriminant mismatch: {0}")]
    DiscMismatch(String),
    #[error("polynomial is not p-regular at {0}; splitting undetermined")]
    NotPRegular(String),
    #[error("{0}")]
    Other(String),
}

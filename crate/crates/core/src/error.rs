//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not prime")]
    NotPrime { value: i64 },

    #[error("expected a positive integer, got {value}")]
    NotPositive { value: i64 },

    #[error("modulus must be at least 2, got {modulus}")]
    BadModulus { modulus: i64 },

    #[error("{value} is not invertible mod {modulus}")]
    NotInvertible { value: i64, modulus: i64 },

    #[error("moduli {first} and {second} are not coprime")]
    NotCoprime { first: i64, second: i64 },

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("invalid congruence instance: {0}")]
    BadInstance(&'static str),

    /// The classifier's standing hypothesis `n does not divide a` failed.
    #[error("hypothesis violated: modulus {n} divides leading coefficient {a}")]
    HypothesisViolated { a: i64, n: i64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
}

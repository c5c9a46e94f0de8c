use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subspace is not a two-sided ideal")]
    NotIdeal,

    #[error("Leibniz identity fails on (e{}, e{}, e{})", .0 + 1, .1 + 1, .2 + 1)]
    NotLeibniz(usize, usize, usize),

    #[error("operation requires a finite field, got {0}")]
    InfiniteField(FieldSpec),

    #[error("budget exceeded: {what} needs {required}, limit is {limit}")]
    BudgetExceeded {
        what: String,
        required: String,
        limit: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

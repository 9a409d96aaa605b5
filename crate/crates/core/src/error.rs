use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("field mismatch: F_{left} vs F_{right}")]
    FieldMismatch { left: u32, right: u32 },

    #[error("factor index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("ambient length {0} exceeds the supported maximum of 64 factors")]
    TooManyFactors(usize),

    #[error("generators {first} and {second} do not commute (form value {value})")]
    NonCommuting {
        first: usize,
        second: usize,
        value: u32,
    },

    #[error("resource budget exceeded: needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

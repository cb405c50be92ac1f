use thiserror::Error;

/// Errors produced by field construction, sequence handling and generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field of order {order} exceeds the table limit of {limit} nonzero elements")]
    TooLarge { order: u64, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{value} is not a valid element of a field of order {order}")]
    InvalidElement { value: u64, order: u64 },
    #[error("class count {m} does not divide q - 1 = {order_minus_one}")]
    NotDivisor { m: u64, order_minus_one: u64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("statistic undefined for this set: {0}")]
    DegenerateSet(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("interleaving map is not a bijection: {0}")]
    NotBijective(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

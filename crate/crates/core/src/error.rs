use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not an odd prime")]
    BadCharacteristic(u64),
    #[error("extension degree must be at least 1")]
    BadDegree,
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    BadModulus(usize),
    #[error("field element {0:?} is not valid for this field")]
    BadElement(Vec<u32>),
    #[error("division by zero in F_{{p^m}}")]
    DivisionByZero,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("matrix size {size} exceeds the cap of {cap}")]
    TooLarge { size: u64, cap: u64 },
    #[error("operands live over different characteristics ({0} vs {1})")]
    CharacteristicMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("expected {expected} free parameters, got {got}")]
    ParamCount { expected: usize, got: usize },
    #[error("exhaustive search would visit {0} candidates, above the guard")]
    GuardExceeded(u128),
    #[error("no case descriptor with k = {0}")]
    NoSuchCase(usize),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

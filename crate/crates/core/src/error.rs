use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },

    #[error("modulus has degree {found}, expected monic of degree {expected}")]
    DegreeMismatch { expected: u32, found: usize },

    #[error("field of size {p}^{m} exceeds the supported limit of 2^20 elements")]
    FieldTooLarge { p: u32, m: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("enumeration of {needed} elements exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("operands live over different fields")]
    FieldMismatch,

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("basis vectors {i} and {j} pair to {value} under the trace-symplectic form")]
    NotSelforthogonal { i: usize, j: usize, value: u32 },

    #[error("search exhausted {attempts} attempts without meeting the targets")]
    SearchExhausted { attempts: usize },

    #[error("family {family} requires {expected} r, got r = {r}")]
    ParityViolation { family: u8, r: u32, expected: &'static str },

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("character value {value} is not allowed for generator {index}")]
    InconsistentCharacter { index: usize, value: u32 },

    #[error("dense dimension {dim} exceeds the budget of {budget}")]
    DimensionBudget { dim: u128, budget: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

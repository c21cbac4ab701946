use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field exponent must be at least 1")]
    ZeroExponent,
    #[error("modulus has degree {found}, expected monic of degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus coefficient {0} is not reduced modulo p")]
    BadCoefficient(u32),
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u32),
    #[error("field of order {0} exceeds the supported maximum")]
    FieldTooLarge(u64),
    #[error("element encoding {value} out of range for field of order {order}")]
    ElementOutOfRange { value: u64, order: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("characteristic 2 has no non-square")]
    NoNonSquare,
    #[error("operation requires characteristic {expected}")]
    WrongCharacteristic { expected: &'static str },

    #[error("quadratic form is degenerate")]
    DegenerateForm,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires a form of dimension two")]
    DimensionNotTwo,
    #[error("operation requires a form of dimension three")]
    DimensionNotThree,
    #[error("cannot split off an isotropic vector")]
    IsotropicSplitVector,
    #[error("restriction to the given subspace is degenerate")]
    DegenerateRestriction,
    #[error("quadratic form is anisotropic")]
    AnisotropicForm,
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error("1 is not represented by the form")]
    OneNotRepresented,

    #[error("{needed} vertices exceed the cap of {cap}")]
    CapExceeded { needed: u64, cap: u64 },
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("not applicable: {0}")]
    NotApplicable(&'static str),
    #[error("no decomposition route applicable")]
    NoRouteApplicable,
    #[error("independent computations disagree: {0}")]
    Disagreement(String),

    #[error("parse error: {0}")]
    Parse(String),
}

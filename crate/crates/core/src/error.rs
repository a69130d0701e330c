use alloc::string::String;

/// Errors raised by the algebra and code constructions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{m} is too large for table arithmetic")]
    FieldTooLarge { p: u32, m: u32 },
    #[error("modulus must be monic of degree {m} over F_{p}")]
    BadModulus { p: u32, m: u32 },
    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },
    #[error("x is not primitive modulo the given polynomial (order {order}, need {needed})")]
    NotPrimitive { order: u32, needed: u32 },
    #[error("no built-in default modulus for GF({p}^{m}); pass one explicitly")]
    NoDefaultModulus { p: u32, m: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element {value} does not belong to GF({q})")]
    ForeignElement { value: u32, q: u32 },
    #[error("operands live in different rings or fields")]
    ContextMismatch,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial of degree {degree} does not right-divide x^{n}-1")]
    NotRightDivisor { degree: usize, n: usize },
    #[error("degree {degree} is out of range for length {n}")]
    DegreeOutOfRange { degree: usize, n: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("code has dimension 0; minimum distance is undefined")]
    EmptyCode,
    #[error("distance search over budget: {0}")]
    BudgetExceeded(String),
    #[error("enumeration of {candidates} candidates exceeds budget {budget}; lower the degree bound")]
    EnumerationBudget { candidates: u128, budget: u64 },
    #[error("automorphism order {order} does not divide beta = {beta}")]
    OrderDoesNotDivideBeta { order: u32, beta: usize },
    #[error("no applicable criterion: gcd(alpha = {alpha}, {order}) != 1 and {order} does not divide alpha")]
    NoApplicableCriterion { alpha: usize, order: u32 },
    #[error("general generator specs have no divisibility certificate")]
    NotSeparable,
    #[error("invalid Gray matrix: {0}")]
    GrayMatrix(&'static str),
    #[error("module span did not stabilise within {0} rounds")]
    SpanDidNotConverge(usize),
    #[error("code [{n},{k}] cannot contain its dual (2k < n)")]
    NotDualContaining { n: usize, k: usize },
    #[error("invalid quantum parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = core::result::Result<T, Error>;

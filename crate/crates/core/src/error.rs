use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime (got {0})")]
    NotOddPrime(u64),
    #[error("extension degree m must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the enumeration limit {limit}")]
    TooLarge { p: u64, m: u32, limit: u64 },
    #[error("modulus must have {expected} coefficients (degree m plus one), got {found}")]
    ModulusLength { expected: usize, found: usize },
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("coefficient {value} is not a residue mod {p}")]
    CoefficientRange { value: u64, p: u32 },
    #[error("modulus is reducible over F_{0}")]
    ReducibleModulus(u32),
    #[error("cannot parse modulus: {0}")]
    ModulusSyntax(alloc::string::String),
    #[error("element index {index} is out of range for a field of order {q}")]
    IndexRange { index: u64, q: u64 },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("leading coefficient a2 must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("t must be nonzero")]
    ZeroShift,
    #[error("this closed form needs an even extension degree (got m = {0})")]
    OddDegree(u32),
    #[error("this closed form needs m >= {needed} (got m = {m})")]
    DegreeTooSmall { needed: u32, m: u32 },
}

pub type Result<T> = core::result::Result<T, Error>;

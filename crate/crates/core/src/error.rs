use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero is not a valid input here")]
    ZeroInput,

    #[error("{0} is not prime")]
    NotPrime(BigInt),

    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("polynomial degree {found} is below the required minimum {min}")]
    DegreeTooSmall { found: usize, min: usize },

    #[error("leading coefficient vanishes modulo {0}")]
    LeadingCoefficientVanishes(BigInt),

    #[error("b^2 != 4ac (b^2 = {b_squared}, 4ac = {four_ac})")]
    NotInFamily { b_squared: BigInt, four_ac: BigInt },

    #[error("constant term c must be nonzero")]
    ZeroConstantTerm,

    #[error("degree n = {0} is out of range (need n >= 3)")]
    DegreeOutOfRange(u32),

    #[error("prime {p} does not divide the discriminant")]
    PrimeDoesNotDivideDiscriminant { p: BigInt },

    #[error("case mismatch: expected {expected}, prime falls under {actual}")]
    WrongCase { expected: String, actual: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial is reducible: {0}")]
    Reducible(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("trial division left an unresolved composite cofactor {0}")]
    UnresolvedCofactor(String),
    #[error("{0} is not split: 5 is not a square mod {0}")]
    NotSplit(u64),
    #[error("resultant of a zero polynomial")]
    ZeroInput,
    #[error("polynomial is not skew-palindromic of degree {0}")]
    NotSkewPalindromic(usize),
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("division is not exact")]
    NotExact,
    #[error("bad discriminant {0}: must be negative and 0 or 1 mod 4")]
    BadDiscriminant(i64),
    #[error("{0} is not a prime > 5")]
    BadPrime(u64),
    #[error("structure mismatch at p = {p}: {diff}")]
    StructureMismatch { p: u64, diff: String },
    #[error("cofactor split is not exact for d = {0}")]
    NonExactSplit(u32),
    #[error("group relation failed: {0}")]
    RelationFailure(String),
    #[error("coefficient outside the prime field at p = {0}")]
    CoefficientNotInPrimeField(u64),
    #[error("identity failed: {0}")]
    IdentityFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;

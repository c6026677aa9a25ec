use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("expected an odd integer, got {0}")]
    EvenArgument(i64),
    #[error("unsupported character label {0}")]
    UnsupportedCharacter(i64),
    #[error("prime {p} is not admissible here: {reason}")]
    InadmissiblePrime { p: u64, reason: &'static str },
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(u8, u8),
    #[error("invalid characteristic: {0}")]
    InvalidCharacteristic(String),
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("matrix is not in Γ(2)")]
    NotInGamma2,
    #[error("imaginary part is not positive definite")]
    NotPositiveDefinite,
    #[error("generator index {0} outside 1..=10")]
    GeneratorIndex(usize),
    #[error("odd characteristic {0} in a tuple whose product vanishes identically")]
    OddInTuple(String),
    #[error("expansion too short: need {needed}, have {have}")]
    OrderTooSmall { needed: usize, have: usize },
    #[error("no convention reproduces the reference series: {0}")]
    NoConvention(String),
    #[error("series is identically zero: {0}")]
    ZeroSeries(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

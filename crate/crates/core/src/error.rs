use thiserror::Error;

/// Errors raised by the exact GIT toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector has an empty state")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("degree {m} is below generator degree {degree}")]
    DegreeTooSmall { m: u32, degree: u32 },
    #[error("enumeration of {subsets} subsets exceeds the budget of {budget}")]
    TooLarge { subsets: u128, budget: u128 },
    #[error("matrix is not monomial (permutation times invertible diagonal)")]
    NotMonomialMatrix,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("sampler drew only singular matrices in {trials} trials")]
    SamplerExhausted { trials: usize },
    #[error("nearest point is not proportional to an integer vector")]
    Proportionality,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("operation requires {0} mode")]
    ModeMismatch(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("inhomogeneous polynomial")]
    Inhomogeneous,
    #[error("field required: integral coefficients do not support linear algebra")]
    FieldRequired,
    #[error("degree {degree} exceeds the ring cutoff {cutoff}")]
    BeyondCutoff { degree: usize, cutoff: usize },
    #[error("the generator degree alpha = {0} must be even and positive")]
    OddAlpha(u32),
    #[error("r must be at least 1")]
    ZeroRank,
    #[error("the perturbed index set IF' is only defined for alpha = 2 (got {0})")]
    PrimeSetNeedsAlphaTwo(u32),
    #[error("simplicial degree {requested} exceeds the computed range {max}")]
    DegreeOverflow { requested: usize, max: usize },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

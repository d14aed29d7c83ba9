use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("relation {0} mixes paths of different lengths; only length-homogeneous relations are supported")]
    NonHomogeneousRelation(usize),
    #[error("a nonzero path of length {bound} survives: algebra is not finite-dimensional within the bound")]
    NotFiniteDimensionalWithinBound { bound: usize },
    #[error("invalid Kupisch series: {0}")]
    InvalidKupisch(String),
    #[error("Kupisch value {0} is outside the supported set {{2, 3}}")]
    UnsupportedKupischValue(usize),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("invalid triple {0:?}")]
    InvalidTriple((i64, i64, i64)),
    #[error("no interval-module convention passes the calibration checks: {0}")]
    CalibrationFailure(String),
    #[error("objects live over different algebras")]
    AlgebraMismatch,
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("right approximation at step {step} is not surjective")]
    ApproximationNotEpi { step: usize },
    #[error("left approximation at step {step} is not injective")]
    ApproximationNotMono { step: usize },
    #[error("final term of the resolution is not in the subcategory")]
    FinalTermNotInSubcategory,
    #[error("indecomposable list fails the sanity check: {0}")]
    IncompleteIndecList(String),
    #[error("Omega^d image of generator {0} matches no generator within the horizon")]
    OrbitNotResolved(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown example {0:?}")]
    UnknownExample(String),
    #[error("{0}")]
    Precondition(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

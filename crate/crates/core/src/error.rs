use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("block structure mismatch: expected {expected:?}, found {found:?}")]
    StructureMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("invalid block structure: {0}")]
    InvalidStructure(String),

    #[error("expected {expected} coefficients, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported norm exponent {0}; only 1, 2 and infinity are available")]
    UnsupportedNorm(f64),

    #[error("invalid Haar weights: {0}")]
    InvalidHaarWeights(String),

    #[error("quantum group `{0}` has no Haar state attached")]
    MissingHaar(String),

    #[error("Haar state not unique: invariant solution space has dimension {dim}")]
    HaarNotUnique { dim: usize },

    #[error("invariant functional is not a faithful weighted trace: {0}")]
    InvalidHaar(String),

    #[error("functional is not a state: {0}")]
    NotAState(String),

    #[error("density convolution order check failed: {0}")]
    ConvolutionOrder(String),

    #[error("corepresentation rejected: {0}")]
    InvalidCorep(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("inconsistent irreducible representation family: {0}")]
    InvalidIrrepFamily(String),

    #[error("invalid state specification: {0}")]
    InvalidStateSpec(String),

    #[error("unsupported parameter: {0}")]
    Unsupported(String),

    #[error("bound sandwich violated at k = {k}: lower {lower}, exact {exact}, upper {upper}")]
    SandwichViolated {
        k: usize,
        lower: f64,
        exact: f64,
        upper: f64,
    },

    #[error("linear algebra failure: {0}")]
    Numerical(String),
}

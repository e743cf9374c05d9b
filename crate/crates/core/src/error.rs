use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no binding supplied for variable `{0}`")]
    MissingBinding(String),

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("polynomial has degree zero in x")]
    DegreeZeroInX,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice mismatch: expected `{expected}`, found `{found}`")]
    SpaceMismatch { expected: String, found: String },

    #[error("unknown basis element `{name}` in `{space}`")]
    UnknownBasisElement { space: String, name: String },

    #[error("intersection form on `{space}` is missing monomial {monomial}")]
    MissingMonomial { space: String, monomial: String },

    #[error("intersection form on `{space}` lists monomial {monomial} twice")]
    DuplicateMonomial { space: String, monomial: String },

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("basis change is singular")]
    SingularBasis,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("expanded cubic disagrees with the printed polynomial: {0}")]
    CubicMismatch(String),

    #[error("model verification failed: {0}")]
    Verification(String),
}

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational `{0}`")]
    Rational(String),
    #[error("malformed expression `{expr}`: {reason}")]
    Expression { expr: String, reason: String },
    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),
    #[error("malformed algebra file: {0}")]
    File(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("algebra has no unit element")]
    NotUnital,
    #[error("basis element {0} does not act as a two-sided unit")]
    InvalidUnit(usize),
    #[error("invalid structure constants: {0}")]
    InvalidConstants(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid grading: {0}")]
    InvalidGrading(String),
    #[error("algebra is not quadratic")]
    NotQuadratic,
    #[error("algebra is not locally complex")]
    NotLocallyComplex,
    #[error("algebra is not alternative")]
    NotAlternative,
    #[error("algebra is not super-alternative for the given grading")]
    NotSuperAlternative,
    #[error("given elements already span U")]
    SpansU,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no vector with a rational square norm was found in the search budget")]
    NonSquareNorm,
    #[error("matrix is singular")]
    Singular,
    #[error("unknown algebra name `{0}`")]
    UnknownAlgebra(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

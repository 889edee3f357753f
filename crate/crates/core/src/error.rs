use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero element")]
    ZeroElement,
    #[error("not invertible in L")]
    NotInvertibleInL,
    #[error("backward shift leaves L")]
    BackwardShiftOutOfL,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("element lies in F")]
    ElementInF,
    #[error("no regularity degree found below cap {0}")]
    NoDegreeFound(usize),
    #[error("not a denominator")]
    NotADenominator,
    #[error("denominator has zero image")]
    DivisionByZeroImage,
    #[error("not in the scalar subalgebra")]
    NotInScalarSubalgebra,
    #[error("component could not be split: {0}")]
    UnsplittableComponent(String),
    #[error("operation requires n = 1")]
    RequiresN1,
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("{0}")]
    Usage(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

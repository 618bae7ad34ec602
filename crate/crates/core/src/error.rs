use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableCountMismatch { expected: usize, found: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },
    #[error("point has {found} coordinates, polynomial has {expected} variables")]
    ArityMismatch { expected: usize, found: usize },
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("generator list is empty or all zero")]
    EmptyGenerators,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("weights must not all be zero")]
    ZeroWeights,
    #[error("operation requires {expected} variables, got {found}")]
    WrongDimension { expected: &'static str, found: usize },
    #[error("generating fields have identically zero determinant")]
    DegenerateBasis,
    #[error("field does not leave the hypersurface invariant")]
    NotInvariant,
    #[error("field is not a polynomial combination of the basis")]
    NotInSpan,
    #[error("family field {index} does not have cofactor zero")]
    InvalidFamily { index: usize },
    #[error("inputs refer to different polynomials")]
    MismatchedPolynomial,
}

impl Error {
    /// Mathematical negative answers, as opposed to misuse.
    pub fn is_negative_answer(&self) -> bool {
        matches!(self, Error::NotInvariant | Error::NotInSpan)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

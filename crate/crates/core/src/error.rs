use thiserror::Error;

/// Errors raised by the classification library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite float component")]
    NonFinite,
    #[error("invalid scalar literal `{0}`")]
    InvalidScalar(String),
    #[error("unsupported degree {0} (expected 3 or 4)")]
    UnsupportedDegree(usize),
    #[error("coefficient array has length {got}, expected {expected}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("tensor entries are not symmetric under index permutation")]
    AsymmetricTensor,
    #[error("transformation is singular (|det| = {0:e})")]
    SingularTransform(f64),
    #[error("transformation has non-real entries")]
    NonRealTransform,
    #[error("polynomial is identically zero")]
    ZeroPolynomial,
    #[error("form is identically zero")]
    ZeroForm,
    #[error("projective point (0, 0) is not a direction")]
    ZeroDirection,
    #[error("input has non-real coefficients")]
    NonRealInput,
    #[error("no type {type_id} for order {order} over the {domain} numbers")]
    InvalidType { type_id: usize, order: usize, domain: &'static str },
    #[error("type {0} requires a modulus mu")]
    MissingModulus(usize),
    #[error("modulus mu = {mu} is outside the range of type {type_id}")]
    InvalidModulus { type_id: usize, mu: String },
    #[error("spectral and root-pattern classifications disagree: {0}; retry in exact mode")]
    InternalInconsistency(String),
    #[error("modulus mu = {0} lies within tolerance of the boundary -1/3; retry in exact mode")]
    BoundaryAmbiguity(f64),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unsupported principal order {0} (expected 3 or 4)")]
    UnsupportedOrder(usize),
    #[error("PDE coefficient is not real")]
    NonRealCoefficient,
    #[error("invalid JSON input: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Name of the library module that raises this error.
    pub fn module(&self) -> &'static str {
        match self {
            Error::NonFinite
            | Error::InvalidScalar(_)
            | Error::UnsupportedDegree(_)
            | Error::CoefficientCount { .. }
            | Error::AsymmetricTensor
            | Error::SingularTransform(_)
            | Error::NonRealTransform => "algebra",
            Error::ZeroPolynomial | Error::ZeroForm | Error::ZeroDirection | Error::NonRealInput => "roots",
            Error::InvalidType { .. }
            | Error::MissingModulus(_)
            | Error::InvalidModulus { .. }
            | Error::InternalInconsistency(_)
            | Error::BoundaryAmbiguity(_) => "classify",
            Error::Syntax { .. } | Error::UnsupportedOrder(_) | Error::NonRealCoefficient => "pde",
            Error::Json(_) => "json",
        }
    }

    /// True for float-mode decisions that exact mode would settle.
    pub fn is_numerical_ambiguity(&self) -> bool {
        matches!(self, Error::InternalInconsistency(_) | Error::BoundaryAmbiguity(_))
    }
}

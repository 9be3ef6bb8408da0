use thiserror::Error;

/// Failures raised by the verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix size {0} is not the square of a vector-space dimension")]
    NotPerfectSquare(usize),
    #[error("operator is not skew-symmetric")]
    NotSkew,
    #[error("operator is singular")]
    Singular,
    #[error("bracket is not antisymmetric")]
    NotAntisymmetric,
    #[error("bracket fails the Jacobi identity")]
    Jacobi,
    #[error("action is not a representation of the Lie algebra")]
    NotRepresentation,
    #[error("map fails the operator equation")]
    NotOOperator,
    #[error("map is not a Lie algebra homomorphism")]
    NotHomomorphism,
    #[error("leading coefficient is not the identity")]
    NotUnipotent,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("jet order {order} exceeds the ceiling {ceiling}")]
    JetOrder { order: u32, ceiling: u32 },
    #[error("expression is not linear in {0}")]
    NotLinear(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_err(what: impl Into<String>) -> Error {
    Error::Dimension(what.into())
}

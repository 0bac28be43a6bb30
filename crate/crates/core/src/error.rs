use thiserror::Error;

use crate::poly::Polynomial;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    BothInputsZero,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation needs a polynomial of degree at least 1")]
    ConstantPolynomial,
    #[error("constant term is zero, the reversed polynomial would drop degree")]
    ConstantTermZero,
    #[error("{0}")]
    Precondition(&'static str),
    #[error("rational function has a pole at the interval endpoint {0}")]
    BoundaryPole(String),
    #[error("Hurwitz minor eta_{index} is zero; use the Routh classification instead")]
    SomeMinorZero { index: usize },
    #[error("rational function is not in lowest terms")]
    Reducible,
    #[error("denominator does not split into distinct rational linear factors")]
    UnsupportedDenominator,
    #[error("projective image degenerates to a constant")]
    DegenerateImage,
    #[error("Mobius coefficients must have determinant 1, got {0}")]
    NotUnimodular(String),
    #[error("polynomial has roots on the imaginary axis (gcd(f0, f1) = {0})")]
    AxisRootPresent(Polynomial),
    #[error("no samples to emit")]
    EmptySamples,
    #[error("operation needs real coefficients")]
    ComplexCoefficients,
    #[error("Lorenz parameters must be strictly positive")]
    NonPositiveParameter,
    #[error("empty polynomial input")]
    EmptyInput,
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },
    #[error("leading coefficient is zero")]
    LeadingCoefficientZero,
}

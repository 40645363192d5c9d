use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not a unit (constant term is zero)")]
    NotAUnit,
    #[error("division is not exact: valuation {numerator} < valuation {denominator}")]
    NotDivisible {
        numerator: usize,
        denominator: usize,
    },
    #[error("division by a series that is zero at its cap")]
    ZeroDivisor,
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("component {0} has a nonzero constant term (not in the maximal ideal)")]
    NotInMaximalIdeal(usize),
    #[error("vector is zero at its cap")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("lie table entries need i < j, got ({i}, {j})")]
    NonIncreasingLieKey { i: usize, j: usize },
    #[error("product is not antisymmetric on ({i}, {j})")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("cochain arguments must be strictly increasing, got {0:?}")]
    NonIncreasingArgs(Vec<usize>),
    #[error("wrong input kind: expected {expected}")]
    WrongKind { expected: &'static str },
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("invalid deformation: Jacobi residual is nonzero at order {0}")]
    InvalidDeformation(usize),
    #[error("basis not adapted: [X, e{nil}] is not a multiple of e{nil}")]
    NotAdapted { torus: usize, nil: usize },
    #[error("torus has rank {0}, root analysis needs rank 1")]
    NotRankOne(usize),
    #[error("invalid torus data: {0}")]
    InvalidTorus(String),
    #[error("invalid poisson structure: {0}")]
    InvalidPoisson(String),
    #[error("vectors are linearly dependent")]
    LinearlyDependent,
    #[error("matrix is not invertible")]
    Singular,
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

/// Errors from the exact-arithmetic kernel.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero divisor; offending component factor: {factor}")]
    ZeroDivisor { factor: String },
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("unsupported degree {degree} (cap {cap})")]
    UnsupportedDegree { degree: usize, cap: usize },
    #[error("divisor candidate height exceeded cutoff {cutoff}")]
    HeightExceeded { cutoff: u64 },
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("characteristic {0} not supported here")]
    BadCharacteristic(u64),
    #[error("{0}")]
    Other(String),
}

/// Errors from curve constructions and transformations.
#[derive(Debug, Error)]
pub enum CurveError {
    #[error("parameter excluded: {0}")]
    ParameterExcluded(String),
    #[error("inseparable polynomial: {0}")]
    Inseparable(String),
    #[error("degenerate factorization (zero determinant)")]
    DegenerateFactorization,
    #[error("inseparable Richelot dual")]
    InseparableDual,
    #[error("coefficient descent failure: {0}")]
    CoefficientDescentFailure(String),
    #[error("degenerate map")]
    DegenerateMap,
    #[error("degree collapse below 5")]
    DegreeCollapse,
    #[error("no rational point found on conic up to height {0}")]
    NoRationalPoint(i64),
    #[error("bad reduction at {0}")]
    BadReduction(u64),
    #[error("off-curve point")]
    OffCurve,
    #[error("point at infinity has no parameter image")]
    PointAtInfinity,
    #[error("splitting algebra construction failure: {0}")]
    SplittingAlgebra(String),
    #[error("symbolic identity failure: {0}")]
    IdentityFailure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Other(String),
}

pub type AResult<T> = Result<T, AlgebraError>;
pub type CResult<T> = Result<T, CurveError>;

use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point {0} is not in the open unit disc")]
    OutsideDisc(Complex64),
    #[error("m = {m} and n = {n} are not relatively prime")]
    NotCoprime { m: u32, n: u32 },
    #[error("expected 1 <= m <= n, got m = {m}, n = {n}")]
    OrderViolation { m: u32, n: u32 },
    #[error("({z}, {w}) does not satisfy z^m = w^n (relative defect {defect:e})")]
    OffVariety { z: Complex64, w: Complex64, defect: f64 },
    #[error("vector ({x1}, {x2}) is not tangent at this point")]
    NotTangent { x1: Complex64, x2: Complex64 },
    #[error("zero tangent vector")]
    ZeroVector,
    #[error("coincident points")]
    CoincidentPoints,
    #[error("Moebius map with unimodular parameter {0} is degenerate")]
    DegenerateMap(Complex64),
    #[error("metric is not finite at curve node {index}")]
    NonFiniteMetric { index: usize },
    #[error("invalid curve: {0}")]
    InvalidCurve(&'static str),
    #[error("expected an even exponent, got {0}")]
    OddExponent(u32),
    #[error("zero polynomial cannot be normalized")]
    ZeroPolynomial,
    #[error("m-th root continuation failed: {0}")]
    BranchTracking(&'static str),
    #[error("no witness found within the search budget")]
    NotFound,
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

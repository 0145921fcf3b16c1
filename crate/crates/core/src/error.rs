use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("gcd(0, 0) is undefined")]
    GcdUndefined,

    #[error("interval endpoint {0} is a root; nudge the endpoint and retry")]
    EndpointIsRoot(String),

    #[error("empty interval: lo = {lo} is not below hi = {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("degree mismatch: expected deg f = deg g + 1, got deg f = {f}, deg g = {g}")]
    DegreeMismatch { f: isize, g: isize },

    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },

    #[error("matrix is not Hermitian: entry ({i}, {j}) is not the conjugate of ({j}, {i})")]
    NotHermitian { i: usize, j: usize },

    #[error("index {index} out of range for dimension {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("dimension {n} too small, need at least {min}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("internal inconsistency: characteristic polynomial coefficient of x^{power} has imaginary part {imag}")]
    ComplexCoefficient { power: usize, imag: String },

    #[error("internal inconsistency: expected {expected} real eigenvalues with multiplicity, found {found}")]
    SpectrumNotReal { expected: usize, found: usize },

    #[error("invalid rational {input:?}: {reason}")]
    ParseRational { input: String, reason: String },

    #[error("invalid input: {0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },

    #[error("invalid coefficient array: {0}")]
    CoefficientArray(String),

    #[error("polynomial has no nonzero coefficient of positive degree")]
    NoNonconstantTerm,

    #[error("the zero polynomial is not accepted here")]
    ZeroPolynomial,

    #[error("valuation of zero is infinite")]
    InfiniteValuation,

    #[error("{0} is not a prime")]
    NotPrime(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("constant term is zero, so 0 is a root")]
    ZeroConstantTerm,

    #[error("coefficient too large for floating point: |a_{index}| >= 2^1024")]
    CoefficientOverflow { index: usize },

    #[error("root iteration did not converge (worst scaled residual {worst_residual:e})")]
    NoConvergence { worst_residual: f64 },

    #[error("corpus error: {0}")]
    Corpus(String),
}

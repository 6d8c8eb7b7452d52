use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported field degree {0}")]
    UnsupportedDegree(u32),
    #[error("no embedding of GF(2^{sub}) into GF(2^{ext})")]
    NoEmbedding { sub: u32, ext: u32 },
    #[error("conductor {0} exceeds the configured bound")]
    ConductorTooLarge(u64),
    #[error("torus parameter must be nonzero")]
    ZeroTorusParameter,
    #[error("matrix is not symplectic")]
    NotSymplectic,
    #[error("element is not in the Borel subgroup")]
    NotInBorel,
    #[error("projected size {projected} exceeds element budget {budget}")]
    ScaleExceeded { projected: u64, budget: u64 },
    #[error("class functions live on different class lists: {0} vs {1}")]
    TableMismatch(String, String),
    #[error("induction route {0} is not supported")]
    RouteUnsupported(String),
    #[error("derivation mismatch at {row}/{class}: derived {derived}, expected {expected}")]
    DerivationMismatch {
        row: String,
        class: String,
        derived: String,
        expected: String,
    },
    #[error("no solution of the Lang equation in GF(2^{0})")]
    NoSolutionInField(u32),
    #[error("class function is not constant on torus type {0}")]
    TorusAmbiguity(String),
    #[error("sign rule inconclusive: {0}")]
    SignRuleInconclusive(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("resource cap exceeded: {what} = {value} > {cap}")]
    ResourceCap { what: &'static str, value: usize, cap: usize },

    #[error("basis element not in ambient space: {0}")]
    NotInAmbient(String),

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("non-planar diagram: {0}")]
    NonPlanar(String),

    #[error("missing double point {0}")]
    MissingDoublePoint(usize),

    #[error("singular input: {0} double points")]
    SingularInput(usize),

    #[error("engine disagreement: {0}")]
    EngineDisagreement(String),

    #[error("order {order} does not match degree {degree}")]
    OrderMismatch { order: usize, degree: usize },

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mismatched endpoints: target {tgt} is not source {src}")]
    MismatchedEndpoints { tgt: String, src: String },

    #[error("size bound exceeded for {what}: {size} > {limit}")]
    SizeBoundExceeded { what: String, size: u128, limit: u128 },

    #[error("incompatible tensor words {0} and {1}")]
    IncompatibleWords(String, String),

    #[error("ill-formed path at junction {index}: {detail}")]
    IllFormedPath { index: usize, detail: String },

    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("element {elem} is not in {obj}")]
    NotInCarrier { elem: String, obj: String },

    #[error("no comonad is attached to the evaluation context")]
    NoComonad,

    #[error("operation not supported by this model: {0}")]
    Unsupported(String),

    #[error("invalid coalgebra: {0}")]
    InvalidCoalgebra(String),

    #[error("invalid adjunction: {0}")]
    InvalidAdjunction(String),

    #[error("degree bound {0} is too small (need K >= 1)")]
    DegreeBoundTooSmall(usize),

    #[error("functor is not strong monoidal: {0}")]
    NotStrongMonoidal(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("time budget exhausted")]
    Timeout,
}

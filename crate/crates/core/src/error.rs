use thiserror::Error;

/// Errors produced by the polyhedral and symbolic kernels.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero has no primitive direction")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate polytope: affine span has dimension {affine_dim}, ambient dimension {ambient}")]
    NotFullDimensional { affine_dim: usize, ambient: usize },

    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },

    #[error("origin is not interior to the polytope")]
    OriginNotInterior,

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("polytope is not smooth")]
    NotSmooth,

    #[error("{0} is not a vertex of the polytope")]
    NotAVertex(String),

    #[error("edge vectors not unimodular at {0}")]
    NotUnimodular(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown name: {0}")]
    UnknownName(String),

    #[error("invalid algebra: {0}")]
    Algebra(String),

    #[error("element has nonzero unit component, not in the maximal ideal")]
    NotInMaximalIdeal,

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("knowledge base: {0}")]
    KnowledgeBase(String),

    #[error("witness verification failed: {0}")]
    BadWitness(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("operation supports at most {max} vertices, got {got}")]
    TooManyVertices { max: usize, got: usize },

    #[error("{what} must be between {min} and {max}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: usize,
        max: usize,
        got: usize,
    },

    #[error("graph is not connected")]
    Disconnected,

    #[error("orientation induces a directed cycle")]
    CyclicOrientation,

    #[error("poset is not a vertex poset of the hypergraph")]
    NotHPoset,

    #[error("poset is not liftable into the given hypergraph: {reason}")]
    UndefinedLiftInput { reason: &'static str },

    #[error("ground sets differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("arithmetic overflow in exact coefficient computation")]
    Overflow,

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

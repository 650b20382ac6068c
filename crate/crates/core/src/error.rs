use thiserror::Error;

/// Errors raised by graph construction and the spectral engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} outside supported range 1..={max}", max = crate::graph::MAX_VERTICES)]
    Order(usize),
    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("vertices must be distinct, got {0} twice")]
    SameVertex(usize),
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error("{what} is limited to n <= {limit}, got {n}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("zero state vector")]
    ZeroState,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("states are equal up to sign")]
    DegenerateStates,
    #[error("operation requires pair states")]
    NotPairForm,
    #[error("opaque algebraic number has no exact field arithmetic")]
    OpaqueNumber,
    #[error("transfer reports do not share a pivot at a common time")]
    NoPivot,
    #[error("exact and numeric results disagree: {0}")]
    Consistency(alloc::string::String),
}

pub type Result<T> = core::result::Result<T, Error>;

use thiserror::Error;

use crate::algebra::VarId;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("no value assigned to variable {0}")]
    MissingAssignment(VarId),

    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("variable {0} has no domain")]
    MissingDomain(VarId),

    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),

    #[error("certificate has {got} coefficients but the system has {expected} generators")]
    LengthMismatch { expected: usize, got: usize },

    #[error("certificate failed verification: {0}")]
    VerificationFailed(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not connected and bipartite")]
    NotConnectedBipartite,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

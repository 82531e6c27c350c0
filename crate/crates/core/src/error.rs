use thiserror::Error;

use crate::chordal::Hole;
use crate::dh::DhObstruction;

/// Errors surfaced by the library. Internal invariant breaks are reported
/// through `Internal` rather than panics so callers can map them to exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("graph is not chordal (hole of length {})", .0.len())]
    NotChordal(Hole),
    #[error("graph is not distance-hereditary ({:?} obstruction)", .0.kind)]
    NotDistanceHereditary(DhObstruction),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("lp: {0}")]
    Lp(#[from] LpError),
    #[error("instance too large for the exact oracle: n = {n}, limit = {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Error)]
pub enum LpError {
    /// The cutting-plane loop ran out of rows. `best` is a feasible iterate
    /// and `lower_bound` the optimum of the rows collected so far.
    #[error("row budget of {budget} exhausted after {rounds} rounds")]
    BudgetExhausted {
        budget: usize,
        rounds: usize,
        best: Vec<crate::Q>,
        lower_bound: crate::Q,
    },
    #[error("oracle returned a row that is not violated")]
    StaleRow,
}

pub type Result<T> = std::result::Result<T, Error>;

use std::io;

use thiserror::Error;

use crate::certificate::Violation;

#[derive(Error, Debug)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap at {0}")]
    Overlap(usize),
    #[error("graph contains the triangle {0:?}")]
    Triangle([usize; 3]),
    #[error("vertices {0:?} are not in one connected component")]
    Disconnected(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("split is not a valid structure: {}", fmt_violations(.0))]
    InvalidSplit(Vec<Violation>),
    #[error("instance has {n} vertices, oracle limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("infeasible generator sizes: {0}")]
    Infeasible(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid certificate: {0}")]
    Schema(String),
    /// A construction failed its own certificate check. Always a bug.
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

fn fmt_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;

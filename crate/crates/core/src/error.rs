use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed drawing: {0}")]
    Malformed(String),

    #[error("drawing is not simple: {0}")]
    NotSimple(ValidationReport),

    #[error("drawing is not complete: {0}")]
    Incomplete(String),

    #[error("empty vertex subset")]
    EmptySubset,

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("tangency between edges {0} and {1} at their crossing")]
    Tangency(String, String),

    #[error("point lies on the region boundary")]
    OnBoundary,

    #[error("not monotone: {0}")]
    NotMonotone(String),

    #[error("degenerate ray: {0}")]
    DegenerateRay(String),

    #[error("not a straight-line drawing: {0}")]
    NotStraight(String),

    #[error("degenerate wedge position: {0}")]
    DegenerateWedge(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("internal invariant breached: {0}")]
    InvariantBreach(String),

    #[error("certification failed: {0}")]
    Certification(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

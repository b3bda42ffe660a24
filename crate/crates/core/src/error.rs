use thiserror::Error;

use crate::patterns::Embedding;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid vertex set: vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidSet { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex sets must be disjoint")]
    OverlappingSets,

    #[error("unsupported size for {what}: n = {n} exceeds {limit}")]
    UnsupportedSize { what: &'static str, n: usize, limit: usize },

    #[error("({0}, {1}, {2}) does not induce a triangle")]
    InvalidTriangle(usize, usize, usize),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("graph is not in the class: contains {}", .0.pattern)]
    ClassViolation(Embedding),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("generation failed: repair budget of {0} steps exhausted")]
    GenerationFailure(usize),
}

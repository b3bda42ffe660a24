//! Replayable records of structural claims that failed on a concrete graph.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, VertexSet, Word};
use crate::graph6;
use crate::oracle::k_colorable;
use crate::patterns::{pattern, Embedding};

/// The mechanically checkable fact that contradicts a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Violation {
    /// Both ends of `edge` lie in `set`, which was claimed stable.
    EdgeInside { set: Vec<usize>, edge: (usize, usize) },
    /// `set` induces more than `limit` edges.
    TooManyEdges { set: Vec<usize>, limit: usize },
    /// `set` induces a graph that is not `colors`-colorable.
    NotColorable { set: Vec<usize>, colors: usize },
    /// `set` has more than `limit` members.
    TooLarge { set: Vec<usize>, limit: usize },
    /// The adjacency of `u` and `v` is `adjacent`, contrary to the claim.
    Adjacency { u: usize, v: usize, adjacent: bool },
    /// `vertex` has a number of neighbors in `set` outside `allowed`.
    NeighborCount { vertex: usize, set: Vec<usize>, allowed: Vec<usize> },
    /// An induced occurrence of a pattern inside `set`.
    PatternInside { set: Vec<usize>, embedding: Embedding },
    /// `vertex` has exactly `found` as its neighbors inside `set`, a
    /// configuration the claim excludes.
    Neighborhood { vertex: usize, set: Vec<usize>, found: Vec<usize> },
    /// Both sets induce an edge although the claim allows at most one to.
    EdgesInBoth { first: Vec<usize>, first_edge: (usize, usize), second: Vec<usize>, second_edge: (usize, usize) },
    /// `set` induces no edge although the argument needs one.
    NoEdge { set: Vec<usize> },
    /// Vertices that no step of the argument assigns a color.
    Uncovered { vertices: Vec<usize> },
}

impl Violation {
    /// True iff the violation still holds on `g`.
    pub fn holds_in<W: Word>(&self, g: &Graph<W>) -> bool {
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < g.n());
        let set = |vs: &[usize]| vs.iter().copied().collect::<VertexSet<W>>();
        match self {
            Violation::EdgeInside { set: s, edge: (u, v) } => {
                in_range(s) && s.contains(u) && s.contains(v) && *u < g.n() && *v < g.n() && g.adj(*u, *v)
            }
            Violation::TooManyEdges { set: s, limit } => in_range(s) && g.edges_in(set(s)) > *limit,
            Violation::NotColorable { set: s, colors } => {
                in_range(s)
                    && g.induced(set(s)).map(|h| k_colorable(&h, *colors).is_none()).unwrap_or(false)
            }
            Violation::TooLarge { set: s, limit } => in_range(s) && set(s).len() > *limit,
            Violation::Adjacency { u, v, adjacent } => {
                *u < g.n() && *v < g.n() && u != v && g.adj(*u, *v) == *adjacent
            }
            Violation::NeighborCount { vertex, set: s, allowed } => {
                *vertex < g.n() && in_range(s) && !allowed.contains(&(g.row(*vertex) & set(s)).len())
            }
            Violation::Neighborhood { vertex, set: s, found } => {
                *vertex < g.n() && in_range(s) && in_range(found) && (g.row(*vertex) & set(s)) == set(found)
            }
            Violation::EdgesInBoth { first, first_edge, second, second_edge } => {
                let inside = |s: &[usize], (u, v): (usize, usize)| {
                    in_range(s) && s.contains(&u) && s.contains(&v) && g.adj(u, v)
                };
                inside(first, *first_edge) && inside(second, *second_edge)
            }
            Violation::PatternInside { set: s, embedding } => {
                in_range(s)
                    && pattern(&embedding.pattern)
                        .map(|p| embedding.is_valid_in(g, p))
                        .unwrap_or(false)
                    && embedding.image::<W>().is_subset(set(s))
            }
            Violation::NoEdge { set: s } => in_range(s) && g.edge_in(set(s)).is_none(),
            Violation::Uncovered { vertices } => !vertices.is_empty() && in_range(vertices),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Anomaly {
    /// Graph the claim failed on, graph6-encoded.
    pub graph: String,
    /// Which claim failed, e.g. `codomino.b2_stable`.
    pub claim_id: String,
    pub violation: Violation,
    /// Seconds since the Unix epoch; stamped by whoever persists the record.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

impl Anomaly {
    pub fn new<W: Word>(g: &Graph<W>, claim_id: &str, violation: Violation) -> Self {
        Anomaly { graph: graph6::encode(g), claim_id: claim_id.to_string(), violation, timestamp: None }
    }

    /// Decodes the stored graph and rechecks the violation.
    pub fn replay(&self) -> Result<bool> {
        let g: Graph<u128> = graph6::decode(&self.graph)?;
        Ok(self.violation.holds_in(&g))
    }
}

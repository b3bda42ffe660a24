//! Bitset graphs, induced-pattern detection, exact coloring oracles and a
//! constructive 7-colorer for (P3 ∪ P2, K4)-free graphs, with generators and
//! the bounds for their complements.

pub mod anomaly;
pub mod bounds;
pub mod colorer;
pub mod coloring;
pub mod decompose;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod patterns;

pub use anomaly::{Anomaly, Violation};
pub use bounds::{clique_cover, CliqueCover};
pub use colorer::{color, CaseId, CaseTrace};
pub use coloring::{validate, Coloring};
pub use error::{Error, Result};
pub use generators::GenConfig;
pub use graph::{Graph, VertexSet, Word};
pub use patterns::{Embedding, Pattern};

/// Hosts up to 64 vertices.
pub type Graph64 = Graph<u64>;
/// Hosts up to 128 vertices.
pub type Graph128 = Graph<u128>;

//! Named small graphs and exact induced-subgraph detection.
//!
//! Vertex labels follow the labeling used by the coloring cases so that a
//! colorer can address an embedded vertex by its role (`v1`, `u2`, ...).

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};

/// A pattern graph, possibly a family: pairs in `optional` may be edges or
/// non-edges in an occurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    labels: Vec<String>,
    graph: Graph,
    optional: Vec<(usize, usize)>,
}

impl Pattern {
    pub fn new(
        name: &str,
        labels: &[&str],
        edges: &[(&str, &str)],
        optional: &[(&str, &str)],
    ) -> Result<Self> {
        let index = |l: &str| {
            labels
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| Error::InvalidConfiguration(format!("{name}: no vertex `{l}`")))
        };
        let pairs = |list: &[(&str, &str)]| -> Result<Vec<(usize, usize)>> {
            list.iter().map(|&(a, b)| Ok((index(a)?, index(b)?))).collect()
        };
        let graph = Graph::from_edges(labels.len(), &pairs(edges)?)?;
        let optional: Vec<(usize, usize)> = pairs(optional)?
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if let Some(&(a, b)) = optional.iter().find(|&&(a, b)| graph.adj(a, b)) {
            return Err(Error::InvalidConfiguration(format!(
                "{name}: optional pair ({a}, {b}) is also a required edge"
            )));
        }
        Ok(Pattern {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            graph,
            optional,
        })
    }

    /// Pattern with numeric labels and no optional pairs.
    pub fn from_graph(name: &str, graph: Graph) -> Self {
        Pattern {
            name: name.to_string(),
            labels: (0..graph.n()).map(|v| v.to_string()).collect(),
            graph,
            optional: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn optional(&self) -> &[(usize, usize)] {
        &self.optional
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_optional(&self, a: usize, b: usize) -> bool {
        self.optional.contains(&(a.min(b), a.max(b)))
    }

    /// The pattern graph with every optional pair added as an edge.
    pub fn with_optional_edges(&self) -> Graph {
        let mut edges = self.graph.edges();
        edges.extend_from_slice(&self.optional);
        Graph::from_edges(self.n(), &edges).expect("pattern pairs are in range")
    }
}

/// Injective map from pattern vertices to host vertices; `map[p]` is the
/// image of pattern vertex `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern: String,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image<W: Word>(&self) -> VertexSet<W> {
        self.map.iter().copied().collect()
    }

    /// Rechecks injectivity and every required edge and non-edge.
    pub fn is_valid_in<W: Word>(&self, host: &Graph<W>, p: &Pattern) -> bool {
        if self.map.len() != p.n() || self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        if self.image::<W>().len() != p.n() {
            return false;
        }
        (0..p.n()).all(|a| {
            (a + 1..p.n()).all(|b| {
                p.is_optional(a, b) || p.graph().adj(a, b) == host.adj(self.map[a], self.map[b])
            })
        })
    }
}

/// Stable pattern names, in catalog order.
pub const PATTERN_NAMES: [&str; 25] = [
    "p2", "p3", "p4", "p5", "c4", "c5", "c6", "k3", "k4", "2k2", "4k1", "p3up2", "k3up2",
    "diamond", "codomino", "codomino1", "codomino2", "codomino3", "coa", "x1", "x2", "cotwinc5",
    "yfam", "chi37", "cop3up2",
];

const DOMINO: [&str; 6] = ["v1", "v2", "v3", "u1", "u2", "u3"];
const DOMINO_UX: [&str; 8] = ["v1", "v2", "v3", "u1", "u2", "u3", "u", "x"];
const HOLE_U: [&str; 7] = ["v1", "v2", "v3", "u1", "u2", "u3", "u"];

/// The 6-hole `u1 v1 v2 v3 u3 u2`.
const HOLE: [(&str, &str); 6] = [
    ("u1", "v1"),
    ("v1", "v2"),
    ("v2", "v3"),
    ("v3", "u3"),
    ("u3", "u2"),
    ("u2", "u1"),
];

fn numbered(name: &str, g: Graph) -> Pattern {
    Pattern::from_graph(name, g)
}

fn with_hole(name: &str, labels: &[&str], extra: &[(&'static str, &'static str)], optional: &[(&str, &str)]) -> Pattern {
    let mut edges: Vec<(&str, &str)> = HOLE.to_vec();
    edges.extend_from_slice(extra);
    Pattern::new(name, labels, &edges, optional).expect("catalog pattern is well formed")
}

fn build_catalog() -> Vec<Pattern> {
    let g = |r: Result<Graph>| r.expect("catalog graph is well formed");
    let p3up2 = g(Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]));
    let codomino_chords = [("v1", "v3"), ("u1", "u3")];
    let ux_common = [("x", "v2"), ("x", "u2")];
    let cat = vec![
        numbered("p2", g(Graph::path(2))),
        numbered("p3", g(Graph::path(3))),
        numbered("p4", g(Graph::path(4))),
        numbered("p5", g(Graph::path(5))),
        numbered("c4", g(Graph::cycle(4))),
        numbered("c5", g(Graph::cycle(5))),
        numbered("c6", g(Graph::cycle(6))),
        numbered("k3", g(Graph::complete(3))),
        numbered("k4", g(Graph::complete(4))),
        numbered("2k2", g(Graph::from_edges(4, &[(0, 1), (2, 3)]))),
        numbered("4k1", g(Graph::empty(4))),
        numbered("p3up2", p3up2.clone()),
        numbered("k3up2", g(Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]))),
        numbered("diamond", g(Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]))),
        with_hole("codomino", &DOMINO, &codomino_chords, &[]),
        // u is a common neighbor of v1, v2 complete to {u1, u2}; x sees v2 and u2.
        with_hole(
            "codomino1",
            &DOMINO_UX,
            &[
                codomino_chords[0],
                codomino_chords[1],
                ("u", "u1"),
                ("u", "u2"),
                ("u", "v1"),
                ("u", "v2"),
                ux_common[0],
                ux_common[1],
            ],
            &[("x", "u")],
        ),
        // u is a common neighbor of v1, v2 complete to {u2, u3, x}.
        with_hole(
            "codomino2",
            &DOMINO_UX,
            &[
                codomino_chords[0],
                codomino_chords[1],
                ("u", "v1"),
                ("u", "v2"),
                ("u", "u2"),
                ("u", "u3"),
                ux_common[0],
                ux_common[1],
                ("x", "u"),
            ],
            &[],
        ),
        // As codomino2 without the edge xu.
        with_hole(
            "codomino3",
            &DOMINO_UX,
            &[
                codomino_chords[0],
                codomino_chords[1],
                ("u", "v1"),
                ("u", "v2"),
                ("u", "u2"),
                ("u", "u3"),
                ux_common[0],
                ux_common[1],
            ],
            &[],
        ),
        with_hole("coa", &DOMINO, &[codomino_chords[0], codomino_chords[1], ("u1", "v3")], &[]),
        // u sees v2 and u2, so that u lies in B2 of the triangle v1 v2 v3.
        with_hole("x1", &HOLE_U, &[("v1", "v3"), ("u", "v2"), ("u", "u2")], &[]),
        with_hole(
            "x2",
            &HOLE_U,
            &[("v1", "v3"), ("v3", "u1"), ("u1", "u3"), ("v2", "u"), ("u", "u2")],
            &[],
        ),
        Pattern::new(
            "cotwinc5",
            &["v1", "v2", "v3", "v4", "v5", "v6"],
            &[
                ("v1", "v2"),
                ("v2", "v3"),
                ("v3", "v4"),
                ("v4", "v5"),
                ("v5", "v1"),
                ("v6", "v3"),
                ("v6", "v4"),
                ("v6", "v5"),
            ],
            &[],
        )
        .expect("catalog pattern is well formed"),
        with_hole("yfam", &HOLE_U, &[("u", "v1"), ("u", "v2"), ("u", "u2")], &[("u", "u1")]),
        with_hole("chi37", &DOMINO, &[("v1", "v3")], &[]),
        numbered("cop3up2", p3up2.complement()),
    ];
    debug_assert!(cat.iter().map(Pattern::name).eq(PATTERN_NAMES));
    cat
}

/// Every named pattern, each exactly once, in [`PATTERN_NAMES`] order.
pub fn catalog() -> &'static [Pattern] {
    static CATALOG: OnceLock<Vec<Pattern>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Patterns used internally by the colorer but not part of the catalog.
fn auxiliary() -> &'static [Pattern] {
    static AUX: OnceLock<Vec<Pattern>> = OnceLock::new();
    AUX.get_or_init(|| {
        let p2up1 = Graph::from_edges(3, &[(0, 1)]).expect("well formed");
        vec![Pattern::from_graph("p2up1", p2up1)]
    })
}

/// Looks up a catalog pattern, or one of the auxiliary patterns (`p2up1`).
pub fn pattern(name: &str) -> Result<&'static Pattern> {
    catalog()
        .iter()
        .chain(auxiliary())
        .find(|p| p.name() == name)
        .ok_or_else(|| Error::UnknownPattern(name.to_string()))
}

pub(crate) fn named_pattern(name: &str) -> &'static Pattern {
    pattern(name).expect("name is in the catalog")
}

/// First induced occurrence of `p` in `host`.
///
/// Pattern vertices are matched in decreasing order of degree (ties by
/// index) against host vertices in increasing order, so the witness is the
/// lexicographically least image sequence in that matching order.
pub fn contains_induced<W: Word>(host: &Graph<W>, p: &Pattern) -> Option<Embedding> {
    let k = p.n();
    if k > host.n() {
        return None;
    }
    let pg = p.graph();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pg.degree(v)), v));

    // rel[i][j] for j < i: relation between order[i] and order[j].
    let rel: Vec<Vec<Relation>> = (0..k)
        .map(|i| {
            (0..i)
                .map(|j| {
                    let (a, b) = (order[i], order[j]);
                    if p.is_optional(a, b) {
                        Relation::Free
                    } else if pg.adj(a, b) {
                        Relation::Adjacent
                    } else {
                        Relation::NonAdjacent
                    }
                })
                .collect()
        })
        .collect();
    let degree_ok: Vec<VertexSet<W>> = order
        .iter()
        .map(|&pv| {
            let need = pg.degree(pv);
            host.vertices().iter().filter(|&h| host.degree(h) >= need).collect()
        })
        .collect();

    let mut images = vec![0usize; k];
    let mut search = Search { host, rel: &rel, degree_ok: &degree_ok, images: &mut images };
    if !search.run(0, VertexSet::empty()) {
        return None;
    }
    let mut map = vec![0; k];
    for (i, &pv) in order.iter().enumerate() {
        map[pv] = images[i];
    }
    Some(Embedding { pattern: p.name().to_string(), map })
}

pub fn is_free_of<W: Word>(host: &Graph<W>, p: &Pattern) -> bool {
    contains_induced(host, p).is_none()
}

#[derive(Clone, Copy)]
enum Relation {
    Adjacent,
    NonAdjacent,
    Free,
}

struct Search<'a, W: Word> {
    host: &'a Graph<W>,
    rel: &'a [Vec<Relation>],
    degree_ok: &'a [VertexSet<W>],
    images: &'a mut [usize],
}

impl<W: Word> Search<'_, W> {
    fn run(&mut self, depth: usize, used: VertexSet<W>) -> bool {
        if depth == self.rel.len() {
            return true;
        }
        let mut cand = self.degree_ok[depth] - used;
        for (j, r) in self.rel[depth].iter().enumerate() {
            let row = self.host.row(self.images[j]);
            match r {
                Relation::Adjacent => cand = cand & row,
                Relation::NonAdjacent => cand = cand - row,
                Relation::Free => {}
            }
            if cand.is_empty() {
                return false;
            }
        }
        for h in cand {
            self.images[depth] = h;
            if self.run(depth + 1, used.with(h)) {
                return true;
            }
        }
        false
    }
}

/// Membership answer with a witness on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Member,
    Violation(Embedding),
}

impl Certificate {
    pub fn is_member(&self) -> bool {
        matches!(self, Certificate::Member)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            Certificate::Member => Ok(()),
            Certificate::Violation(e) => Err(Error::ClassViolation(e)),
        }
    }
}

fn free_of_all<W: Word>(g: &Graph<W>, names: &[&str]) -> Certificate {
    for name in names {
        if let Some(e) = contains_induced(g, named_pattern(name)) {
            return Certificate::Violation(e);
        }
    }
    Certificate::Member
}

/// Membership in the (P3+P2, K4)-free class.
pub fn is_class_member<W: Word>(g: &Graph<W>) -> Certificate {
    free_of_all(g, &["k4", "p3up2"])
}

/// Membership in the (4K1, co-(P3+P2))-free class.
pub fn is_bounds_class_member<W: Word>(g: &Graph<W>) -> Certificate {
    free_of_all(g, &["4k1", "cop3up2"])
}

//! Runtime verification of proof steps and assembly of the final color classes.

use crate::anomaly::{Anomaly, Violation};
use crate::decompose::induced_occurrence;
use crate::graph::{Graph, VertexSet, Word};
use crate::oracle::k_colorable;
use crate::patterns::Embedding;

use super::{CaseId, StableSet};

/// Collects anomalies while a case runs. Every check returns `None` after
/// recording the violation, so case code can bail out with `?`.
pub(crate) struct Checker<'g, W: Word> {
    pub g: &'g Graph<W>,
    pub anomalies: Vec<Anomaly>,
    /// The case currently being attempted.
    pub case: CaseId,
    pub witnesses: Vec<Embedding>,
    /// When false, hypotheses the constructions never rely on are only recorded.
    pub strict: bool,
}

impl<'g, W: Word> Checker<'g, W> {
    pub fn new(g: &'g Graph<W>) -> Self {
        Checker { g, anomalies: Vec::new(), case: CaseId::ResidualExact, witnesses: Vec::new(), strict: false }
    }

    pub fn start(&mut self, case: CaseId, witness: &Embedding) {
        self.case = case;
        self.witnesses.push(witness.clone());
    }

    pub fn fail<T>(&mut self, claim: &str, violation: Violation) -> Option<T> {
        self.anomalies.push(Anomaly::new(self.g, claim, violation));
        None
    }

    /// Records the violation and aborts only in strict mode.
    pub fn note(&mut self, claim: &str, violation: Violation) -> Option<()> {
        self.anomalies.push(Anomaly::new(self.g, claim, violation));
        if self.strict { None } else { Some(()) }
    }

    pub fn stable(&mut self, claim: &str, s: VertexSet<W>) -> Option<()> {
        match self.g.edge_in(s) {
            None => Some(()),
            Some(edge) => self.fail(claim, Violation::EdgeInside { set: s.to_vec(), edge }),
        }
    }

    pub fn has_edge(&mut self, claim: &str, s: VertexSet<W>) -> Option<(usize, usize)> {
        match self.g.edge_in(s) {
            Some(e) => Some(e),
            None => self.fail(claim, Violation::NoEdge { set: s.to_vec() }),
        }
    }

    pub fn edges_at_most(&mut self, claim: &str, s: VertexSet<W>, limit: usize) -> Option<()> {
        if self.g.edges_in(s) <= limit {
            Some(())
        } else {
            self.fail(claim, Violation::TooManyEdges { set: s.to_vec(), limit })
        }
    }

    pub fn size_at_most(&mut self, claim: &str, s: VertexSet<W>, limit: usize) -> Option<()> {
        if s.len() <= limit {
            Some(())
        } else {
            self.fail(claim, Violation::TooLarge { set: s.to_vec(), limit })
        }
    }

    /// At most one of `a`, `b` induces an edge.
    pub fn not_both_edges(&mut self, claim: &str, a: VertexSet<W>, b: VertexSet<W>) -> Option<()> {
        match (self.g.edge_in(a), self.g.edge_in(b)) {
            (Some(first_edge), Some(second_edge)) => self.fail(
                claim,
                Violation::EdgesInBoth { first: a.to_vec(), first_edge, second: b.to_vec(), second_edge },
            ),
            _ => Some(()),
        }
    }

    pub fn complete(&mut self, claim: &str, a: VertexSet<W>, b: VertexSet<W>) -> Option<()> {
        for u in a.iter() {
            if let Some(v) = (b - self.g.row(u)).without(u).first() {
                return self.fail(claim, Violation::Adjacency { u, v, adjacent: false });
            }
        }
        Some(())
    }

    pub fn anticomplete(&mut self, claim: &str, a: VertexSet<W>, b: VertexSet<W>) -> Option<()> {
        for u in a.iter() {
            if let Some(v) = (b & self.g.row(u)).first() {
                return self.fail(claim, Violation::Adjacency { u, v, adjacent: true });
            }
        }
        Some(())
    }

    /// Every vertex of `s` sees, inside `within`, one of the `allowed` sets.
    pub fn neighborhoods(
        &mut self,
        claim: &str,
        s: VertexSet<W>,
        within: VertexSet<W>,
        allowed: &[VertexSet<W>],
    ) -> Option<()> {
        for v in s.iter() {
            let found = self.g.row(v) & within;
            if !allowed.contains(&found) {
                return self.fail(
                    claim,
                    Violation::Neighborhood { vertex: v, set: within.to_vec(), found: found.to_vec() },
                );
            }
        }
        Some(())
    }

    /// Every vertex of `s` has a neighbor in `within`.
    pub fn neighborhoods_meet(&mut self, claim: &str, s: VertexSet<W>, within: VertexSet<W>) -> Option<()> {
        match s.iter().find(|&v| (self.g.row(v) & within).is_empty()) {
            None => Some(()),
            Some(v) => self.fail(claim, Violation::Neighborhood { vertex: v, set: within.to_vec(), found: Vec::new() }),
        }
    }

    pub fn empty(&mut self, claim: &str, s: VertexSet<W>, within: VertexSet<W>) -> Option<()> {
        match s.first() {
            None => Some(()),
            Some(v) => {
                let found = self.g.row(v) & within;
                self.fail(claim, Violation::Neighborhood { vertex: v, set: within.to_vec(), found: found.to_vec() })
            }
        }
    }

    /// `G[s]` contains no induced copy of the named pattern.
    pub fn free_of(&mut self, claim: &str, s: VertexSet<W>, pattern: &str) -> Option<()> {
        match induced_occurrence(self.g, s, pattern) {
            None => Some(()),
            Some(embedding) => self.fail(claim, Violation::PatternInside { set: s.to_vec(), embedding }),
        }
    }
}

struct Group<W: Word> {
    set: VertexSet<W>,
    colors: usize,
    claim: String,
}

/// Ordered color groups. Each group's claim is checked on the whole stated
/// set; vertices already placed by an earlier group are then dropped, which
/// keeps the classes disjoint.
pub(crate) struct Assembly<W: Word> {
    groups: Vec<Group<W>>,
}

impl<W: Word> Assembly<W> {
    pub fn new() -> Self {
        Assembly { groups: Vec::new() }
    }

    pub fn stable(&mut self, claim: &str, set: VertexSet<W>) -> &mut Self {
        self.bounded(claim, set, 1)
    }

    /// `set` is claimed to be `colors`-colorable; checked by exact search.
    pub fn bounded(&mut self, claim: &str, set: VertexSet<W>, colors: usize) -> &mut Self {
        self.groups.push(Group { set, colors, claim: claim.to_string() });
        self
    }

    pub fn budget(&self) -> usize {
        self.groups.iter().map(|g| g.colors).sum()
    }

    pub fn finish(&self, ck: &mut Checker<'_, W>) -> Option<Vec<StableSet>> {
        debug_assert!(self.budget() <= 7, "a case spends more than seven colors");
        let g = ck.g;
        let mut placed = VertexSet::<W>::empty();
        let mut out = Vec::new();
        for group in &self.groups {
            let classes = if group.colors == 1 {
                ck.stable(&group.claim, group.set)?;
                vec![group.set]
            } else {
                let sub = g.induced(group.set).expect("group sets lie inside the host");
                match k_colorable(&sub, group.colors) {
                    Some(c) => {
                        let labels = group.set.to_vec();
                        c.classes::<W>()
                            .into_iter()
                            .map(|cls| cls.iter().map(|i| labels[i]).collect())
                            .collect()
                    }
                    None => {
                        return ck.fail(
                            &group.claim,
                            Violation::NotColorable { set: group.set.to_vec(), colors: group.colors },
                        )
                    }
                }
            };
            for cls in classes {
                let fresh = cls - placed;
                placed = placed | fresh;
                if !fresh.is_empty() {
                    out.push(StableSet { vertices: fresh.to_vec(), claim: group.claim.clone() });
                }
            }
        }
        let missing = g.vertices() - placed;
        if !missing.is_empty() {
            return ck.fail("assembly.covers_all_vertices", Violation::Uncovered { vertices: missing.to_vec() });
        }
        Some(out)
    }
}

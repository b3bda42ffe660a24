//! Partitions around a triangle and the D1/D2 split by local clique number.

use crate::anomaly::{Anomaly, Violation};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};
use crate::oracle::max_clique_in;
use crate::patterns::{contains_induced, named_pattern, Embedding};

/// The partition of `V` relative to a triangle `t = (v1, v2, v3)`.
///
/// `b[0]` holds `A0` together with the vertices whose only triangle neighbor
/// is `v1`; `b[1]`, `b[2]` likewise for `v2`, `v3`. `a2_splits[i]` holds the
/// vertices of `A2` adjacent to `t[i]` and `t[i-1]` (indices mod 3), so it is
/// anticomplete to `t[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleDecomposition<W: Word = u64> {
    pub triangle: [usize; 3],
    pub a0: VertexSet<W>,
    pub a1: VertexSet<W>,
    pub a2: VertexSet<W>,
    /// Vertices adjacent to all of `t`; empty in K4-free hosts.
    pub a3: VertexSet<W>,
    pub b: [VertexSet<W>; 3],
    pub a2_splits: [VertexSet<W>; 3],
}

impl<W: Word> TriangleDecomposition<W> {
    /// `a2_splits[i]` plus the triangle vertex it misses.
    pub fn a2_class(&self, i: usize) -> VertexSet<W> {
        self.a2_splits[i].with(self.triangle[(i + 1) % 3])
    }

    pub fn triangle_set(&self) -> VertexSet<W> {
        self.triangle.iter().copied().collect()
    }
}

pub fn around_triangle<W: Word>(g: &Graph<W>, t: (usize, usize, usize)) -> Result<TriangleDecomposition<W>> {
    let tri = [t.0, t.1, t.2];
    for &v in &tri {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if t.0 == t.1 || t.1 == t.2 || t.0 == t.2 || !g.adj(t.0, t.1) || !g.adj(t.1, t.2) || !g.adj(t.0, t.2) {
        return Err(Error::InvalidTriangle(t.0, t.1, t.2));
    }
    let ts: VertexSet<W> = tri.iter().copied().collect();
    let mut d = TriangleDecomposition {
        triangle: tri,
        a0: VertexSet::empty(),
        a1: VertexSet::empty(),
        a2: VertexSet::empty(),
        a3: VertexSet::empty(),
        b: [VertexSet::empty(); 3],
        a2_splits: [VertexSet::empty(); 3],
    };
    for v in (g.vertices() - ts).iter() {
        let hits = g.row(v) & ts;
        match hits.len() {
            0 => d.a0.insert(v),
            1 => {
                d.a1.insert(v);
                let i = tri.iter().position(|&x| hits.contains(x)).expect("one hit");
                d.b[i].insert(v);
            }
            2 => {
                d.a2.insert(v);
                let i = (0..3)
                    .find(|&i| hits.contains(tri[i]) && hits.contains(tri[(i + 2) % 3]))
                    .expect("two hits");
                d.a2_splits[i].insert(v);
            }
            _ => d.a3.insert(v),
        }
    }
    d.b[0] = d.b[0] | d.a0;
    Ok(d)
}

/// Looks for an induced P3 inside some `B_i`.
pub fn verify_bi_p3_free<W: Word>(g: &Graph<W>, d: &TriangleDecomposition<W>) -> Option<Anomaly> {
    d.b.iter().find_map(|&b| {
        let emb = induced_occurrence(g, b, "p3")?;
        Some(Anomaly::new(g, "triangle.b_p3_free", Violation::PatternInside { set: b.to_vec(), embedding: emb }))
    })
}

/// An occurrence of catalog pattern `name` inside `G[s]`, in host labels.
pub(crate) fn induced_occurrence<W: Word>(g: &Graph<W>, s: VertexSet<W>, name: &str) -> Option<Embedding> {
    let sub = g.induced(s).ok()?;
    let emb = contains_induced(&sub, named_pattern(name))?;
    let labels = s.to_vec();
    Some(Embedding { pattern: emb.pattern, map: emb.map.iter().map(|&i| labels[i]).collect() })
}

/// Which neighborhood is removed when testing membership in `D1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Neighborhood {
    /// `G − N(x)`, keeping `x`.
    #[default]
    Open,
    /// `G − N[x]`.
    Closed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D1D2Partition<W: Word = u64> {
    pub d1: VertexSet<W>,
    pub d2: VertexSet<W>,
}

pub fn in_d1<W: Word>(g: &Graph<W>, x: usize, mode: Neighborhood) -> bool {
    let mut rest = g.vertices() - g.row(x);
    if mode == Neighborhood::Closed {
        rest.remove(x);
    }
    max_clique_in(g, rest).len() <= 2
}

pub fn d1d2<W: Word>(g: &Graph<W>) -> D1D2Partition<W> {
    d1d2_with(g, Neighborhood::Open)
}

pub fn d1d2_with<W: Word>(g: &Graph<W>, mode: Neighborhood) -> D1D2Partition<W> {
    let d1: VertexSet<W> = g.vertices().iter().filter(|&x| in_d1(g, x, mode)).collect();
    D1D2Partition { d1, d2: g.vertices() - d1 }
}

/// Splits `N(v1) ∪ N(v2) − {v1, v2}` into `[S1, S2, S3, S4, S5]` where
/// `S5 = N(v1) ∩ N(v2)` and the first four are the parts of the union
/// determined by adjacency to `v3`.
pub fn five_set_split<W: Word>(g: &Graph<W>, v1: usize, v2: usize, v3: usize) -> Result<[VertexSet<W>; 5]> {
    for v in [v1, v2, v3] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if v1 == v2 || v3 == v1 || v3 == v2 || !g.adj(v1, v2) || g.adj(v1, v3) || g.adj(v2, v3) {
        return Err(Error::InvalidConfiguration(format!(
            "({v1}, {v2}, {v3}) does not induce P2 ∪ P1"
        )));
    }
    if let Some(&v) = [v1, v2, v3].iter().find(|&&v| !in_d1(g, v, Neighborhood::Open)) {
        return Err(Error::InvalidConfiguration(format!("vertex {v} is not in D1")));
    }
    let pair = VertexSet::singleton(v1).with(v2);
    let (n1, n2, n3) = (g.row(v1) - pair, g.row(v2) - pair, g.row(v3));
    let s5 = n1 & n2;
    Ok([(n1 - n3) - s5, (n1 & n3) - n2, (n2 - n3) - s5, (n2 & n3) - n1, s5])
}

/// Outcome of checking one claim over one graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimTally {
    /// Instances satisfying the claim's hypotheses.
    pub hits: usize,
    pub violations: Vec<Anomaly>,
}

impl ClaimTally {
    pub fn absorb(&mut self, other: ClaimTally) {
        self.hits += other.hits;
        self.violations.extend(other.violations);
    }
}

fn nonadjacent_pairs<W: Word>(g: &Graph<W>, s: VertexSet<W>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in s.iter() {
        for b in (s - g.row(a)).iter().filter(|&b| b > a) {
            out.push((a, b));
        }
    }
    out
}

/// For nonadjacent `y1, y2` in `D1`, both `N(y1) − N(y2)` and `N(y2) − N(y1)`
/// are edge-free.
pub fn check_d1_nonadjacent_claim<W: Word>(g: &Graph<W>) -> ClaimTally {
    let part = d1d2(g);
    let mut tally = ClaimTally::default();
    for (a, b) in nonadjacent_pairs(g, part.d1) {
        tally.hits += 1;
        for (x, y) in [(a, b), (b, a)] {
            let s = g.row(x) - g.row(y);
            if let Some(edge) = g.edge_in(s) {
                tally.violations.push(Anomaly::new(
                    g,
                    "d1.nonadjacent_difference_edge_free",
                    Violation::EdgeInside { set: s.to_vec(), edge },
                ));
            }
        }
    }
    tally
}

/// In a (K3 ∪ P2, co-domino, co-A)-free graph whose `G[D1]` is
/// (P2 ∪ P1)-free, one side of every nonadjacent pair in `D1` has an
/// edge-free private neighborhood. Graphs outside the hypothesis contribute
/// no hits.
pub fn check_c8_claim<W: Word>(g: &Graph<W>) -> ClaimTally {
    let mut tally = ClaimTally::default();
    if ["k3up2", "codomino", "coa"].iter().any(|p| contains_induced(g, named_pattern(p)).is_some()) {
        return tally;
    }
    let part = d1d2(g);
    if induced_occurrence(g, part.d1, "p2up1").is_some() {
        return tally;
    }
    for (a, b) in nonadjacent_pairs(g, part.d1) {
        tally.hits += 1;
        let (s1, s2) = (g.row(a) - g.row(b), g.row(b) - g.row(a));
        if let (Some(first_edge), Some(second_edge)) = (g.edge_in(s1), g.edge_in(s2)) {
            tally.violations.push(Anomaly::new(
                g,
                "c8.one_side_edge_free",
                Violation::EdgesInBoth { first: s1.to_vec(), first_edge, second: s2.to_vec(), second_edge },
            ));
        }
    }
    tally
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn codomino_around_its_triangle() {
        // Labels: v1 v2 v3 u1 u2 u3 = 0..6.
        let g = pattern("codomino").unwrap().graph().clone();
        let d = around_triangle(&g, (0, 1, 2)).unwrap();
        assert_eq!(d.a0, set(&[4]));
        assert_eq!(d.a1, set(&[3, 5]));
        assert!(d.a2.is_empty() && d.a3.is_empty());
        assert_eq!(d.b, [set(&[3, 4]), set(&[]), set(&[5])]);
        assert!(verify_bi_p3_free(&g, &d).is_none());
    }

    #[test]
    fn triangle_checks() {
        let k3 = Graph::<u64>::complete(3).unwrap();
        let d = around_triangle(&k3, (0, 1, 2)).unwrap();
        assert!(d.a0.is_empty() && d.a1.is_empty() && d.a2.is_empty());
        let tw = pattern("cotwinc5").unwrap().graph().clone();
        // v3 v4 v6
        assert!(around_triangle(&tw, (2, 3, 5)).is_ok());
        assert_eq!(around_triangle(&tw, (0, 1, 2)), Err(Error::InvalidTriangle(0, 1, 2)));
    }

    #[test]
    fn a2_classes_are_stable() {
        let tw = pattern("cotwinc5").unwrap().graph().clone();
        let d = around_triangle(&tw, (2, 3, 5)).unwrap();
        for i in 0..3 {
            assert!(tw.is_stable(d.a2_class(i)));
        }
        assert_eq!(d.a2, set(&[4]));
    }

    #[test]
    fn d1d2_examples() {
        let c5 = Graph::<u64>::cycle(5).unwrap();
        assert_eq!(d1d2(&c5).d1, c5.vertices());
        let k4 = Graph::<u64>::complete(4).unwrap();
        assert_eq!(d1d2(&k4).d1, k4.vertices());
        let k3 = Graph::<u64>::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!(d1d2(&two).d2, two.vertices());
    }

    #[test]
    fn five_set_split_on_c5() {
        let c5 = Graph::<u64>::cycle(5).unwrap();
        let s = five_set_split(&c5, 0, 1, 3).unwrap();
        assert_eq!(s, [set(&[]), set(&[4]), set(&[]), set(&[2]), set(&[])]);
        let p2p1 = Graph::<u64>::from_edges(3, &[(0, 1)]).unwrap();
        assert!(five_set_split(&p2p1, 0, 1, 2).unwrap().iter().all(|s| s.is_empty()));
        assert!(matches!(five_set_split(&c5, 0, 2, 3), Err(Error::InvalidConfiguration(_))));
    }

    #[test]
    fn d1_claim_on_small_graphs() {
        let c5 = Graph::<u64>::cycle(5).unwrap();
        let t = check_d1_nonadjacent_claim(&c5);
        assert_eq!(t.hits, 5);
        assert!(t.violations.is_empty());
    }
}

//! Simple undirected graphs stored as one bitset row per vertex.
//!
//! The row type is generic over [`Word`], so the same code runs on `u64`
//! rows (up to 64 vertices, the common case) and `u128` rows (up to 128).

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

use num_traits::PrimInt;

use crate::error::{Error, Result};

/// Machine word backing a vertex bitset.
pub trait Word: PrimInt + Hash + fmt::Debug + Send + Sync + 'static {
    /// Number of vertices a single word can address.
    const BITS: usize;
}

impl Word for u64 {
    const BITS: usize = 64;
}

impl Word for u128 {
    const BITS: usize = 128;
}

/// Largest graph for which [`Graph::canonical_key`] is available.
pub const CANONICAL_KEY_LIMIT: usize = 10;

/// A subset of `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet<W: Word = u64> {
    bits: W,
}

impl<W: Word> Default for VertexSet<W> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<W: Word> VertexSet<W> {
    pub fn empty() -> Self {
        VertexSet { bits: W::zero() }
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= W::BITS);
        if n == W::BITS {
            VertexSet { bits: !W::zero() }
        } else {
            VertexSet { bits: (W::one() << n) - W::one() }
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet { bits: W::one() << v }
    }

    pub fn from_bits(bits: W) -> Self {
        VertexSet { bits }
    }

    pub fn bits(self) -> W {
        self.bits
    }

    pub fn contains(self, v: usize) -> bool {
        v < W::BITS && (self.bits >> v) & W::one() == W::one()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits = self.bits | (W::one() << v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits = self.bits & !(W::one() << v);
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == W::zero()
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        if self.is_empty() {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == W::zero()
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == W::zero()
    }

    /// True when every member is below `n`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset(Self::full(n))
    }

    pub fn iter(self) -> VertexIter<W> {
        VertexIter { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl<W: Word> fmt::Debug for VertexSet<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl<W: Word> FromIterator<usize> for VertexSet<W> {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<W: Word> IntoIterator for VertexSet<W> {
    type Item = usize;
    type IntoIter = VertexIter<W>;

    fn into_iter(self) -> VertexIter<W> {
        self.iter()
    }
}

impl<W: Word> BitOr for VertexSet<W> {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet { bits: self.bits | rhs.bits }
    }
}

impl<W: Word> BitAnd for VertexSet<W> {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet { bits: self.bits & rhs.bits }
    }
}

impl<W: Word> BitXor for VertexSet<W> {
    type Output = Self;
    fn bitxor(self, rhs: Self) -> Self {
        VertexSet { bits: self.bits ^ rhs.bits }
    }
}

impl<W: Word> Sub for VertexSet<W> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        VertexSet { bits: self.bits & !rhs.bits }
    }
}

impl<W: Word> Not for VertexSet<W> {
    type Output = Self;
    fn not(self) -> Self {
        VertexSet { bits: !self.bits }
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct VertexIter<W: Word> {
    bits: W,
}

impl<W: Word> Iterator for VertexIter<W> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == W::zero() {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits = self.bits & (self.bits - W::one());
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl<W: Word> ExactSizeIterator for VertexIter<W> {}

/// Immutable simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph<W: Word = u64> {
    n: usize,
    rows: Vec<W>,
}

impl<W: Word> fmt::Debug for Graph<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl<W: Word> Graph<W> {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > W::BITS {
            return Err(Error::UnsupportedSize { what: "graph", n, limit: W::BITS });
        }
        Ok(Graph { n, rows: vec![W::zero(); n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric adjacency predicate; `f` is only called for `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for v in 1..n {
            for u in 0..v {
                if f(u, v) {
                    g.set(u, v, true);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        Self::from_fn(n, |u, v| v == u + 1 || (n > 2 && u == 0 && v == n - 1))
    }

    fn set(&mut self, u: usize, v: usize, on: bool) {
        if on {
            self.rows[u] = self.rows[u] | (W::one() << v);
            self.rows[v] = self.rows[v] | (W::one() << u);
        } else {
            self.rows[u] = self.rows[u] & !(W::one() << v);
            self.rows[v] = self.rows[v] & !(W::one() << u);
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_set(&self, s: VertexSet<W>) -> Result<()> {
        match (s - self.vertices()).first() {
            None => Ok(()),
            Some(vertex) => Err(Error::InvalidSet { vertex, n: self.n }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet<W> {
        VertexSet::full(self.n)
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        (self.rows[u] >> v) & W::one() == W::one()
    }

    /// Neighborhood of `v` without bounds checking beyond the slice index.
    pub fn row(&self, v: usize) -> VertexSet<W> {
        VertexSet::from_bits(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet<W>> {
        self.check_vertex(v)?;
        Ok(self.row(v))
    }

    /// `V - ({v} + N(v))`.
    pub fn non_neighbors(&self, v: usize) -> Result<VertexSet<W>> {
        self.check_vertex(v)?;
        Ok(self.vertices() - self.row(v).with(v))
    }

    /// `M(v1, v2) = V - ({v1, v2} + N(v1) + N(v2))`.
    pub fn joint_complement_set(&self, v1: usize, v2: usize) -> Result<VertexSet<W>> {
        self.check_vertex(v1)?;
        self.check_vertex(v2)?;
        Ok(self.vertices() - (self.row(v1) | self.row(v2)).with(v1).with(v2))
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.row(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let all = self.vertices();
        let rows = (0..self.n).map(|v| (all - self.row(v).with(v)).bits()).collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `s`, relabeled densely in ascending vertex order.
    pub fn induced(&self, s: VertexSet<W>) -> Result<Self> {
        self.check_set(s)?;
        let map = s.to_vec();
        Self::from_fn(map.len(), |i, j| self.adj(map[i], map[j]))
    }

    pub fn complete_to(&self, s1: VertexSet<W>, s2: VertexSet<W>) -> Result<bool> {
        self.check_pair(s1, s2)?;
        Ok(s1.iter().all(|u| s2.is_subset(self.row(u))))
    }

    pub fn anticomplete_to(&self, s1: VertexSet<W>, s2: VertexSet<W>) -> Result<bool> {
        self.check_pair(s1, s2)?;
        Ok(s1.iter().all(|u| self.row(u).is_disjoint(s2)))
    }

    fn check_pair(&self, s1: VertexSet<W>, s2: VertexSet<W>) -> Result<()> {
        self.check_set(s1)?;
        self.check_set(s2)?;
        if s1.is_disjoint(s2) {
            Ok(())
        } else {
            Err(Error::OverlappingSets)
        }
    }

    /// Lexicographically first edge with both ends in `s`.
    pub fn edge_in(&self, s: VertexSet<W>) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            let later = (self.row(u) & s).iter().find(|&v| v > u);
            later.map(|v| (u, v))
        })
    }

    pub fn edges_in(&self, s: VertexSet<W>) -> usize {
        s.iter().map(|u| (self.row(u) & s).len()).sum::<usize>() / 2
    }

    pub fn is_stable(&self, s: VertexSet<W>) -> bool {
        s.iter().all(|u| self.row(u).is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet<W>) -> bool {
        s.iter().all(|u| (s.without(u)).is_subset(self.row(u)))
    }

    /// Lexicographically first pair of distinct non-adjacent vertices inside `s`.
    pub fn non_edge_in(&self, s: VertexSet<W>) -> Option<(usize, usize)> {
        s.iter().find_map(|u| {
            let later = (s - self.row(u)).iter().find(|&v| v > u);
            later.map(|v| (u, v))
        })
    }

    /// Copy of the graph with the pair `{u, v}` flipped.
    pub fn toggled(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut g = self.clone();
        g.set(u, v, !self.adj(u, v));
        Ok(g)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        if self.adj(u, v) {
            self.toggled(u, v)
        } else {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            Ok(self.clone())
        }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidConfiguration(format!(
                "permutation of length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = VertexSet::<W>::empty();
        for &p in perm {
            self.check_vertex(p)?;
            if seen.contains(p) {
                return Err(Error::InvalidConfiguration("relabeling is not a permutation".into()));
            }
            seen.insert(p);
        }
        let mut g = Self::empty(self.n)?;
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edges(self.n + other.n, &edges)
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet<W>> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::empty();
                for v in frontier {
                    next = next | self.row(v);
                }
                frontier = next - comp;
                comp = comp | frontier;
            }
            left = left - comp;
            out.push(comp);
        }
        out
    }

    /// Same graph over a different row word.
    pub fn convert<V: Word>(&self) -> Result<Graph<V>> {
        Graph::<V>::from_edges(self.n, &self.edges())
    }

    /// Isomorphism-invariant key: the vertex count followed by the
    /// lexicographically least upper-triangle bitstring (column-major, the
    /// graph6 bit order) over all vertex orderings.
    pub fn canonical_key(&self) -> Result<Vec<u8>> {
        if self.n > CANONICAL_KEY_LIMIT {
            return Err(Error::UnsupportedSize {
                what: "canonical key",
                n: self.n,
                limit: CANONICAL_KEY_LIMIT,
            });
        }
        let mut search = KeySearch {
            g: self,
            order: Vec::with_capacity(self.n),
            cur: Vec::with_capacity(self.n * self.n / 2),
            best: None,
        };
        search.run(self.vertices());
        let bits = search.best.unwrap_or_default();
        let mut key = vec![self.n as u8];
        for chunk in bits.chunks(8) {
            let mut byte = 0u8;
            for (i, &b) in chunk.iter().enumerate() {
                byte |= b << (7 - i);
            }
            key.push(byte);
        }
        Ok(key)
    }
}

struct KeySearch<'a, W: Word> {
    g: &'a Graph<W>,
    order: Vec<usize>,
    cur: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl<W: Word> KeySearch<'_, W> {
    fn run(&mut self, left: VertexSet<W>) {
        if left.is_empty() {
            if self.best.as_ref().is_none_or(|b| self.cur < *b) {
                self.best = Some(self.cur.clone());
            }
            return;
        }
        for v in left {
            let mark = self.cur.len();
            for &u in &self.order {
                self.cur.push(self.g.adj(u, v) as u8);
            }
            let prune = match &self.best {
                Some(b) => self.cur.as_slice().cmp(&b[..self.cur.len()]) == Ordering::Greater,
                None => false,
            };
            if !prune {
                self.order.push(v);
                self.run(left.without(v));
                self.order.pop();
            }
            self.cur.truncate(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type G = Graph<u64>;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn isomorphic_brute(a: &G, b: &G) -> bool {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..a.n()).collect();
        loop {
            if a.relabeled(&perm).unwrap() == *b {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        if p.len() < 2 {
            return false;
        }
        let mut i = p.len() - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = p.len() - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        let k3 = G::complete(3).unwrap();
        assert_eq!(k3.complement(), G::empty(3).unwrap());
        let c5 = G::cycle(5).unwrap();
        assert_eq!(c5.complement().complement(), c5);
    }

    #[test]
    fn p4_is_self_complementary() {
        let p4 = G::path(4).unwrap();
        assert!(isomorphic_brute(&p4, &p4.complement()));
    }

    #[test]
    fn induced_subgraphs() {
        let c6 = G::cycle(6).unwrap();
        let p5 = c6.induced(set(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(p5.edges(), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(c6.induced(c6.vertices()).unwrap(), c6);
        let k4 = G::complete(4).unwrap();
        assert_eq!(k4.induced(set(&[0, 1])).unwrap(), G::complete(2).unwrap());
        assert_eq!(
            k4.induced(set(&[0, 7])),
            Err(Error::InvalidSet { vertex: 7, n: 4 })
        );
    }

    #[test]
    fn neighborhood_algebra() {
        let c5 = G::cycle(5).unwrap();
        assert_eq!(c5.neighbors(0).unwrap(), set(&[1, 4]));
        let c6 = G::cycle(6).unwrap();
        assert_eq!(c6.joint_complement_set(0, 1).unwrap(), set(&[3, 4]));
        let k4 = G::complete(4).unwrap();
        assert!(k4.non_neighbors(0).unwrap().is_empty());
        assert_eq!(k4.neighbors(9), Err(Error::VertexOutOfRange { vertex: 9, n: 4 }));
    }

    #[test]
    fn complete_and_anticomplete() {
        let k4 = G::complete(4).unwrap();
        assert!(k4.complete_to(set(&[0]), set(&[1, 2, 3])).unwrap());
        let two_k2 = G::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(two_k2.anticomplete_to(set(&[0, 1]), set(&[2, 3])).unwrap());
        let c5 = G::cycle(5).unwrap();
        assert!(!c5.complete_to(set(&[0]), set(&[1, 2])).unwrap());
        assert_eq!(c5.complete_to(set(&[0, 1]), set(&[1])), Err(Error::OverlappingSets));
    }

    #[test]
    fn canonical_keys() {
        let a = G::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = G::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(a.canonical_key().unwrap(), b.canonical_key().unwrap());
        assert_ne!(
            a.canonical_key().unwrap(),
            G::complete(3).unwrap().canonical_key().unwrap()
        );
        assert!(matches!(
            G::empty(11).unwrap().canonical_key(),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn canonical_key_counts_small_graphs() {
        // Known numbers of unlabeled graphs on n vertices.
        for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let pairs = n * (n - 1) / 2;
            let mut keys = std::collections::HashSet::new();
            for mask in 0u32..(1 << pairs) {
                let mut k = 0;
                let g = G::from_fn(n, |_, _| {
                    k += 1;
                    mask >> (k - 1) & 1 == 1
                })
                .unwrap();
                keys.insert(g.canonical_key().unwrap());
            }
            assert_eq!(keys.len(), expected, "n = {n}");
        }
    }

    #[test]
    fn canonical_key_agrees_with_brute_isomorphism() {
        // All graphs on 5 vertices compared pairwise against a sample.
        let n = 5;
        let all: Vec<G> = (0u32..1024)
            .map(|mask| {
                let mut k = 0;
                G::from_fn(n, |_, _| {
                    k += 1;
                    mask >> (k - 1) & 1 == 1
                })
                .unwrap()
            })
            .collect();
        for a in all.iter().step_by(37) {
            for b in all.iter().step_by(5) {
                assert_eq!(
                    a.canonical_key().unwrap() == b.canonical_key().unwrap(),
                    isomorphic_brute(a, b)
                );
            }
        }
    }

    #[test]
    fn components_and_wide_rows() {
        let g = G::from_edges(5, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(g.components(), vec![set(&[0, 3]), set(&[1, 2]), set(&[4])]);
        let big = Graph::<u128>::cycle(100).unwrap();
        assert_eq!(big.edge_count(), 100);
        assert!(big.adj(0, 99));
        assert!(Graph::<u64>::empty(65).is_err());
    }
}

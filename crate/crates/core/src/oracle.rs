//! Exact ground truth: clique number, k-colorability, chromatic number and a
//! brute-force pattern detector that shares no code with [`crate::patterns`].

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};
use crate::patterns::Pattern;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleCertificate {
    Clique(Vec<usize>),
    Coloring(Coloring),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub value: usize,
    pub certificate: OracleCertificate,
}

impl OracleResult {
    pub fn clique(&self) -> Option<&[usize]> {
        match &self.certificate {
            OracleCertificate::Clique(c) => Some(c),
            OracleCertificate::Coloring(_) => None,
        }
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.certificate {
            OracleCertificate::Coloring(c) => Some(c),
            OracleCertificate::Clique(_) => None,
        }
    }
}

/// Maximum clique inside `within`.
pub fn max_clique_in<W: Word>(g: &Graph<W>, within: VertexSet<W>) -> VertexSet<W> {
    let mut best = VertexSet::empty();
    expand(g, VertexSet::empty(), within, VertexSet::empty(), &mut best);
    best
}

/// Pivoting Bron–Kerbosch with a size bound.
fn expand<W: Word>(
    g: &Graph<W>,
    r: VertexSet<W>,
    mut p: VertexSet<W>,
    mut x: VertexSet<W>,
    best: &mut VertexSet<W>,
) {
    if p.is_empty() {
        if x.is_empty() && r.len() > best.len() {
            *best = r;
        }
        return;
    }
    if r.len() + p.len() <= best.len() {
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (p & g.row(u)).len())
        .expect("p is nonempty");
    for v in p - g.row(pivot) {
        let nv = g.row(v);
        expand(g, r.with(v), p & nv, x & nv, best);
        p.remove(v);
        x.insert(v);
        if r.len() + p.len() <= best.len() {
            return;
        }
    }
}

pub fn clique_number<W: Word>(g: &Graph<W>) -> OracleResult {
    let c = max_clique_in(g, g.vertices());
    OracleResult { value: c.len(), certificate: OracleCertificate::Clique(c.to_vec()) }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_colorable<W: Word>(g: &Graph<W>, k: usize) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring::from_labels(&[]).expect("empty coloring"));
    }
    if k == 0 {
        return None;
    }
    let seed = max_clique_in(g, g.vertices());
    if seed.len() > k {
        return None;
    }
    let mut search = Search::new(g, k);
    for (i, v) in seed.iter().enumerate() {
        search.assign(v, i);
    }
    if search.solve(seed.len()) {
        Some(search.finish())
    } else {
        None
    }
}

/// Greedy saturation coloring; never backtracks.
pub fn greedy<W: Word>(g: &Graph<W>) -> Coloring {
    let mut search = Search::new(g, g.n().max(1));
    let mut used = 0;
    while let Some(v) = search.pick() {
        let c = (0..=used).find(|&c| search.fits(v, c)).expect("a fresh color always fits");
        search.assign(v, c);
        used = used.max(c + 1);
    }
    search.finish()
}

/// Chromatic number by a linear scan from the clique bound up to the greedy bound.
pub fn exact_chromatic<W: Word>(g: &Graph<W>) -> OracleResult {
    let upper = greedy(g);
    let lower = clique_number(g).value;
    for k in lower..upper.k() {
        if let Some(c) = k_colorable(g, k) {
            return OracleResult { value: c.k(), certificate: OracleCertificate::Coloring(c) };
        }
    }
    OracleResult { value: upper.k(), certificate: OracleCertificate::Coloring(upper) }
}

/// Backtracking coloring: the next vertex is the uncolored one with the most
/// distinct neighboring colors (ties: most uncolored neighbors, then lowest
/// index); a new color is only opened as the next unused index.
struct Search<'a, W: Word> {
    g: &'a Graph<W>,
    k: usize,
    color: Vec<usize>,
    classes: Vec<VertexSet<W>>,
    uncolored: VertexSet<W>,
}

impl<'a, W: Word> Search<'a, W> {
    fn new(g: &'a Graph<W>, k: usize) -> Self {
        Search {
            g,
            k,
            color: vec![usize::MAX; g.n()],
            classes: vec![VertexSet::empty(); k],
            uncolored: g.vertices(),
        }
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        self.g.row(v).is_disjoint(self.classes[c])
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        self.classes[c].insert(v);
        self.uncolored.remove(v);
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.classes[c].remove(v);
        self.color[v] = usize::MAX;
        self.uncolored.insert(v);
    }

    fn saturation(&self, v: usize) -> usize {
        let row = self.g.row(v);
        self.classes.iter().filter(|c| !row.is_disjoint(**c)).count()
    }

    fn pick(&self) -> Option<usize> {
        self.uncolored.iter().max_by_key(|&v| {
            (self.saturation(v), (self.g.row(v) & self.uncolored).len(), std::cmp::Reverse(v))
        })
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.fits(v, c) {
                self.assign(v, c);
                if self.solve(used.max(c + 1)) {
                    return true;
                }
                self.unassign(v);
            }
        }
        false
    }

    fn finish(&self) -> Coloring {
        let labels: Vec<usize> = self.color.iter().map(|&c| c + 1).collect();
        Coloring::from_labels(&labels).expect("every vertex is colored")
    }
}

/// Size limits for [`brute_contains`].
pub const BRUTE_PATTERN_LIMIT: usize = 8;
pub const BRUTE_HOST_LIMIT: usize = 12;

/// Reference detector: every vertex subset of the right size, every
/// bijection onto it, every member of a pattern family.
pub fn brute_contains<W: Word>(host: &Graph<W>, p: &Pattern) -> Result<bool> {
    if p.n() > BRUTE_PATTERN_LIMIT {
        return Err(Error::UnsupportedSize { what: "brute pattern", n: p.n(), limit: BRUTE_PATTERN_LIMIT });
    }
    if host.n() > BRUTE_HOST_LIMIT {
        return Err(Error::UnsupportedSize { what: "brute host", n: host.n(), limit: BRUTE_HOST_LIMIT });
    }
    let k = p.n();
    if k > host.n() {
        return Ok(false);
    }
    let members = family_members(p);
    let member_degrees: Vec<Vec<usize>> = members.iter().map(sorted_degrees).collect();
    let member_edges: Vec<usize> = members.iter().map(|m| m.edge_count()).collect();

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let sub = host.induced(subset.iter().copied().collect())?;
        let sub = sub.convert::<u64>()?;
        let sub_edges = sub.edge_count();
        let sub_degrees = sorted_degrees(&sub);
        for (i, m) in members.iter().enumerate() {
            if member_edges[i] == sub_edges
                && member_degrees[i] == sub_degrees
                && some_bijection_matches(m, &sub)
            {
                return Ok(true);
            }
        }
        if !next_combination(&mut subset, host.n()) {
            return Ok(false);
        }
    }
}

fn family_members(p: &Pattern) -> Vec<Graph> {
    let opt = p.optional();
    (0u32..1 << opt.len())
        .map(|mask| {
            let mut edges = p.graph().edges();
            edges.extend(opt.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e));
            Graph::from_edges(p.n(), &edges).expect("pattern pairs are in range")
        })
        .collect()
}

fn sorted_degrees(g: &Graph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

fn some_bijection_matches(pattern: &Graph, sub: &Graph) -> bool {
    let k = pattern.n();
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let ok = (0..k).all(|a| (a + 1..k).all(|b| pattern.adj(a, b) == sub.adj(perm[a], perm[b])));
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
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

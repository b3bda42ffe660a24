//! Exhaustive enumeration, seeded random class members and mutation.

use std::collections::HashSet;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Word};
use crate::patterns::{contains_induced, is_class_member, named_pattern, pattern, Pattern};

/// Largest `n` for exhaustive labeled enumeration.
pub const ENUMERATION_LIMIT: usize = 7;

/// Pairs `(i, j)`, `i < j`, in graph6 bit order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Every labeled graph on `n` vertices. Bit `b` of the index decides the
/// `b`-th pair in graph6 order, so graph `i` of the stream has index `i`.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph> + Clone> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::UnsupportedSize { what: "exhaustive enumeration", n, limit: ENUMERATION_LIMIT });
    }
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |mask| graph_from_mask(n, &pairs, mask)))
}

/// Graph `index` of [`enumerate_graphs`]`(n)`.
pub fn labeled_graph(n: usize, index: u64) -> Result<Graph> {
    if index >= labeled_count(n)? {
        return Err(Error::InvalidConfiguration(format!("index {index} past the {n}-vertex stream")));
    }
    Ok(graph_from_mask(n, &pairs(n), index))
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges: Vec<(usize, usize)> =
        pairs.iter().enumerate().filter(|&(b, _)| mask >> b & 1 == 1).map(|(_, &e)| e).collect();
    Graph::from_edges(n, &edges).expect("pairs are in range")
}

/// The number of labeled graphs on `n` vertices, `2^(n(n-1)/2)`.
pub fn labeled_count(n: usize) -> Result<u64> {
    if n > ENUMERATION_LIMIT {
        return Err(Error::UnsupportedSize { what: "exhaustive enumeration", n, limit: ENUMERATION_LIMIT });
    }
    Ok(1u64 << (n * n.saturating_sub(1) / 2))
}

/// One representative per isomorphism class, first labeled occurrence kept.
pub fn enumerate_unlabeled(n: usize) -> Result<Vec<Graph>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in enumerate_graphs(n)? {
        if seen.insert(g.canonical_key()?) {
            out.push(g);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenConfig {
    pub n: usize,
    pub edge_probability: f64,
    pub seed: u64,
    pub max_repair_steps: usize,
}

impl GenConfig {
    pub fn new(n: usize, edge_probability: f64, seed: u64) -> Self {
        GenConfig { n, edge_probability, seed, max_repair_steps: 10_000 }
    }

    fn check<W: Word>(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return Err(Error::InvalidConfiguration(format!(
                "edge probability {} is outside [0, 1]",
                self.edge_probability
            )));
        }
        if self.n > W::BITS {
            return Err(Error::UnsupportedSize { what: "generated graph", n: self.n, limit: W::BITS });
        }
        Ok(())
    }
}

/// Seed for item `index` of a campaign: independent of how items are
/// distributed over workers.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(base);
    rng.set_stream(index);
    rng.next_u64()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn random_graph<W: Word>(n: usize, p: f64, rng: &mut impl Rng) -> Result<Graph<W>> {
    let mut edges = Vec::new();
    for (i, j) in pairs(n) {
        if rng.gen_bool(p) {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Deletes edges until `g` is (K4, P3+P2)-free. Each step removes a seeded
/// choice among the edges of a K4 occurrence, or among the P2 edge and the
/// two P3 edges of a P3+P2 occurrence. Edges in `keep` are never removed.
fn repair<W: Word>(
    mut g: Graph<W>,
    rng: &mut impl Rng,
    budget: usize,
    keep: &[(usize, usize)],
) -> Result<Graph<W>> {
    let k4 = named_pattern("k4");
    let p3up2 = named_pattern("p3up2");
    let kept = |a: usize, b: usize| keep.contains(&(a.min(b), a.max(b)));
    for _ in 0..=budget {
        let candidates: Vec<(usize, usize)> = if let Some(e) = contains_induced(&g, k4) {
            let m = &e.map;
            (0..4).flat_map(|i| (i + 1..4).map(move |j| (m[i], m[j]))).collect()
        } else if let Some(e) = contains_induced(&g, p3up2) {
            let m = &e.map;
            vec![(m[3], m[4]), (m[0], m[1]), (m[1], m[2])]
        } else {
            return Ok(g);
        };
        let free: Vec<_> = candidates.into_iter().filter(|&(a, b)| !kept(a, b)).collect();
        if free.is_empty() {
            break;
        }
        let (a, b) = free[rng.gen_range(0..free.len())];
        g = g.without_edge(a, b)?;
    }
    Err(Error::GenerationFailure(budget))
}

fn certified<W: Word>(g: Graph<W>) -> Result<Graph<W>> {
    is_class_member(&g).into_result()?;
    Ok(g)
}

/// A random (P3+P2, K4)-free graph: a `G(n, p)` draw repaired by edge
/// deletion, then certified.
pub fn random_class_member<W: Word>(cfg: &GenConfig) -> Result<Graph<W>> {
    cfg.check::<W>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let g = random_graph(cfg.n, cfg.edge_probability, &mut rng)?;
    certified(repair(g, &mut rng, cfg.max_repair_steps, &[])?)
}

/// A random class member containing `p` induced: `p` is planted on random
/// vertices before repair, and its edges are kept.
pub fn random_class_member_with<W: Word>(cfg: &GenConfig, p: &Pattern) -> Result<Graph<W>> {
    cfg.check::<W>()?;
    let k = p.n();
    if k > cfg.n {
        return Err(Error::InvalidConfiguration(format!("{} does not fit in {} vertices", p.name(), cfg.n)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut spots: Vec<usize> = (0..cfg.n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..cfg.n);
        spots.swap(i, j);
    }
    let spots = &spots[..k];
    let base: Graph<W> = random_graph(cfg.n, cfg.edge_probability, &mut rng)?;
    let planted = p.with_optional_edges();
    let g = Graph::from_fn(cfg.n, |a, b| {
        match (spots.iter().position(|&s| s == a), spots.iter().position(|&s| s == b)) {
            (Some(i), Some(j)) => planted.adj(i, j),
            _ => base.adj(a, b),
        }
    })?;
    let keep: Vec<(usize, usize)> = planted
        .edges()
        .into_iter()
        .map(|(i, j)| (spots[i].min(spots[j]), spots[i].max(spots[j])))
        .collect();
    let g = certified(repair(g, &mut rng, cfg.max_repair_steps, &keep)?)?;
    debug_assert!(contains_induced(&g, p).is_some());
    Ok(g)
}

/// Flips one uniformly chosen vertex pair of `g`, then repairs.
pub fn mutate<W: Word>(g: &Graph<W>, seed: u64) -> Result<Graph<W>> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = if n < 2 {
        g.clone()
    } else {
        let all = pairs(n);
        let (a, b) = all[rng.gen_range(0..all.len())];
        g.toggled(a, b)?
    };
    let budget = g.edge_count();
    certified(repair(g, &mut rng, budget, &[])?)
}

/// A (4K1, co-(P3+P2))-free graph: the complement of a random class member.
pub fn random_bounds_member<W: Word>(cfg: &GenConfig) -> Result<Graph<W>> {
    Ok(random_class_member::<W>(cfg)?.complement())
}

/// The graph of a catalog pattern. A family is given without its optional
/// edges; `name+edge` adds them.
pub fn named(name: &str) -> Result<Graph> {
    if let Some(base) = name.strip_suffix("+edge") {
        let p = pattern(base)?;
        if p.optional().is_empty() {
            return Err(Error::UnknownPattern(name.to_string()));
        }
        return Ok(p.with_optional_edges());
    }
    Ok(pattern(name)?.graph().clone())
}

/// Every name accepted by [`named`].
pub fn named_variants() -> Vec<String> {
    let mut out = Vec::new();
    for p in crate::patterns::catalog() {
        out.push(p.name().to_string());
        if !p.optional().is_empty() {
            out.push(format!("{}+edge", p.name()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_unlabeled(3).unwrap().len(), 4);
        assert_eq!(enumerate_unlabeled(4).unwrap().len(), 11);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn enumeration_follows_graph6_bit_order() {
        let gs: Vec<Graph> = enumerate_graphs(3).unwrap().collect();
        assert_eq!(gs[1].edges(), vec![(0, 1)]);
        assert_eq!(gs[2].edges(), vec![(0, 2)]);
        assert_eq!(gs[4].edges(), vec![(1, 2)]);
        assert_eq!(graph6::encode(&gs[7]), "Bw");
        for (i, g) in enumerate_graphs(4).unwrap().enumerate() {
            assert_eq!(labeled_graph(4, i as u64).unwrap(), g);
        }
        assert!(labeled_graph(3, 8).is_err());
    }

    #[test]
    fn generation_is_deterministic_and_certified() {
        let cfg = GenConfig::new(12, 0.5, 42);
        let a: Graph = random_class_member(&cfg).unwrap();
        let b: Graph = random_class_member(&cfg).unwrap();
        assert_eq!(graph6::encode(&a), graph6::encode(&b));
        assert!(is_class_member(&a).is_member());
        let k1: Graph = random_class_member(&GenConfig::new(1, 0.0, 7)).unwrap();
        assert_eq!(k1.n(), 1);
        let k5: Graph = random_class_member(&GenConfig::new(5, 1.0, 3)).unwrap();
        assert!(k5.edge_count() < 10);
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(random_class_member::<u64>(&GenConfig::new(65, 0.5, 0)).is_err());
        assert!(random_class_member::<u64>(&GenConfig::new(5, 1.5, 0)).is_err());
        assert!(random_class_member::<u128>(&GenConfig::new(100, 0.1, 0)).is_ok());
    }

    #[test]
    fn planting_keeps_the_pattern() {
        let p = pattern("k3up2").unwrap();
        for seed in 0..20 {
            let g: Graph = random_class_member_with(&GenConfig::new(10, 0.5, seed), p).unwrap();
            assert!(contains_induced(&g, p).is_some());
        }
    }

    #[test]
    fn mutation() {
        let k1 = Graph::<u64>::empty(1).unwrap();
        assert_eq!(mutate(&k1, 5).unwrap(), k1);
        let c5 = Graph::<u64>::cycle(5).unwrap();
        assert_eq!(mutate(&c5, 9).unwrap(), mutate(&c5, 9).unwrap());
        let k4 = Graph::<u64>::complete(4).unwrap();
        assert!(is_class_member(&mutate(&k4, 1).unwrap()).is_member());
    }

    #[test]
    fn named_graphs() {
        let g = named("codomino").unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 8));
        assert_eq!(named("c5").unwrap(), Graph::cycle(5).unwrap());
        let g = named("x2").unwrap();
        assert_eq!((g.n(), g.edge_count()), (7, 11));
        assert_eq!(named("yfam+edge").unwrap().edge_count(), named("yfam").unwrap().edge_count() + 1);
        assert!(named("c5+edge").is_err());
        assert!(named("nope").is_err());
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(1, 0), derive_seed(1, 1));
        assert_eq!(derive_seed(1, 5), derive_seed(1, 5));
    }
}

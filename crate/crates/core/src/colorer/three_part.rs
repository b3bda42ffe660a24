//! 3-coloring of a graph split into two near-matchings and a stable set.

use crate::anomaly::Violation;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};

use super::check::Checker;

/// Three stable sets covering `V1 ∪ V2 ∪ V3`, built as in the claim's proof
/// after checking its hypotheses on `G[V1 ∪ V2 ∪ V3]`.
///
/// The `V3` neighborhood condition is only recorded unless the checker is
/// strict, since the construction does not use it.
///
/// Empty parts are allowed. When `V1` is empty the roles of `V1` and `V2`
/// are exchanged; if that does not help, the remaining two parts form a
/// graph of maximum degree one and are 2-colored directly.
pub(crate) fn three_part_classes<W: Word>(
    ck: &mut Checker<'_, W>,
    v1: VertexSet<W>,
    v2: VertexSet<W>,
    v3: VertexSet<W>,
) -> Option<[VertexSet<W>; 3]> {
    let g = ck.g;
    let h = v1 | v2 | v3;
    for part in [v1, v2] {
        ck.free_of("threepart.part_k3_free", part, "k3")?;
        ck.free_of("threepart.part_p3_free", part, "p3")?;
    }
    ck.stable("threepart.v3_stable", v3)?;
    ck.free_of("threepart.v1_v2_k3_free", v1 | v2, "k3")?;
    for part in [v1, v2] {
        ck.free_of("threepart.part_with_v3_k3_free", part | v3, "k3")?;
        ck.free_of("threepart.part_with_v3_p3_free", part | v3, "p3")?;
    }
    for part in [v1, v2] {
        for v in part.iter() {
            let m = h - g.row(v) - VertexSet::singleton(v);
            ck.stable("threepart.non_neighbors_outside_part_edge_free", m - part)?;
        }
    }
    for v in v3.iter() {
        for (mine, other) in [(v1, v2), (v2, v1)] {
            let (here, there) = (g.row(v) & mine, g.row(v) & other);
            if here.is_empty() || there.is_empty() {
                continue;
            }
            let expected: VertexSet<W> = mine.iter().filter(|&x| !there.is_subset(g.row(x))).collect();
            if here != expected {
                ck.note(
                    "threepart.v3_neighborhood",
                    Violation::Neighborhood { vertex: v, set: mine.to_vec(), found: here.to_vec() },
                )?;
            }
        }
    }

    let (v1, v2) = if v1.is_empty() { (v2, v1) } else { (v1, v2) };
    if v1.is_empty() {
        return Some([v3, VertexSet::empty(), VertexSet::empty()]);
    }
    ck.edges_at_most("threepart.v1_at_most_one_edge", v1, 1)?;
    let classes = match g.edge_in(v1) {
        None => {
            let v = v1.first().expect("nonempty");
            let n = g.row(v) & h;
            let m = h - n - VertexSet::singleton(v);
            [(n & v3) | (v1 & m), n & v2, (m - v1).with(v)]
        }
        Some((v, w)) => {
            let n = g.row(v) & h;
            let outside = h - v2 - VertexSet::singleton(w);
            if !(n & outside).is_empty() {
                return ck.fail(
                    "threepart.edge_end_neighbors_in_v2",
                    Violation::Neighborhood { vertex: v, set: outside.to_vec(), found: (n & outside).to_vec() },
                );
            }
            let m = h - n - VertexSet::singleton(v);
            [n, (m & v1).with(v), m - v1]
        }
    };
    for (i, cls) in classes.iter().enumerate() {
        ck.stable(["threepart.class1_stable", "threepart.class2_stable", "threepart.class3_stable"][i], *cls)?;
    }
    Some(classes)
}

/// Colors `g`, whose vertex set is partitioned into `v1`, `v2`, `v3`, with
/// at most three colors.
pub fn three_part_color<W: Word>(
    g: &Graph<W>,
    v1: VertexSet<W>,
    v2: VertexSet<W>,
    v3: VertexSet<W>,
) -> Result<Coloring> {
    for s in [v1, v2, v3] {
        if let Some(v) = s.iter().find(|&v| v >= g.n()) {
            return Err(Error::InvalidSet { vertex: v, n: g.n() });
        }
    }
    if !v1.is_disjoint(v2) || !v1.is_disjoint(v3) || !v2.is_disjoint(v3) {
        return Err(Error::OverlappingSets);
    }
    if (v1 | v2 | v3) != g.vertices() {
        return Err(Error::InvalidConfiguration("the three parts do not cover the graph".into()));
    }
    let mut ck = Checker::new(g);
    ck.strict = true;
    match three_part_classes(&mut ck, v1, v2, v3) {
        Some(classes) => {
            let nonempty: Vec<_> = classes.into_iter().filter(|c| !c.is_empty()).collect();
            Coloring::from_classes(g.n(), &nonempty)
        }
        None => {
            let claim = ck.anomalies.pop().map(|a| a.claim_id).unwrap_or_default();
            Err(Error::HypothesisViolation(claim))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::validate;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn three_isolated_vertices() {
        let g = Graph::<u64>::empty(3).unwrap();
        let c = three_part_color(&g, set(&[0]), set(&[1]), set(&[2])).unwrap();
        assert!(c.k() <= 3);
        assert!(validate(&g, &c).unwrap());
    }

    #[test]
    fn one_edge_in_v1() {
        // V1 = {0, 1} with edge 01; V2 = {2, 3} stable, both adjacent to 0; V3 = {4} isolated.
        let g = Graph::<u64>::from_edges(5, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = three_part_color(&g, set(&[0, 1]), set(&[2, 3]), set(&[4])).unwrap();
        assert!(c.k() <= 3);
        assert!(validate(&g, &c).unwrap());
    }

    #[test]
    fn triangle_in_v1_is_rejected() {
        let g = Graph::<u64>::from_edges(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            three_part_color(&g, set(&[0, 1, 2]), set(&[]), set(&[3])),
            Err(Error::HypothesisViolation("threepart.part_k3_free".into()))
        );
    }

    #[test]
    fn rejects_bad_partitions() {
        let g = Graph::<u64>::empty(3).unwrap();
        assert_eq!(three_part_color(&g, set(&[0, 1]), set(&[1]), set(&[2])), Err(Error::OverlappingSets));
        assert!(matches!(
            three_part_color(&g, set(&[0]), set(&[1]), set(&[])),
            Err(Error::InvalidConfiguration(_))
        ));
    }
}

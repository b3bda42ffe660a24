//! Graphs containing a co-twin-C5 (labels `v1..v6`, `v6` seeing `v3 v4 v5`).

use crate::decompose::around_triangle;
use crate::graph::{VertexSet, Word};
use crate::patterns::{contains_induced, named_pattern, Embedding};

use super::check::{Assembly, Checker};
use super::three_part::three_part_classes;
use super::{add_a2_classes, CaseId, StableSet};

/// A member of the Y family is present: work around its triangle `u v2 v1`.
fn with_y<W: Word>(ck: &mut Checker<'_, W>, y: &Embedding) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let (v1, v2, u) = (y.map[0], y.map[1], y.map[6]);
    let d = around_triangle(g, (u, v2, v1)).expect("u v1 v2 is a triangle of every Y member");
    let core = d.b[0] - d.a0;
    let (b2, b3) = (d.b[1], d.b[2]);
    ck.edges_at_most("cotwinc5.b2_at_most_one_edge", b2, 1)?;
    ck.not_both_edges("cotwinc5.b1_core_or_b3_edge_free", core, b3)?;
    let (flat, other) = if g.edge_in(core).is_none() { (core, b3) } else { (b3, core) };
    let classes = three_part_classes(ck, b2, other, d.a0)?;
    let mut asm = Assembly::new();
    asm.stable("cotwinc5.edge_free_side", flat);
    for cls in classes {
        asm.stable("threepart.class_stable", cls);
    }
    add_a2_classes(&mut asm, &d);
    asm.finish(ck)
}

/// No Y member: split by the edge `v1 v2` and color the rest of the
/// neighborhood by the edges of the diamond `v3 v4 v5 v6`.
fn without_y<W: Word>(ck: &mut Checker<'_, W>, e: &Embedding) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let v: Vec<usize> = e.map.clone();
    let pair = VertexSet::singleton(v[0]).with(v[1]);
    let nbrs = (g.row(v[0]) | g.row(v[1])) - pair;
    let rest = g.vertices() - pair - nbrs;
    let q: VertexSet<W> = v[2..6].iter().copied().collect();
    let outer = nbrs.without(v[2]).without(v[4]);
    let single: VertexSet<W> = outer.iter().filter(|&y| (g.row(y) & q).len() == 1).collect();
    ck.empty("cotwinc5.d1_empty", single, q)?;
    let v46 = VertexSet::singleton(v[3]).with(v[5]);
    ck.neighborhoods_meet("cotwinc5.neighbors_see_v4_or_v6", outer, v46)?;
    // Diamond edges with the diamond vertices each class can also take.
    let edges = [
        ((v[2], v[3]), VertexSet::singleton(v[5])),
        ((v[3], v[4]), VertexSet::empty()),
        ((v[2], v[5]), VertexSet::singleton(v[3])),
        ((v[3], v[5]), VertexSet::singleton(v[2]).with(v[4])),
        ((v[4], v[5]), VertexSet::empty()),
    ];
    let mut classes: Vec<VertexSet<W>> = edges.iter().map(|e| e.1).collect();
    for y in outer.iter() {
        match edges.iter().position(|&((a, b), _)| g.adj(y, a) && g.adj(y, b)) {
            Some(i) => classes[i].insert(y),
            None => {
                return ck.fail(
                    "cotwinc5.d2_complete_to_edge",
                    crate::anomaly::Violation::Neighborhood {
                        vertex: y,
                        set: q.to_vec(),
                        found: (g.row(y) & q).to_vec(),
                    },
                )
            }
        }
    }
    let mut asm = Assembly::new();
    for cls in classes {
        asm.stable("cotwinc5.edge_class_stable", cls);
    }
    asm.bounded("cotwinc5.pair_and_rest_bipartite", pair | rest, 2);
    asm.finish(ck)
}

pub(crate) fn run<W: Word>(ck: &mut Checker<'_, W>, emb: &Embedding) -> Option<Vec<StableSet>> {
    ck.start(CaseId::CoTwinC5Y, emb);
    if let Some(y) = contains_induced(ck.g, named_pattern("yfam")) {
        ck.witnesses.push(y.clone());
        return with_y(ck, &y);
    }
    ck.case = CaseId::CoTwinC5NoY;
    without_y(ck, emb)
}

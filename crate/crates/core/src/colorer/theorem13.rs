//! `G[D2]` is not a clique: color around a nonadjacent pair of `D2`.

use crate::decompose::around_triangle;
use crate::graph::{VertexSet, Word};
use crate::oracle::max_clique_in;

use super::check::{Assembly, Checker};
use super::{CaseId, StableSet};

pub(crate) fn run<W: Word>(ck: &mut Checker<'_, W>, v1: usize, v2: usize) -> Option<Vec<StableSet>> {
    let g = ck.g;
    ck.case = CaseId::Thm13SmallOmega;
    let (p1, p2) = (g.row(v1) - g.row(v2), g.row(v2) - g.row(v1));
    ck.not_both_edges("thm13.one_private_side_edge_free", p1, p2)?;
    // Orient so that N(a) − N(b) is edge-free, preferring an `a` whose
    // neighborhood has an edge when both sides qualify.
    let v1_ok = g.edge_in(p1).is_none();
    let v2_ok = g.edge_in(p2).is_none();
    let (a, b) = if v1_ok && (!v2_ok || g.edge_in(g.row(v1)).is_some()) { (v1, v2) } else { (v2, v1) };
    let (na, nb) = (g.row(a), g.row(b));
    let common = na & nb;
    let mut asm = Assembly::new();
    if g.edge_in(common).is_none() {
        let (x, y) = ck.has_edge("thm13.neighborhood_has_edge", na)?;
        let d = around_triangle(g, (a, x, y)).expect("a x y is a triangle");
        asm.stable("thm13.common_part_edge_free", common)
            .stable("thm13.private_part_edge_free", na - nb)
            .bounded("triangle.part_with_a0_bipartite", d.b[1] | d.a0, 2)
            .bounded("triangle.part_bipartite", d.b[2], 2)
            .stable("triangle.a2_class_stable", d.a2_class(2));
        return asm.finish(ck);
    }
    ck.case = CaseId::Thm13Omega2;
    let pair = VertexSet::singleton(a).with(b);
    let rest = g.vertices() - pair - na - nb;
    match g.edge_in(rest) {
        Some((x1, x2)) => {
            asm.stable("thm13.rest_outside_nx1_stable", (rest - g.row(x1)) | pair)
                .stable("thm13.rest_in_nx1_outside_nx2_stable", (rest & g.row(x1)) - g.row(x2))
                .stable("thm13.rest_common_stable", rest & g.row(x1) & g.row(x2));
        }
        None => {
            asm.stable("thm13.rest_stable", rest | pair);
        }
    }
    asm.stable("thm13.private_part_edge_free", na - nb);

    let tri = max_clique_in(g, g.vertices() - nb).to_vec();
    debug_assert!(tri.len() >= 3, "b lies in D2");
    let t = [tri[0], tri[1], tri[2]];
    let ts: VertexSet<W> = t.iter().copied().collect();
    let one = |i: usize| VertexSet::singleton(t[i]);
    let two = |i: usize| one(i).with(t[(i + 1) % 3]);
    let allowed: Vec<VertexSet<W>> = (0..3).flat_map(|i| [one(i), two(i)]).collect();
    ck.neighborhoods("thm13.neighbor_sees_one_or_two_of_triangle", nb, ts, &allowed)?;
    let part = |s: VertexSet<W>| -> VertexSet<W> { nb.iter().filter(|&x| g.row(x) & ts == s).collect() };
    for i in 0..3 {
        let (e_i, e_next) = (part(one(i)), part(two(i)));
        ck.size_at_most("thm13.e_i_at_most_one", e_i, 1)?;
        ck.stable("thm13.e_ij_edge_free", e_next)?;
        ck.anticomplete("thm13.e_i_anticomplete_to_e_i_next", e_i, e_next)?;
        asm.stable("thm13.e_class_stable", e_i | e_next);
    }
    asm.finish(ck)
}

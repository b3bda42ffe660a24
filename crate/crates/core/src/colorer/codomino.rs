//! Graphs containing a co-domino.
//!
//! Frames use the labels `v1 v2 v3 u1 u2 u3` with triangles `v1 v2 v3` and
//! `u1 u2 u3`; `B2` is then split by which of `u1, u2, u3` each vertex sees.

use crate::graph::{VertexSet, Word};
use crate::patterns::{contains_induced, named_pattern, Embedding};

use super::check::{Assembly, Checker};
use super::three_part::three_part_classes;
use super::{add_a2_classes, CaseId, Frame, StableSet};

/// `C1..C4`: the parts of `B2` seeing `{u1,u2}`, `{u2,u3}`, `{u2}`, `{u1,u3}`.
fn c_sets<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<[VertexSet<W>; 4]> {
    let g = ck.g;
    let [u1, u2, u3] = f.u;
    let pair = |a: usize, b: usize| VertexSet::singleton(a).with(b);
    let types = [pair(u1, u2), pair(u2, u3), VertexSet::singleton(u2), pair(u1, u3)];
    let b2 = f.d.b[1];
    ck.neighborhoods("codomino.b2_neighbor_types", b2, f.uset(), &types)?;
    Some(types.map(|t| b2.iter().filter(|&x| g.row(x) & f.uset() == t).collect()))
}

fn c1c2<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>, c: &[VertexSet<W>; 4]) -> Option<Vec<StableSet>> {
    let (b1, b2, b3, a0) = (f.d.b[0], f.d.b[1], f.d.b[2], f.d.a0);
    let mut asm = Assembly::new();
    asm.stable("codomino.b2_edge_free", b2);
    if !c[0].is_empty() {
        asm.stable("codomino.c1_forces_b3_edge_free", b3);
        asm.bounded("triangle.part_bipartite", b1, 2);
    } else {
        asm.stable("codomino.c2_forces_b1_core_edge_free", b1 - a0);
        asm.bounded("triangle.part_with_a0_bipartite", b3 | a0, 2);
    }
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

/// Tries the `C1 ∪ C2 ≠ ∅` branch in `f`, then in the frame with the two
/// triangles exchanged. `None` inside means neither applies.
fn c1c2_or_swap<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<Option<Vec<StableSet>>> {
    let g = ck.g;
    let c = c_sets(ck, f)?;
    if !(c[0] | c[1]).is_empty() {
        ck.case = CaseId::CodominoC1C2;
        return Some(c1c2(ck, f, &c));
    }
    if !c[2].is_empty() {
        ck.size_at_most("codomino.c3_at_most_one", c[2], 1)?;
    }
    let [v1, v2, v3] = f.v;
    let a2_nv2 = f.d.a2 & g.row(v2);
    let odd = a2_nv2.iter().find(|&w| (g.row(w) & f.uset()).len() != 2);
    let Some(w) = odd else { return Some(None) };
    ck.case = CaseId::CodominoSwap;
    ck.neighborhoods("codomino.swap_single_neighbor_u2", VertexSet::singleton(w), f.uset(), &[VertexSet::singleton(f.u[1])])?;
    let swapped = Frame::new(g, f.u, [v1, v2, v3]);
    let c = c_sets(ck, &swapped)?;
    if (c[0] | c[1]).is_empty() {
        return Some(ck.fail(
            "codomino.swap_vertex_in_c1_c2",
            crate::anomaly::Violation::Neighborhood {
                vertex: w,
                set: f.uset().to_vec(),
                found: (g.row(w) & f.uset()).to_vec(),
            },
        ));
    }
    Some(c1c2(ck, &swapped, &c))
}

/// `B2 | three-part(B1 ∪ B3) | A2 ∪ T`, where `thin` (the part of `B1 − A0`,
/// `B3` claimed to have at most one edge) plays the first role.
fn one_edge_side<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>, thin_is_b3: bool, claim: &str) -> Option<Vec<StableSet>> {
    let (b2, b3, a0) = (f.d.b[1], f.d.b[2], f.d.a0);
    let core = f.b1_core();
    let (thin, other) = if thin_is_b3 { (b3, core) } else { (core, b3) };
    ck.stable("codomino.b2_edge_free", b2)?;
    ck.edges_at_most(claim, thin, 1)?;
    let classes = three_part_classes(ck, thin, other, a0)?;
    let mut asm = Assembly::new();
    asm.stable("codomino.b2_edge_free", b2);
    for cls in classes {
        asm.stable("threepart.class_stable", cls);
    }
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

/// The parts of `A2` used when every vertex of `A2 ∩ N(v2)` sees two of `u1, u2, u3`.
fn d_sets<W: Word>(ck: &Checker<'_, W>, f: &Frame<W>) -> [VertexSet<W>; 5] {
    let g = ck.g;
    let [v1, v2, v3] = f.v;
    let [u1, u2, u3] = f.u;
    let n = |x: usize| g.row(x);
    let a2 = f.d.a2;
    [
        a2 & n(v1) & n(v2) & n(u2) & n(u3),
        a2 & n(v1) & n(v2) & n(u1) & n(u3),
        a2 & n(v2) & n(v3) & n(u1) & n(u2),
        a2 & n(v2) & n(v3) & n(u1) & n(u3),
        a2 & n(v1) & n(v3),
    ]
}

fn codomino3<W: Word>(ck: &mut Checker<'_, W>, emb: &Embedding) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let f = Frame::from_map(g, &emb.map);
    if let Some(done) = c1c2_or_swap(ck, &f)? {
        return Some(done);
    }
    let x = emb.map[7];
    let [v1, v2, v3] = f.v;
    let [u1, u2, u3] = f.u;
    let dd = d_sets(ck, &f);
    let b2_rest = f.d.b[1].without(x);
    let cross = dd[0].iter().find_map(|a| (g.row(a) & dd[2]).first().map(|b| (a, b)));
    let mut asm = Assembly::new();
    match cross {
        Some((a, b)) => {
            ck.case = CaseId::Codomino3Case2A;
            let i = (f.d.b[0] | f.d.b[2]) - f.uset();
            asm.stable("codomino3.i_outside_na_stable", i - g.row(a))
                .stable("codomino3.i_in_na_outside_nb_stable", (i & g.row(a)) - g.row(b))
                .stable("codomino3.i_common_with_u2_stable", (i & g.row(a) & g.row(b)).with(u2))
                .stable("codomino3.d1_u1_x_v3_stable", dd[0].with(u1).with(x).with(v3))
                .stable("codomino3.d2_d4_b2_stable", dd[1] | dd[3] | b2_rest)
                .stable("codomino3.d3_u3_v1_stable", dd[2].with(u3).with(v1))
                .stable("codomino3.d5_v2_stable", dd[4].with(v2));
        }
        None => {
            ck.case = CaseId::Codomino3Case2B;
            asm.stable("codomino3.d1_d3_x_stable", (dd[0] | dd[2]).with(x))
                .stable("codomino3.d2_d4_b2_stable", dd[1] | dd[3] | b2_rest)
                .bounded("codomino.b1_v2_v3_bipartite", f.d.b[0].with(v2).with(v3), 2)
                .bounded("codomino.b3_v1_bipartite", f.d.b[2].with(v1), 2)
                .stable("codomino3.d5_stable", dd[4]);
        }
    }
    asm.finish(ck)
}

fn final_case<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<Vec<StableSet>> {
    let g = ck.g;
    ck.case = CaseId::CodominoFinal;
    let [v1, v2, v3] = f.v;
    ck.stable("codomino.final_a2_in_nv2_stable", f.d.a2 & g.row(v2))?;
    let mut asm = Assembly::new();
    asm.bounded("codomino.final_nv2_bipartite", g.row(v2).without(v1).without(v3), 2)
        .bounded("codomino.b1_v2_v3_bipartite", f.d.b[0].with(v2).with(v3), 2)
        .bounded("codomino.b3_v1_bipartite", f.d.b[2].with(v1), 2)
        .stable("codomino.final_nv1_nv3_stable", g.row(v1) & g.row(v3));
    asm.finish(ck)
}

pub(crate) fn run<W: Word>(ck: &mut Checker<'_, W>, emb: &Embedding) -> Option<Vec<StableSet>> {
    let g = ck.g;
    ck.start(CaseId::CodominoC1C2, emb);
    let f = Frame::from_map(g, &emb.map);
    ck.stable("codomino.b2_edge_free", f.d.b[1])?;
    if let Some(done) = c1c2_or_swap(ck, &f)? {
        return Some(done);
    }
    if let Some(e) = contains_induced(g, named_pattern("codomino1")) {
        ck.start(CaseId::Codomino1, &e);
        let f1 = Frame::from_map(g, &e.map);
        return one_edge_side(ck, &f1, true, "codomino1.b3_at_most_one_edge");
    }
    if let Some(e) = contains_induced(g, named_pattern("codomino2")) {
        ck.start(CaseId::Codomino2, &e);
        let f2 = Frame::from_map(g, &e.map);
        return one_edge_side(ck, &f2, false, "codomino2.b1_core_at_most_one_edge");
    }
    if let Some(e) = contains_induced(g, named_pattern("codomino3")) {
        ck.start(CaseId::Codomino3Case2A, &e);
        return codomino3(ck, &e);
    }
    final_case(ck, &f)
}

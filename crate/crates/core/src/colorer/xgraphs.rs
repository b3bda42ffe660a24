//! Co-domino-free graphs containing X1 or X2 (labels `v1 v2 v3 u1 u2 u3 u`).

use crate::graph::{VertexSet, Word};
use crate::patterns::Embedding;

use super::check::{Assembly, Checker};
use super::{add_a2_classes, CaseId, Frame, StableSet, XVariant};

fn x1<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<Vec<StableSet>> {
    let parts = [f.b1_core(), f.d.b[1], f.d.b[2]];
    ck.not_both_edges("x1.b1_core_or_b3_edge_free", parts[0], parts[2])?;
    ck.not_both_edges("x1.b1_core_or_b2_edge_free", parts[0], parts[1])?;
    ck.not_both_edges("x1.b2_or_b3_edge_free", parts[1], parts[2])?;
    // The part holding the edge, if any, absorbs A0.
    let j = (0..3).find(|&i| ck.g.edge_in(parts[i]).is_some()).unwrap_or(0);
    let mut asm = Assembly::new();
    for (i, &p) in parts.iter().enumerate() {
        if i == j {
            asm.bounded("triangle.part_with_a0_bipartite", p | f.d.a0, 2);
        } else {
            asm.stable("x1.part_edge_free", p);
        }
    }
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

fn x2<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>, u: usize) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let [u1, u2, u3] = f.u;
    let us = f.uset();
    let one = VertexSet::singleton;
    let both = one(u1).with(u3);
    let b2_rest = f.d.b[1].without(u);
    let core = f.b1_core();
    let b3 = f.d.b[2];
    ck.neighborhoods("x2.b2_sees_u3_not_u2", b2_rest, us, &[one(u3), both])?;
    ck.neighborhoods("x2.b1_core_sees_u3", core, us, &[one(u3), both])?;
    ck.anticomplete("x2.b3_misses_u2_u3", b3.without(u3), one(u2).with(u3))?;
    let sees = |s: VertexSet<W>, t: VertexSet<W>| -> VertexSet<W> { s.iter().filter(|&x| g.row(x) & us == t).collect() };
    let d1 = sees(b2_rest, both);
    let d2 = sees(b2_rest, one(u3));
    let d3 = sees(core, one(u3));
    let d4 = sees(core, both);
    let d5: VertexSet<W> = b3.iter().filter(|&x| g.adj(x, u1)).collect();
    let d6 = sees(b3, VertexSet::empty());
    let mut asm = Assembly::new();
    asm.stable("x2.d1_d4_stable", d1 | d4)
        .stable("x2.d2_d3_stable", d2 | d3)
        .stable("x2.a0_u_d6_stable", f.d.a0.with(u) | d6)
        .stable("x2.d5_stable", d5);
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

pub(crate) fn run<W: Word>(ck: &mut Checker<'_, W>, emb: &Embedding, variant: XVariant) -> Option<Vec<StableSet>> {
    let f = Frame::from_map(ck.g, &emb.map);
    match variant {
        XVariant::X1 => {
            ck.start(CaseId::X1, emb);
            x1(ck, &f)
        }
        XVariant::X2 => {
            ck.start(CaseId::X2, emb);
            x2(ck, &f, emb.map[6])
        }
    }
}

//! Graphs containing χ37 or co-A (labels `v1 v2 v3 u1 u2 u3`).

use crate::graph::{VertexSet, Word};
use crate::patterns::Embedding;

use super::check::{Assembly, Checker};
use super::three_part::three_part_classes;
use super::{add_a2_classes, CaseId, Chi37Variant, Frame, StableSet};

fn chi37<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<Vec<StableSet>> {
    let (core, b2, b3) = (f.b1_core(), f.d.b[1], f.d.b[2]);
    ck.stable("chi37.b2_edge_free", b2)?;
    ck.not_both_edges("chi37.b1_core_or_b3_edge_free", core, b3)?;
    let (flat, other) = if ck.g.edge_in(core).is_none() { (core, b3) } else { (b3, core) };
    let classes = three_part_classes(ck, flat, other, f.d.a0)?;
    let mut asm = Assembly::new();
    asm.stable("chi37.b2_edge_free", b2);
    for cls in classes {
        asm.stable("threepart.class_stable", cls);
    }
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

/// With `v4 v5 v6 = u1 u2 u3`: `B2` is complete to `{u1, u3}`, and every
/// edge of `B1 − A0` has an end complete to `{u1, u3}`.
fn coa<W: Word>(ck: &mut Checker<'_, W>, f: &Frame<W>) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let (core, b2, b3) = (f.b1_core(), f.d.b[1], f.d.b[2]);
    let ends = VertexSet::singleton(f.u[0]).with(f.u[2]);
    ck.complete("coa.b2_complete_to_u1_u3", b2, ends)?;
    let seeing_both = g.row(f.u[0]) & g.row(f.u[2]);
    let mut asm = Assembly::new();
    asm.stable("coa.complete_part_stable", (core | b2) & seeing_both)
        .stable("coa.rest_of_b1_core_stable", core - seeing_both)
        .bounded("triangle.part_with_a0_bipartite", b3 | f.d.a0, 2);
    add_a2_classes(&mut asm, &f.d);
    asm.finish(ck)
}

pub(crate) fn run<W: Word>(ck: &mut Checker<'_, W>, emb: &Embedding, variant: Chi37Variant) -> Option<Vec<StableSet>> {
    let f = Frame::from_map(ck.g, &emb.map);
    match variant {
        Chi37Variant::Chi37 => {
            ck.start(CaseId::Chi37, emb);
            chi37(ck, &f)
        }
        Chi37Variant::CoA => {
            ck.start(CaseId::CoA, emb);
            coa(ck, &f)
        }
    }
}

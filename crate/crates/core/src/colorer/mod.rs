//! Constructive coloring of (P3 ∪ P2, K4)-free graphs with at most seven
//! colors. Dispatch follows the case analysis of the proof; every structural
//! claim used by a case is checked on the input, and a failed check is
//! recorded as an [`Anomaly`] before falling back to exact search.

mod check;
mod chi37;
mod codomino;
mod cotwin;
mod theorem13;
mod three_part;
mod xgraphs;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::anomaly::{Anomaly, Violation};
use crate::coloring::Coloring;
use crate::decompose::{around_triangle, d1d2, five_set_split, in_d1, induced_occurrence, Neighborhood, TriangleDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};
use crate::oracle::{exact_chromatic, k_colorable, max_clique_in};
use crate::patterns::{contains_induced, is_class_member, named_pattern, Embedding};

use check::{Assembly, Checker};

pub use three_part::three_part_color;

/// Largest number of colors any case may spend.
pub const COLOR_BUDGET: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseId {
    #[serde(rename = "OMEGA_LE2")]
    OmegaLe2,
    #[serde(rename = "K3P2_FALLBACK")]
    K3P2Fallback,
    #[serde(rename = "THM11")]
    Thm11,
    #[serde(rename = "CODOMINO_C1C2")]
    CodominoC1C2,
    #[serde(rename = "CODOMINO_SWAP")]
    CodominoSwap,
    #[serde(rename = "CODOMINO1")]
    Codomino1,
    #[serde(rename = "CODOMINO2")]
    Codomino2,
    #[serde(rename = "CODOMINO3_CASE2A")]
    Codomino3Case2A,
    #[serde(rename = "CODOMINO3_CASE2B")]
    Codomino3Case2B,
    #[serde(rename = "CODOMINO_FINAL")]
    CodominoFinal,
    #[serde(rename = "X1")]
    X1,
    #[serde(rename = "X2")]
    X2,
    #[serde(rename = "COTWINC5_Y")]
    CoTwinC5Y,
    #[serde(rename = "COTWINC5_NOY")]
    CoTwinC5NoY,
    #[serde(rename = "CHI37")]
    Chi37,
    #[serde(rename = "COA")]
    CoA,
    #[serde(rename = "THM13_SMALL_OMEGA")]
    Thm13SmallOmega,
    #[serde(rename = "THM13_OMEGA2")]
    Thm13Omega2,
    #[serde(rename = "RESIDUAL_EXACT")]
    ResidualExact,
}

impl CaseId {
    pub const ALL: [CaseId; 19] = [
        CaseId::OmegaLe2,
        CaseId::K3P2Fallback,
        CaseId::Thm11,
        CaseId::CodominoC1C2,
        CaseId::CodominoSwap,
        CaseId::Codomino1,
        CaseId::Codomino2,
        CaseId::Codomino3Case2A,
        CaseId::Codomino3Case2B,
        CaseId::CodominoFinal,
        CaseId::X1,
        CaseId::X2,
        CaseId::CoTwinC5Y,
        CaseId::CoTwinC5NoY,
        CaseId::Chi37,
        CaseId::CoA,
        CaseId::Thm13SmallOmega,
        CaseId::Thm13Omega2,
        CaseId::ResidualExact,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::OmegaLe2 => "OMEGA_LE2",
            CaseId::K3P2Fallback => "K3P2_FALLBACK",
            CaseId::Thm11 => "THM11",
            CaseId::CodominoC1C2 => "CODOMINO_C1C2",
            CaseId::CodominoSwap => "CODOMINO_SWAP",
            CaseId::Codomino1 => "CODOMINO1",
            CaseId::Codomino2 => "CODOMINO2",
            CaseId::Codomino3Case2A => "CODOMINO3_CASE2A",
            CaseId::Codomino3Case2B => "CODOMINO3_CASE2B",
            CaseId::CodominoFinal => "CODOMINO_FINAL",
            CaseId::X1 => "X1",
            CaseId::X2 => "X2",
            CaseId::CoTwinC5Y => "COTWINC5_Y",
            CaseId::CoTwinC5NoY => "COTWINC5_NOY",
            CaseId::Chi37 => "CHI37",
            CaseId::CoA => "COA",
            CaseId::Thm13SmallOmega => "THM13_SMALL_OMEGA",
            CaseId::Thm13Omega2 => "THM13_OMEGA2",
            CaseId::ResidualExact => "RESIDUAL_EXACT",
        }
    }

    /// False only for the residual exact search.
    pub fn is_named_case(self) -> bool {
        self != CaseId::ResidualExact
    }

    /// True for the cases that read the coloring off the case analysis
    /// rather than from a bounded exact search.
    pub fn is_constructive(self) -> bool {
        !matches!(self, CaseId::OmegaLe2 | CaseId::K3P2Fallback | CaseId::ResidualExact)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableSet {
    pub vertices: Vec<usize>,
    /// Identifier of the claim that makes this set stable.
    pub claim: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CaseTrace {
    pub case_id: CaseId,
    /// Color classes in color order: `stable_sets[i]` gets color `i + 1`.
    pub stable_sets: Vec<StableSet>,
    pub witnesses: Vec<Embedding>,
    pub anomalies: Vec<Anomaly>,
    /// The case's construction failed a check and exact search was used.
    pub fallback: bool,
}

const EXACT_CLAIM: &str = "exact.search";

/// Colors a class member with at most seven colors.
pub fn color<W: Word>(g: &Graph<W>) -> Result<(Coloring, CaseTrace)> {
    is_class_member(g).into_result()?;
    Ok(dispatch(g))
}

fn dispatch<W: Word>(g: &Graph<W>) -> (Coloring, CaseTrace) {
    let mut ck = Checker::new(g);
    if max_clique_in(g, g.vertices()).len() <= 2 {
        return exact(ck, CaseId::OmegaLe2, 3, "omega2.three_colorable");
    }
    if let Some(e) = contains_induced(g, named_pattern("k3up2")) {
        ck.witnesses.push(e);
        return exact(ck, CaseId::K3P2Fallback, 6, "k3up2.six_colorable");
    }
    let part = d1d2(g);
    if let Some(e) = induced_occurrence(g, part.d1, "p2up1") {
        ck.start(CaseId::Thm11, &e);
        let r = theorem11(&mut ck, e.map[0], e.map[1], e.map[2]);
        return conclude(ck, r);
    }
    if let Some(e) = contains_induced(g, named_pattern("codomino")) {
        let r = codomino::run(&mut ck, &e);
        return conclude(ck, r);
    }
    for (name, variant) in [("x1", XVariant::X1), ("x2", XVariant::X2)] {
        if let Some(e) = contains_induced(g, named_pattern(name)) {
            let r = xgraphs::run(&mut ck, &e, variant);
            return conclude(ck, r);
        }
    }
    if let Some(e) = contains_induced(g, named_pattern("cotwinc5")) {
        let r = cotwin::run(&mut ck, &e);
        return conclude(ck, r);
    }
    for (name, variant) in [("chi37", Chi37Variant::Chi37), ("coa", Chi37Variant::CoA)] {
        if let Some(e) = contains_induced(g, named_pattern(name)) {
            let r = chi37::run(&mut ck, &e, variant);
            return conclude(ck, r);
        }
    }
    if let Some((v1, v2)) = g.non_edge_in(part.d2) {
        let r = theorem13::run(&mut ck, v1, v2);
        return conclude(ck, r);
    }
    exact(ck, CaseId::ResidualExact, COLOR_BUDGET, "theorem.seven_colorable")
}

/// Bounded exact search; if `cap` colors do not suffice the failure is
/// recorded against `claim` and the search continues without a cap.
fn exact<W: Word>(mut ck: Checker<'_, W>, case: CaseId, cap: usize, claim: &str) -> (Coloring, CaseTrace) {
    ck.case = case;
    let g = ck.g;
    let coloring = match k_colorable(g, cap) {
        Some(c) => c,
        None => {
            ck.fail::<()>(claim, Violation::NotColorable { set: g.vertices().to_vec(), colors: cap });
            match k_colorable(g, COLOR_BUDGET.max(cap)) {
                Some(c) => c,
                None => {
                    ck.fail::<()>(
                        "theorem.seven_colorable",
                        Violation::NotColorable { set: g.vertices().to_vec(), colors: COLOR_BUDGET },
                    );
                    exact_chromatic(g).coloring().expect("exact search returns a coloring").clone()
                }
            }
        }
    };
    let stable_sets = coloring
        .classes::<W>()
        .into_iter()
        .map(|c| StableSet { vertices: c.to_vec(), claim: EXACT_CLAIM.into() })
        .collect();
    let trace = CaseTrace { case_id: ck.case, stable_sets, witnesses: ck.witnesses, anomalies: ck.anomalies, fallback: false };
    (coloring, trace)
}

fn conclude<W: Word>(ck: Checker<'_, W>, sets: Option<Vec<StableSet>>) -> (Coloring, CaseTrace) {
    let g = ck.g;
    match sets {
        Some(stable_sets) => {
            let stable_sets: Vec<StableSet> = stable_sets.into_iter().filter(|s| !s.vertices.is_empty()).collect();
            let classes: Vec<VertexSet<W>> = stable_sets.iter().map(|s| s.vertices.iter().copied().collect()).collect();
            let coloring = Coloring::from_classes(g.n(), &classes).expect("assembly yields a partition");
            let trace = CaseTrace { case_id: ck.case, stable_sets, witnesses: ck.witnesses, anomalies: ck.anomalies, fallback: false };
            (coloring, trace)
        }
        None => {
            let case = ck.case;
            let (coloring, mut trace) = exact(ck, case, COLOR_BUDGET, "theorem.seven_colorable");
            trace.fallback = true;
            (coloring, trace)
        }
    }
}

/// A co-domino-like frame: the triangle `v`, the second triple `u`, and the
/// partition around `v`.
pub(crate) struct Frame<W: Word> {
    pub v: [usize; 3],
    pub u: [usize; 3],
    pub d: TriangleDecomposition<W>,
}

impl<W: Word> Frame<W> {
    pub fn new(g: &Graph<W>, v: [usize; 3], u: [usize; 3]) -> Self {
        let d = around_triangle(g, (v[0], v[1], v[2])).expect("frame triangle comes from a valid embedding");
        Frame { v, u, d }
    }

    /// Frame from the first six labels `v1 v2 v3 u1 u2 u3` of an embedding.
    pub fn from_map(g: &Graph<W>, map: &[usize]) -> Self {
        Self::new(g, [map[0], map[1], map[2]], [map[3], map[4], map[5]])
    }

    pub fn uset(&self) -> VertexSet<W> {
        self.u.iter().copied().collect()
    }

    pub fn b1_core(&self) -> VertexSet<W> {
        self.d.b[0] - self.d.a0
    }
}

/// The three stable classes covering `A2` and the triangle.
pub(crate) fn add_a2_classes<W: Word>(asm: &mut Assembly<W>, d: &TriangleDecomposition<W>) {
    for i in 0..3 {
        asm.stable("triangle.a2_class_stable", d.a2_class(i));
    }
}

fn theorem11<W: Word>(ck: &mut Checker<'_, W>, v1: usize, v2: usize, v3: usize) -> Option<Vec<StableSet>> {
    let g = ck.g;
    let sets = five_set_split(g, v1, v2, v3).ok()?;
    let pair = VertexSet::singleton(v1).with(v2);
    let rest = g.vertices() - pair - g.row(v1) - g.row(v2);
    let mut asm = Assembly::new();
    asm.bounded("thm11.pair_and_rest_bipartite", pair | rest, 2);
    for s in &sets[..4] {
        asm.stable("thm11.private_part_edge_free", *s);
    }
    asm.stable("thm11.common_part_edge_free", sets[4]);
    asm.finish(ck)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XVariant {
    X1,
    X2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chi37Variant {
    Chi37,
    CoA,
}

fn checked_embedding<W: Word>(g: &Graph<W>, emb: &Embedding, name: &str) -> Result<()> {
    if emb.pattern != name || !emb.is_valid_in(g, named_pattern(name)) {
        return Err(Error::InvalidConfiguration(format!("not an induced {name} occurrence")));
    }
    Ok(())
}

fn run_case<W: Word>(
    g: &Graph<W>,
    case: impl FnOnce(&mut Checker<'_, W>) -> Option<Vec<StableSet>>,
) -> Result<(Coloring, CaseTrace)> {
    is_class_member(g).into_result()?;
    let mut ck = Checker::new(g);
    let r = case(&mut ck);
    Ok(conclude(ck, r))
}

/// Colors via the five-set split around `v1 v2` and the isolated `v3`.
pub fn color_theorem11<W: Word>(g: &Graph<W>, v1: usize, v2: usize, v3: usize) -> Result<(Coloring, CaseTrace)> {
    five_set_split(g, v1, v2, v3)?;
    run_case(g, |ck| {
        ck.case = CaseId::Thm11;
        theorem11(ck, v1, v2, v3)
    })
}

pub fn color_codomino<W: Word>(g: &Graph<W>, emb: &Embedding) -> Result<(Coloring, CaseTrace)> {
    checked_embedding(g, emb, "codomino")?;
    run_case(g, |ck| codomino::run(ck, emb))
}

pub fn color_x<W: Word>(g: &Graph<W>, emb: &Embedding, variant: XVariant) -> Result<(Coloring, CaseTrace)> {
    checked_embedding(g, emb, if variant == XVariant::X1 { "x1" } else { "x2" })?;
    run_case(g, |ck| xgraphs::run(ck, emb, variant))
}

pub fn color_cotwinc5<W: Word>(g: &Graph<W>, emb: &Embedding) -> Result<(Coloring, CaseTrace)> {
    checked_embedding(g, emb, "cotwinc5")?;
    run_case(g, |ck| cotwin::run(ck, emb))
}

pub fn color_chi37_coa<W: Word>(g: &Graph<W>, emb: &Embedding, variant: Chi37Variant) -> Result<(Coloring, CaseTrace)> {
    checked_embedding(g, emb, if variant == Chi37Variant::Chi37 { "chi37" } else { "coa" })?;
    run_case(g, |ck| chi37::run(ck, emb, variant))
}

/// Colors around the nonadjacent pair `v1, v2` of `D2`.
pub fn color_theorem13<W: Word>(g: &Graph<W>, v1: usize, v2: usize) -> Result<(Coloring, CaseTrace)> {
    for v in [v1, v2] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        if in_d1(g, v, Neighborhood::Open) {
            return Err(Error::InvalidConfiguration(format!("vertex {v} is not in D2")));
        }
    }
    if v1 == v2 || g.adj(v1, v2) {
        return Err(Error::InvalidConfiguration(format!("{v1} and {v2} are not a nonadjacent pair")));
    }
    run_case(g, |ck| theorem13::run(ck, v1, v2))
}

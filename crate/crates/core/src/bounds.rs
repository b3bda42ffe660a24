//! Clique covers and the order and chromatic bounds for (4K1, co-(P3+P2))-free
//! graphs.

use serde::{Deserialize, Serialize};

use crate::anomaly::{Anomaly, Violation};
use crate::colorer::color;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};
use crate::oracle::{clique_number, exact_chromatic};
use crate::patterns::is_bounds_class_member;

/// Most cliques a single join factor may need.
pub const PARTS_PER_FACTOR: usize = 7;

/// A partition of the vertex set into cliques. Join factors (components of
/// the complement) are covered separately; since distinct factors are
/// complete to each other, part `i` is the union of the `i`-th clique of
/// every factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CliqueCover {
    pub parts: Vec<Vec<usize>>,
    /// Vertex sets of the join factors.
    pub factors: Vec<Vec<usize>>,
    /// Number of cliques used inside each factor.
    pub factor_parts: Vec<usize>,
}

impl CliqueCover {
    /// Parts are cliques of `g` partitioning its vertex set, and each factor
    /// meets exactly as many parts as it claims.
    pub fn is_valid_for<W: Word>(&self, g: &Graph<W>) -> bool {
        let to_set = |vs: &[usize]| -> Option<VertexSet<W>> {
            let s: VertexSet<W> = vs.iter().copied().filter(|&v| v < g.n()).collect();
            (s.len() == vs.len()).then_some(s)
        };
        let (Some(parts), Some(factors)) = (
            self.parts.iter().map(|p| to_set(p)).collect::<Option<Vec<_>>>(),
            self.factors.iter().map(|f| to_set(f)).collect::<Option<Vec<_>>>(),
        ) else {
            return false;
        };
        let partitions = |sets: &[VertexSet<W>]| {
            let mut seen = VertexSet::<W>::empty();
            for &s in sets {
                if !s.is_disjoint(seen) {
                    return false;
                }
                seen = seen | s;
            }
            seen == g.vertices()
        };
        partitions(&parts)
            && partitions(&factors)
            && parts.iter().all(|&p| g.is_clique(p))
            && self.factor_parts.len() == factors.len()
            && factors
                .iter()
                .zip(&self.factor_parts)
                .all(|(&f, &k)| parts.iter().filter(|&&p| !(p & f).is_empty()).count() == k)
    }
}

/// Covers each join factor by coloring its complement, which is
/// (K4, P3+P2)-free, and merges the factor covers.
pub fn clique_cover<W: Word>(g: &Graph<W>) -> Result<CliqueCover> {
    is_bounds_class_member(g).into_result()?;
    let co = g.complement();
    let mut cover = CliqueCover { parts: Vec::new(), factors: Vec::new(), factor_parts: Vec::new() };
    for comp in co.components() {
        let verts = comp.to_vec();
        let (coloring, _) = color(&co.induced(comp)?)?;
        let classes = coloring.classes::<W>();
        if cover.parts.len() < classes.len() {
            cover.parts.resize(classes.len(), Vec::new());
        }
        for (i, class) in classes.iter().enumerate() {
            cover.parts[i].extend(class.iter().map(|v| verts[v]));
        }
        cover.factor_parts.push(classes.len());
        cover.factors.push(verts);
    }
    for part in &mut cover.parts {
        part.sort_unstable();
    }
    if !cover.is_valid_for(g) {
        return Err(Error::InvalidColoring("clique cover failed validation".into()));
    }
    Ok(cover)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum BoundKind {
    /// `n ≤ 7ω`.
    Order,
    /// `χ ≤ 4ω`.
    Chromatic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BoundReport {
    pub bound: BoundKind,
    /// `n` or `χ`.
    pub value: usize,
    pub omega: usize,
    pub limit: usize,
    pub holds: bool,
    /// `limit − value`; negative when the bound fails.
    pub margin: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub anomaly: Option<Anomaly>,
}

fn report<W: Word>(g: &Graph<W>, bound: BoundKind, value: usize, omega: usize, limit: usize) -> BoundReport {
    let holds = value <= limit;
    let anomaly = (!holds).then(|| {
        let set = g.vertices().to_vec();
        let (claim, violation) = match bound {
            BoundKind::Order => ("bounds.order_at_most_7_omega", Violation::TooLarge { set, limit }),
            BoundKind::Chromatic => ("bounds.chi_at_most_4_omega", Violation::NotColorable { set, colors: limit }),
        };
        Anomaly::new(g, claim, violation)
    });
    BoundReport { bound, value, omega, limit, holds, margin: limit as i64 - value as i64, anomaly }
}

/// Checks `n ≤ 7ω`.
pub fn verify_order_bound<W: Word>(g: &Graph<W>) -> Result<BoundReport> {
    is_bounds_class_member(g).into_result()?;
    let omega = clique_number(g).value;
    Ok(report(g, BoundKind::Order, g.n(), omega, 7 * omega))
}

/// Checks `χ ≤ 4ω` with the exact oracle.
pub fn verify_chi_bound<W: Word>(g: &Graph<W>) -> Result<BoundReport> {
    is_bounds_class_member(g).into_result()?;
    let omega = clique_number(g).value;
    let chi = exact_chromatic(g).value;
    Ok(report(g, BoundKind::Chromatic, chi, omega, 4 * omega))
}

//! JSONL ledger records and the per-graph check pipeline shared by `verify`
//! and `fuzz`.

use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use anyhow::{Context, Result};
use chibound::bounds::{clique_cover, verify_chi_bound, verify_order_bound, BoundReport, PARTS_PER_FACTOR};
use chibound::colorer::COLOR_BUDGET;
use chibound::graph6::encode;
use chibound::oracle::{clique_number, exact_chromatic};
use chibound::patterns::{is_bounds_class_member, is_class_member};
use chibound::{color, validate, Anomaly, CaseId, Graph, Word};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Run,
    Anomaly,
    BoundCheck,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LedgerRecord {
    pub kind: RecordKind,
    pub graph6: String,
    pub case_id: Option<CaseId>,
    pub colors_used: Option<usize>,
    pub oracle_chi: usize,
    pub oracle_omega: usize,
    pub seed: Option<u64>,
    pub duration_millis: u64,
    pub tool_version: String,
    /// Set when the coloring failed validation or exceeded the budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub anomaly: Option<Anomaly>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundReport>,
    /// Cliques used per join factor by the clique cover.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factor_parts: Vec<usize>,
}

impl LedgerRecord {
    fn new(kind: RecordKind, graph6: &str, chi: usize, omega: usize, seed: Option<u64>, millis: u64) -> Self {
        LedgerRecord {
            kind,
            graph6: graph6.to_string(),
            case_id: None,
            colors_used: None,
            oracle_chi: chi,
            oracle_omega: omega,
            seed,
            duration_millis: millis,
            tool_version: TOOL_VERSION.to_string(),
            failure: None,
            anomaly: None,
            bounds: Vec::new(),
            factor_parts: Vec::new(),
        }
    }
}

/// Records for one graph plus what they mean for the exit status.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub records: Vec<LedgerRecord>,
    pub member: bool,
    pub bounds_member: bool,
    pub invalid: bool,
    pub anomalies: usize,
}

/// Colors a class member and cross-checks it against the oracles. With
/// `bounds`, members of the complement class also get a bound check.
pub fn check_graph<W: Word>(g: &Graph<W>, seed: Option<u64>, bounds: bool) -> Outcome {
    let g6 = encode(g);
    let mut out = Outcome::default();
    if is_class_member(g).is_member() {
        out.member = true;
        let start = Instant::now();
        let colored = color(g);
        let millis = start.elapsed().as_millis() as u64;
        let chi = exact_chromatic(g).value;
        let omega = clique_number(g).value;
        let mut run = LedgerRecord::new(RecordKind::Run, &g6, chi, omega, seed, millis);
        match colored {
            Ok((c, trace)) => {
                run.case_id = Some(trace.case_id);
                run.colors_used = Some(c.k());
                if !validate(g, &c).unwrap_or(false) {
                    run.failure = Some("coloring is not proper".into());
                } else if c.k() > COLOR_BUDGET {
                    run.failure = Some(format!("{} colors exceed the budget of {COLOR_BUDGET}", c.k()));
                } else if c.k() < chi {
                    run.failure = Some(format!("{} colors is below the chromatic number {chi}", c.k()));
                }
                for a in trace.anomalies {
                    let mut rec = LedgerRecord::new(RecordKind::Anomaly, &g6, chi, omega, seed, millis);
                    rec.case_id = Some(trace.case_id);
                    rec.colors_used = Some(c.k());
                    rec.anomaly = Some(a);
                    out.anomalies += 1;
                    out.records.push(rec);
                }
            }
            Err(e) => run.failure = Some(e.to_string()),
        }
        out.invalid |= run.failure.is_some();
        out.records.insert(0, run);
    }
    if bounds && is_bounds_class_member(g).is_member() {
        out.bounds_member = true;
        let rec = bound_check(g, &g6, seed);
        out.invalid |= rec.failure.is_some();
        out.records.push(rec);
    }
    out
}

fn bound_check<W: Word>(g: &Graph<W>, g6: &str, seed: Option<u64>) -> LedgerRecord {
    let start = Instant::now();
    let reports: Vec<BoundReport> = [verify_order_bound(g), verify_chi_bound(g)].into_iter().flatten().collect();
    let cover = clique_cover(g);
    let millis = start.elapsed().as_millis() as u64;
    let chi = reports.get(1).map_or(0, |r| r.value);
    let omega = reports.first().map_or(0, |r| r.omega);
    let mut rec = LedgerRecord::new(RecordKind::BoundCheck, g6, chi, omega, seed, millis);
    match cover {
        Ok(c) if c.factor_parts.iter().all(|&k| k <= PARTS_PER_FACTOR) => rec.factor_parts = c.factor_parts,
        Ok(c) => {
            rec.failure = Some(format!("a join factor needs more than {PARTS_PER_FACTOR} cliques"));
            rec.factor_parts = c.factor_parts;
        }
        Err(e) => rec.failure = Some(format!("clique cover: {e}")),
    }
    if reports.len() < 2 || reports.iter().any(|r| !r.holds) {
        rec.failure.get_or_insert_with(|| "bound violated".into());
    }
    rec.bounds = reports;
    rec
}

/// Append-only JSONL sink; one writer serializes all appends.
pub struct Ledger {
    out: BufWriter<File>,
}

impl Ledger {
    pub fn open(path: &Path) -> Result<Self> {
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening ledger {}", path.display()))?;
        Ok(Ledger { out: BufWriter::new(file) })
    }

    pub fn append(&mut self, records: &[LedgerRecord]) -> Result<()> {
        for r in records {
            serde_json::to_writer(&mut self.out, r)?;
            self.out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn finish(mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

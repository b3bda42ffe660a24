//! Command-line front end: graph6 in, colorings, oracle values, pattern
//! reports and JSONL ledgers out.

pub mod ledger;

use std::collections::HashSet;
use std::fs;
use std::io::{self, BufRead, Read, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use chibound::decompose::{around_triangle, d1d2_with, Neighborhood};
use chibound::generators::{
    derive_seed, enumerate_graphs, enumerate_unlabeled, random_bounds_member, random_class_member, ENUMERATION_LIMIT,
};
use chibound::graph::CANONICAL_KEY_LIMIT;
use chibound::graph6::{decode, encode};
use chibound::oracle::{clique_number, exact_chromatic, max_clique_in};
use chibound::patterns::{catalog, contains_induced, is_bounds_class_member, is_class_member, Certificate};
use chibound::{color, Error, GenConfig, Graph, VertexSet, Word};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

pub use ledger::{check_graph, Ledger, LedgerRecord, Outcome, RecordKind, TOOL_VERSION};

pub const DEFAULT_LEDGER: &str = "chibound-ledger.jsonl";
/// Derived seeds tried per fuzz index before the index is skipped.
pub const GENERATION_RETRIES: u64 = 16;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    /// A coloring failed validation, or a bound check failed.
    pub const INVALID: u8 = 1;
    /// Bad arguments, unreadable input or malformed graph6.
    pub const USAGE: u8 = 2;
    /// Every coloring is valid but some claim checks fired; only with `--strict`.
    pub const ANOMALY: u8 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "chibound", version, about = "Color (P3+P2, K4)-free graphs with at most seven colors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; per-graph output of verify and fuzz is off unless set.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Read graph6 lines from this file instead of stdin.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// JSONL ledger appended to by verify and fuzz.
    #[arg(long, global = true, env = "CHIBOUND_LEDGER", default_value = DEFAULT_LEDGER)]
    pub ledger: PathBuf,
    /// Exit with the anomaly code when claim checks fire.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One text line per result, led by the graph6 string.
    Graph6,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color each input graph and print the case that handled it.
    Color,
    /// Exact chromatic number with a coloring.
    Chi,
    /// Exact clique number with a clique.
    Omega,
    /// Class membership with a forbidden-pattern witness.
    Check,
    /// Every catalog pattern present, with its first embedding.
    Patterns,
    /// The D1/D2 split and the partition around a triangle.
    Decompose {
        /// Triangle as `a,b,c`; defaults to the first triangle found.
        #[arg(long)]
        triangle: Option<String>,
        /// Remove the closed neighborhood when testing D1 membership.
        #[arg(long)]
        closed: bool,
    },
    /// Check every member of all graphs up to `--n` vertices, or of the input corpus.
    Verify {
        #[arg(long)]
        n: Option<usize>,
        /// Also check the order and chromatic bounds on complement-class members.
        #[arg(long)]
        bounds: bool,
        /// Skip isomorphic copies.
        #[arg(long)]
        dedup: bool,
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Generate seeded class members and check each one.
    Fuzz {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Generate complement-class graphs and check the bounds instead.
        #[arg(long)]
        bounds: bool,
        #[arg(long)]
        dedup: bool,
        /// Worker threads; 0 picks one per core. Results do not depend on it.
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
}

/// Counts behind a verify or fuzz run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub graphs: u64,
    pub members: u64,
    pub bounds_members: u64,
    pub invalid: u64,
    pub anomalies: u64,
    pub skipped: u64,
}

impl Summary {
    fn absorb(&mut self, o: &Outcome) {
        self.graphs += 1;
        self.members += u64::from(o.member);
        self.bounds_members += u64::from(o.bounds_member);
        self.invalid += u64::from(o.invalid);
        self.anomalies += o.anomalies as u64;
    }

    pub fn exit_code(&self, strict: bool) -> u8 {
        if self.invalid > 0 {
            exit::INVALID
        } else if strict && self.anomalies > 0 {
            exit::ANOMALY
        } else {
            exit::OK
        }
    }
}

/// Either word size, picked from the graph6 header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGraph {
    Small(Graph<u64>),
    Large(Graph<u128>),
}

pub fn parse_graph(line: &str) -> chibound::Result<AnyGraph> {
    match decode::<u64>(line) {
        Ok(g) => Ok(AnyGraph::Small(g)),
        Err(Error::UnsupportedSize { .. }) => decode::<u128>(line).map(AnyGraph::Large),
        Err(e) => Err(e),
    }
}

macro_rules! on_graph {
    ($g:expr, $f:ident $(, $arg:expr)*) => {
        match $g {
            AnyGraph::Small(g) => $f(g $(, $arg)*),
            AnyGraph::Large(g) => $f(g $(, $arg)*),
        }
    };
}

/// Non-empty graph6 lines, with an optional `>>graph6<<` header removed.
pub fn graph6_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().lock().read_to_string(&mut s).context("reading stdin")?;
            Ok(s)
        }
    }
}

fn parse_all(text: &str) -> Result<Vec<AnyGraph>> {
    graph6_lines(text)
        .into_iter()
        .map(|(no, l)| parse_graph(l).with_context(|| format!("line {no}")))
        .collect()
}

/// Runs a parsed command; `input` stands in for stdin.
pub fn run(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<u8> {
    let text = |input: &mut dyn BufRead| -> Result<String> {
        match &cli.input {
            Some(_) => read_input(&cli.input),
            None => {
                let mut s = String::new();
                input.read_to_string(&mut s).context("reading stdin")?;
                Ok(s)
            }
        }
    };
    let format = cli.format.unwrap_or(Format::Graph6);
    match &cli.command {
        Command::Color => each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_color, format, out)),
        Command::Chi => each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_chi, format, out)),
        Command::Omega => each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_omega, format, out)),
        Command::Check => each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_check, format, out)),
        Command::Patterns => each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_patterns, format, out)),
        Command::Decompose { triangle, closed } => {
            let tri = triangle.as_deref().map(parse_triangle).transpose()?;
            let mode = if *closed { Neighborhood::Closed } else { Neighborhood::Open };
            each_graph(&text(input)?, out, |g, out| on_graph!(g, cmd_decompose, tri, mode, format, out))
        }
        Command::Verify { n, bounds, dedup, workers } => {
            let graphs = match n {
                Some(n) => exhaustive_scope(*n, *dedup)?,
                None => {
                    let gs = parse_all(&text(input)?)?;
                    if *dedup {
                        dedup_graphs(gs)
                    } else {
                        gs
                    }
                }
            };
            let outcomes = in_pool(*workers, || graphs.par_iter().map(|g| on_graph!(g, check_graph, None, *bounds)).collect())?;
            let summary = report(cli, outcomes, 0, out)?;
            Ok(summary.exit_code(cli.strict))
        }
        Command::Fuzz { n, seed, count, p, bounds, dedup, workers } => {
            let cfg = FuzzConfig { n: *n, seed: *seed, count: *count, p: *p, bounds: *bounds, dedup: *dedup };
            let (outcomes, skipped) = in_pool(*workers, || fuzz(&cfg))??;
            let summary = report(cli, outcomes, skipped, out)?;
            Ok(summary.exit_code(cli.strict))
        }
    }
}

fn each_graph(text: &str, out: &mut dyn Write, mut f: impl FnMut(&AnyGraph, &mut dyn Write) -> Result<()>) -> Result<u8> {
    for g in parse_all(text)? {
        f(&g, out)?;
    }
    Ok(exit::OK)
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build()?;
    Ok(pool.install(f))
}

fn parse_triangle(s: &str) -> Result<(usize, usize, usize)> {
    let v: Vec<usize> = s.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<_, _>>()?;
    match v[..] {
        [a, b, c] => Ok((a, b, c)),
        _ => bail!("--triangle takes three comma-separated vertices"),
    }
}

fn colors_text(colors: &[usize]) -> String {
    colors.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_color<W: Word>(g: &Graph<W>, format: Format, out: &mut dyn Write) -> Result<()> {
    let g6 = encode(g);
    match is_class_member(g) {
        Certificate::Member => {
            let (c, trace) = color(g)?;
            match format {
                Format::Graph6 => {
                    write!(out, "{g6} case={} k={} colors={}", trace.case_id, c.k(), colors_text(c.colors()))?;
                    let claims: Vec<&str> = trace.anomalies.iter().map(|a| a.claim_id.as_str()).collect();
                    if !claims.is_empty() {
                        write!(out, " anomalies={}", claims.join(","))?;
                    }
                    writeln!(out)?;
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"graph6": g6, "member": true, "caseId": trace.case_id, "k": c.k(), "colors": c.colors(), "trace": trace})
                )?,
            }
        }
        Certificate::Violation(w) => {
            let exact = exact_chromatic(g);
            let c = exact.coloring().expect("exact search returns a coloring");
            match format {
                Format::Graph6 => writeln!(
                    out,
                    "{g6} outside the class (contains {} at {:?}); exact search k={} colors={}",
                    w.pattern,
                    w.map,
                    c.k(),
                    colors_text(c.colors())
                )?,
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"graph6": g6, "member": false, "witness": w, "exactSearch": true, "k": c.k(), "colors": c.colors()})
                )?,
            }
        }
    }
    Ok(())
}

fn cmd_chi<W: Word>(g: &Graph<W>, format: Format, out: &mut dyn Write) -> Result<()> {
    let r = exact_chromatic(g);
    let colors = r.coloring().map(|c| c.colors().to_vec()).unwrap_or_default();
    match format {
        Format::Graph6 => writeln!(out, "{} chi={} colors={}", encode(g), r.value, colors_text(&colors))?,
        Format::Json => writeln!(out, "{}", json!({"graph6": encode(g), "chi": r.value, "colors": colors}))?,
    }
    Ok(())
}

fn cmd_omega<W: Word>(g: &Graph<W>, format: Format, out: &mut dyn Write) -> Result<()> {
    let r = clique_number(g);
    let clique = r.clique().unwrap_or_default().to_vec();
    match format {
        Format::Graph6 => writeln!(out, "{} omega={} clique={clique:?}", encode(g), r.value)?,
        Format::Json => writeln!(out, "{}", json!({"graph6": encode(g), "omega": r.value, "clique": clique}))?,
    }
    Ok(())
}

fn certificate_text(c: &Certificate) -> String {
    match c {
        Certificate::Member => "member".into(),
        Certificate::Violation(w) => format!("contains {} at {:?}", w.pattern, w.map),
    }
}

fn certificate_json(c: &Certificate) -> serde_json::Value {
    match c {
        Certificate::Member => json!({"member": true}),
        Certificate::Violation(w) => json!({"member": false, "witness": w}),
    }
}

fn cmd_check<W: Word>(g: &Graph<W>, format: Format, out: &mut dyn Write) -> Result<()> {
    let (class, bounds) = (is_class_member(g), is_bounds_class_member(g));
    match format {
        Format::Graph6 => writeln!(
            out,
            "{} class: {}; complement class: {}",
            encode(g),
            certificate_text(&class),
            certificate_text(&bounds)
        )?,
        Format::Json => writeln!(
            out,
            "{}",
            json!({"graph6": encode(g), "class": certificate_json(&class), "complementClass": certificate_json(&bounds)})
        )?,
    }
    Ok(())
}

fn cmd_patterns<W: Word>(g: &Graph<W>, format: Format, out: &mut dyn Write) -> Result<()> {
    let found: Vec<_> = catalog().iter().filter_map(|p| contains_induced(g, p)).collect();
    let g6 = encode(g);
    match format {
        Format::Graph6 if found.is_empty() => writeln!(out, "{g6} none")?,
        Format::Graph6 => {
            for e in &found {
                writeln!(out, "{g6} {} {:?}", e.pattern, e.map)?;
            }
        }
        Format::Json => writeln!(out, "{}", json!({"graph6": g6, "found": found}))?,
    }
    Ok(())
}

fn cmd_decompose<W: Word>(
    g: &Graph<W>,
    triangle: Option<(usize, usize, usize)>,
    mode: Neighborhood,
    format: Format,
    out: &mut dyn Write,
) -> Result<()> {
    let part = d1d2_with(g, mode);
    let mut sets: Vec<(String, Vec<usize>)> = vec![("D1".into(), part.d1.to_vec()), ("D2".into(), part.d2.to_vec())];
    let tri = triangle.or_else(|| {
        let t = max_clique_in(g, g.vertices()).to_vec();
        (t.len() >= 3).then(|| (t[0], t[1], t[2]))
    });
    let mut named: Vec<(&str, VertexSet<W>)> = Vec::new();
    if let Some(t) = tri {
        let d = around_triangle(g, t)?;
        named.extend([("triangle", d.triangle_set()), ("A0", d.a0), ("A1", d.a1), ("A2", d.a2), ("A3", d.a3)]);
        named.extend([("B1", d.b[0]), ("B2", d.b[1]), ("B3", d.b[2])]);
        named.extend([("A2_1", d.a2_splits[0]), ("A2_2", d.a2_splits[1]), ("A2_3", d.a2_splits[2])]);
    }
    sets.extend(named.into_iter().map(|(k, s)| (k.to_string(), s.to_vec())));
    let g6 = encode(g);
    match format {
        Format::Graph6 => {
            for (name, vs) in &sets {
                writeln!(out, "{g6} {name} {vs:?}")?;
            }
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                sets.into_iter().map(|(k, v)| (k, json!(v))).collect();
            writeln!(out, "{}", json!({"graph6": g6, "sets": map}))?;
        }
    }
    Ok(())
}

fn exhaustive_scope(n: usize, dedup: bool) -> Result<Vec<AnyGraph>> {
    if n > ENUMERATION_LIMIT {
        bail!("exhaustive verification is limited to n <= {ENUMERATION_LIMIT}");
    }
    let mut out = Vec::new();
    for k in 0..=n {
        if dedup {
            out.extend(enumerate_unlabeled(k)?.into_iter().map(AnyGraph::Small));
        } else {
            out.extend(enumerate_graphs(k)?.map(AnyGraph::Small));
        }
    }
    Ok(out)
}

/// Isomorphism key up to the canonical-key limit, labeled graph6 beyond it.
fn dedup_key(g: &AnyGraph) -> Vec<u8> {
    let (n, g6, key) = match g {
        AnyGraph::Small(g) => (g.n(), encode(g), g.canonical_key().ok()),
        AnyGraph::Large(g) => (g.n(), encode(g), None),
    };
    match key {
        Some(k) if n <= CANONICAL_KEY_LIMIT => k,
        _ => g6.into_bytes(),
    }
}

fn dedup_graphs(gs: Vec<AnyGraph>) -> Vec<AnyGraph> {
    let mut seen = HashSet::new();
    gs.into_iter().filter(|g| seen.insert(dedup_key(g))).collect()
}

#[derive(Debug, Clone, Copy)]
pub struct FuzzConfig {
    pub n: usize,
    pub seed: u64,
    pub count: u64,
    pub p: f64,
    pub bounds: bool,
    pub dedup: bool,
}

/// Graph `index` of a campaign and the seed that regenerates it.
fn fuzz_one<W: Word>(cfg: &FuzzConfig, index: u64) -> Option<(Graph<W>, u64)> {
    let base = derive_seed(cfg.seed, index);
    (0..GENERATION_RETRIES).find_map(|t| {
        let seed = if t == 0 { base } else { derive_seed(base, t) };
        let gc = GenConfig::new(cfg.n, cfg.p, seed);
        let g = if cfg.bounds { random_bounds_member(&gc) } else { random_class_member(&gc) };
        g.ok().map(|g| (g, seed))
    })
}

/// Outcomes in index order, so the ledger does not depend on the pool size.
pub fn fuzz(cfg: &FuzzConfig) -> Result<(Vec<Outcome>, u64)> {
    if !(0.0..=1.0).contains(&cfg.p) {
        bail!("--p must lie in [0, 1]");
    }
    if cfg.n > u128::BITS as usize {
        bail!("--n is limited to {}", u128::BITS);
    }
    let graphs: Vec<Option<(AnyGraph, u64)>> = (0..cfg.count)
        .into_par_iter()
        .map(|i| {
            if cfg.n <= 64 {
                fuzz_one::<u64>(cfg, i).map(|(g, s)| (AnyGraph::Small(g), s))
            } else {
                fuzz_one::<u128>(cfg, i).map(|(g, s)| (AnyGraph::Large(g), s))
            }
        })
        .collect();
    let skipped = graphs.iter().filter(|g| g.is_none()).count() as u64;
    for (i, g) in graphs.iter().enumerate() {
        if g.is_none() {
            eprintln!("skipping index {i}: generation failed after {GENERATION_RETRIES} seeds");
        }
    }
    let mut graphs: Vec<(AnyGraph, u64)> = graphs.into_iter().flatten().collect();
    if cfg.dedup {
        let mut seen = HashSet::new();
        graphs.retain(|(g, _)| seen.insert(dedup_key(g)));
    }
    let outcomes = graphs.par_iter().map(|(g, s)| on_graph!(g, check_graph, Some(*s), cfg.bounds)).collect();
    Ok((outcomes, skipped))
}

fn report(cli: &Cli, outcomes: Vec<Outcome>, skipped: u64, out: &mut dyn Write) -> Result<Summary> {
    let mut summary = Summary { skipped, ..Summary::default() };
    let mut ledger = Ledger::open(&cli.ledger)?;
    for o in &outcomes {
        summary.absorb(o);
        ledger.append(&o.records)?;
        for r in &o.records {
            match cli.format {
                Some(Format::Json) => writeln!(out, "{}", serde_json::to_string(r)?)?,
                Some(Format::Graph6) if r.kind != RecordKind::Anomaly => {
                    let case = r.case_id.map_or("-".to_string(), |c| c.to_string());
                    let k = r.colors_used.map_or("-".to_string(), |k| k.to_string());
                    let status = r.failure.as_deref().unwrap_or("ok");
                    writeln!(out, "{} {:?} case={case} k={k} chi={} {status}", r.graph6, r.kind, r.oracle_chi)?;
                }
                _ => {}
            }
        }
    }
    ledger.finish()?;
    let line = format!(
        "checked {} graphs: {} members, {} complement-class members, {} invalid, {} anomalies, {} skipped; ledger {}",
        summary.graphs,
        summary.members,
        summary.bounds_members,
        summary.invalid,
        summary.anomalies,
        summary.skipped,
        cli.ledger.display()
    );
    if cli.format == Some(Format::Json) {
        eprintln!("{line}");
    } else {
        writeln!(out, "{line}")?;
    }
    Ok(summary)
}

use std::fs;
use std::io::Cursor;
use std::path::Path;
use std::process::Command;

use chibound::generators::{named, named_variants};
use chibound::graph6::encode;
use chibound::patterns::is_class_member;
use chibound_cli::{exit, run, Cli, LedgerRecord, RecordKind, Summary};
use clap::Parser;
use tempfile::TempDir;

fn run_in(args: &[&str], stdin: &str) -> (u8, String) {
    let cli = Cli::try_parse_from(std::iter::once("chibound").chain(args.iter().copied())).unwrap();
    let mut out = Vec::new();
    let code = run(&cli, &mut Cursor::new(stdin.as_bytes()), &mut out).unwrap();
    (code, String::from_utf8(out).unwrap())
}

fn records(path: &Path) -> Vec<LedgerRecord> {
    fs::read_to_string(path).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn ledger_arg(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_string()
}

#[test]
fn chi_of_a_triangle() {
    let (code, out) = run_in(&["chi"], "Bw\n");
    assert_eq!(code, exit::OK);
    assert_eq!(out, "Bw chi=3 colors=1 2 3\n");
}

#[test]
fn check_reports_the_k4_witness() {
    let (_, out) = run_in(&["check"], "C~\n");
    assert!(out.starts_with("C~ class: contains k4 at [0, 1, 2, 3]"), "{out}");
    let (_, out) = run_in(&["check", "--format", "json"], "C~\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["class"]["member"], false);
    assert_eq!(v["class"]["witness"]["pattern"], "k4");
}

#[test]
fn color_a_five_cycle() {
    let (_, out) = run_in(&["color", "--format", "json"], "Dhc\n");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["k"], 3);
    assert_eq!(v["caseId"], "OMEGA_LE2");
    let colors: Vec<usize> = serde_json::from_value(v["colors"].clone()).unwrap();
    let g = chibound::graph6::decode::<u64>("Dhc").unwrap();
    assert!(g.edges().iter().all(|&(a, b)| colors[a] != colors[b]));
}

#[test]
fn non_members_are_labeled() {
    let (_, out) = run_in(&["color"], "C~\n");
    assert!(out.contains("outside the class") && out.contains("exact search k=4"), "{out}");
}

#[test]
fn omega_patterns_and_decompose() {
    let (_, out) = run_in(&["omega"], "Bw\n");
    assert_eq!(out, "Bw omega=3 clique=[0, 1, 2]\n");
    let (_, out) = run_in(&["patterns"], "Dhc\n");
    assert!(out.lines().any(|l| l.starts_with("Dhc c5 ")));
    assert!(!out.contains(" k3 "));
    let (_, out) = run_in(&["decompose", "--triangle", "0,1,2"], "Bw\n");
    assert!(out.contains("Bw triangle [0, 1, 2]"));
    assert!(out.contains("Bw D1 [0, 1, 2]"));
}

#[test]
fn malformed_input_reports_the_byte_offset() {
    let out = Command::new(env!("CARGO_BIN_EXE_chibound")).args(["chi", "--in", "/dev/null"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "Bw\nD!c\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_chibound")).arg("chi").arg("--in").arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(i32::from(exit::USAGE)));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2") && err.contains("at byte 1"), "{err}");
}

#[test]
fn verify_small_orders() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "v.jsonl");
    let (code, out) = run_in(&["verify", "--n", "3", "--ledger", &ledger], "");
    assert_eq!(code, exit::OK);
    assert!(out.contains("checked 12 graphs") && out.contains("0 invalid"), "{out}");

    let ledger = ledger_arg(&dir, "v5.jsonl");
    let (code, out) = run_in(&["verify", "--n", "5", "--ledger", &ledger], "");
    assert_eq!(code, exit::OK, "{out}");
    let recs = records(Path::new(&ledger));
    assert!(recs.iter().all(|r| r.failure.is_none()));
    let runs = recs.iter().filter(|r| r.kind == RecordKind::Run).count();
    assert!(out.contains(&format!("{runs} members")), "{out}");
}

#[test]
fn verify_dedup_keeps_one_graph_per_class() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "d.jsonl");
    let (_, out) = run_in(&["verify", "--n", "4", "--dedup", "--ledger", &ledger], "");
    // 1 + 1 + 2 + 4 + 11 unlabeled graphs on 0..=4 vertices.
    assert!(out.contains("checked 19 graphs"), "{out}");
}

#[test]
fn verify_named_corpus_with_bounds() {
    let dir = TempDir::new().unwrap();
    let corpus = dir.path().join("named.g6");
    let graphs: Vec<_> = named_variants().iter().map(|n| named(n).unwrap()).collect();
    let lines: Vec<String> = graphs.iter().map(encode).collect();
    // K4, P3 + P2 and the bare Y member are the named non-members.
    let members = graphs.iter().filter(|g| is_class_member(*g).is_member()).count();
    assert_eq!(members, lines.len() - 3);
    fs::write(&corpus, format!(">>graph6<<{}\n", lines.join("\n"))).unwrap();
    let ledger = ledger_arg(&dir, "n.jsonl");
    let (code, out) = run_in(&["verify", "--bounds", "--in", corpus.to_str().unwrap(), "--ledger", &ledger], "");
    assert_eq!(code, exit::OK, "{out}");
    let recs = records(Path::new(&ledger));
    assert_eq!(recs.iter().filter(|r| r.kind == RecordKind::Run).count(), members);
    assert!(recs.iter().all(|r| r.failure.is_none()));
}

#[test]
fn ledger_records_replay() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "f.jsonl");
    run_in(&["fuzz", "--n", "10", "--count", "40", "--seed", "9", "--ledger", &ledger], "");
    for r in records(Path::new(&ledger)).iter().filter(|r| r.kind == RecordKind::Run) {
        let (_, out) = run_in(&["color", "--format", "json"], &r.graph6);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["caseId"], serde_json::to_value(r.case_id).unwrap());
        assert_eq!(v["k"], r.colors_used.unwrap());
        let regenerated: chibound::Graph =
            chibound::generators::random_class_member(&chibound::GenConfig::new(10, 0.5, r.seed.unwrap())).unwrap();
        assert_eq!(encode(&regenerated), r.graph6);
    }
}

#[test]
fn fuzz_with_no_graphs_writes_an_empty_ledger() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "e.jsonl");
    let (code, _) = run_in(&["fuzz", "--count", "0", "--ledger", &ledger], "");
    assert_eq!(code, exit::OK);
    assert_eq!(fs::read_to_string(&ledger).unwrap(), "");
}

#[test]
fn fuzz_ignores_the_worker_count() {
    let dir = TempDir::new().unwrap();
    let mut ledgers = Vec::new();
    for workers in ["1", "8"] {
        let ledger = ledger_arg(&dir, &format!("w{workers}.jsonl"));
        run_in(&["fuzz", "--n", "11", "--count", "200", "--seed", "5", "--workers", workers, "--ledger", &ledger], "");
        // Timings differ between runs; everything else must match.
        let recs: Vec<LedgerRecord> =
            records(Path::new(&ledger)).into_iter().map(|r| LedgerRecord { duration_millis: 0, ..r }).collect();
        ledgers.push(recs);
    }
    assert!(!ledgers[0].is_empty());
    assert_eq!(ledgers[0], ledgers[1]);
}

#[test]
fn thousand_fuzzed_members_at_twelve_vertices() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "t.jsonl");
    let (code, out) = run_in(&["fuzz", "--n", "12", "--count", "1000", "--seed", "1", "--ledger", &ledger], "");
    assert_eq!(code, exit::OK, "{out}");
    assert!(out.contains("checked 1000 graphs: 1000 members") && out.contains("0 invalid"), "{out}");
}

#[test]
fn fuzz_bounds_class() {
    let dir = TempDir::new().unwrap();
    let ledger = ledger_arg(&dir, "b.jsonl");
    let (code, out) = run_in(&["fuzz", "--bounds", "--n", "16", "--p", "0.3", "--count", "100", "--ledger", &ledger], "");
    assert_eq!(code, exit::OK, "{out}");
    let recs = records(Path::new(&ledger));
    let checks: Vec<&LedgerRecord> = recs.iter().filter(|r| r.kind == RecordKind::BoundCheck).collect();
    assert_eq!(checks.len(), 100);
    assert!(checks.iter().all(|r| r.failure.is_none() && r.bounds.len() == 2 && !r.factor_parts.is_empty()));
}

#[test]
fn anomalies_only_fail_strict_runs() {
    let dir = TempDir::new().unwrap();
    // A member whose D2 pair has no edge in either neighborhood.
    let g6 = "I@cgWoU^G\n";
    let ledger = ledger_arg(&dir, "a.jsonl");
    let (code, out) = run_in(&["verify", "--ledger", &ledger], g6);
    assert_eq!(code, exit::OK);
    assert!(out.contains("0 invalid, 1 anomalies"), "{out}");
    let recs = records(Path::new(&ledger));
    let a = recs.iter().find(|r| r.kind == RecordKind::Anomaly).unwrap();
    assert_eq!(a.anomaly.as_ref().unwrap().claim_id, "thm13.neighborhood_has_edge");
    assert!(a.anomaly.as_ref().unwrap().replay().unwrap());
    let (code, _) = run_in(&["verify", "--strict", "--ledger", &ledger], g6);
    assert_eq!(code, exit::ANOMALY);
    assert_eq!(Summary { invalid: 1, anomalies: 3, ..Summary::default() }.exit_code(true), exit::INVALID);
}

#[test]
fn ledger_path_from_the_environment() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("env.jsonl");
    let out = Command::new(env!("CARGO_BIN_EXE_chibound"))
        .args(["fuzz", "--count", "3", "--n", "8"])
        .env("CHIBOUND_LEDGER", &path)
        .current_dir(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(records(&path).iter().filter(|r| r.kind == RecordKind::Run).count(), 3);
    assert!(!dir.path().join(chibound_cli::DEFAULT_LEDGER).exists());
}

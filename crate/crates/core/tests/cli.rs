use std::io::Write;

use clap::Parser;
use serde_json::Value;

use rigidity_core::graphcore::{build_bni, write_graph6, Graph};
use rigidity_core::oracle::corpus::{connected_unlabeled_graphs, random_corpus, unlabeled_graphs};
use rigidity_core::verify::{run, Cli, SpectralReport, EXIT_INPUT, EXIT_OK};

fn invoke(args: &[&str]) -> (u8, String, String) {
    let cli = Cli::try_parse_from(std::iter::once("rigidity").chain(args.iter().copied())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn corpus_file(graphs: &[Graph]) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    for g in graphs {
        writeln!(f, "{}", write_graph6(g)).unwrap();
    }
    f.flush().unwrap();
    f
}

fn records(out: &str) -> Vec<Value> {
    out.lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn analyze_exceptional_graph() {
    let f = corpus_file(&[build_bni(16, 7, 2).unwrap(), Graph::complete(3)]);
    let (code, out, _) = invoke(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["verdict"]["rigid"], false);
    assert_eq!(recs[0]["rigid_bound_applicable"], true);
    assert_eq!(recs[0]["rigid_bound_consistent"], true);
    assert_eq!(recs[1]["graph6"], "Bw");
    assert_eq!(recs[1]["verdict"]["globally_rigid"], true);
}

#[test]
fn report_keys_are_in_schema_order() {
    let f = corpus_file(&[Graph::cycle(5)]);
    let (_, out, _) = invoke(&["analyze", f.path().to_str().unwrap()]);
    let keys: Vec<String> = records(&out)[0]
        .as_object()
        .unwrap()
        .keys()
        .cloned()
        .collect();
    assert_eq!(
        keys,
        [
            "graph6",
            "n",
            "m",
            "min_degree",
            "vertex_connectivity",
            "rho",
            "mu",
            "hong_bound",
            "hong_equality_shape",
            "verdict",
            "rigid_bound_applicable",
            "rigid_bound_consistent",
            "global_bound_applicable",
            "global_bound_consistent",
            "rho_b2_threshold",
            "rho_b3_threshold",
        ]
    );
    let line = out.lines().next().unwrap();
    let parsed: SpectralReport = serde_json::from_str(line).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), line);
}

#[test]
fn analyze_keeps_input_order_across_threads() {
    let graphs = random_corpus(200, 2..=14, 9);
    let f = corpus_file(&graphs);
    let (code, out, _) = invoke(&["--jobs", "4", "analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    let ids: Vec<String> = records(&out)
        .iter()
        .map(|r| r["graph6"].as_str().unwrap().to_string())
        .collect();
    let expected: Vec<String> = graphs.iter().map(write_graph6).collect();
    assert_eq!(ids, expected);
}

#[test]
fn exhaustive_small_corpus_is_consistent() {
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(unlabeled_graphs(n).unwrap());
    }
    let f = corpus_file(&graphs);
    let (code, out, _) = invoke(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), graphs.len());
}

#[test]
fn random_corpus_is_consistent() {
    let mut graphs = random_corpus(1000, 8..=22, 17);
    graphs.extend(connected_unlabeled_graphs(5).unwrap());
    let f = corpus_file(&graphs);
    let (code, out, _) = invoke(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(records(&out)
        .iter()
        .all(|r| r["rigid_bound_consistent"] == true && r["global_bound_consistent"] == true));
}

#[test]
fn parse_errors_name_the_line() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "Bw\n\nB!\nBw").unwrap();
    let (code, out, err) = invoke(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(out.is_empty());
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _, err) = invoke(&["analyze", "/nonexistent/corpus.g6"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.starts_with("error:"));
}

#[test]
fn laman_max_small_orders() {
    let (code, out, _) = invoke(&["laman-max", "--nmin", "3", "--nmax", "6"]);
    assert_eq!(code, EXIT_OK);
    let recs = records(&out);
    assert_eq!(recs.len(), 4);
    assert_eq!(recs[2]["max_rho"], 3.0);
    assert_eq!(recs[3]["laman_count"], 13);
    assert_eq!(recs[3]["brute_count"], 13);
    assert!(recs.iter().all(|r| r["argmax_is_join"] == true));
    let (code, _, _) = invoke(&["laman-max", "--nmin", "2", "--nmax", "4"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn sweep_and_extremal() {
    let (code, out, _) = invoke(&[
        "sweep-quartic",
        "--i",
        "2",
        "--amin",
        "7",
        "--amax",
        "9",
        "--nmax",
        "30",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(records(&out)
        .iter()
        .all(|r| r["decrease_margin"].as_f64().unwrap() > 0.0));

    let (code, out, _) = invoke(&["--seed", "3", "extremal", "--delta", "7", "--nmax", "18"]);
    assert_eq!(code, EXIT_OK);
    let recs = records(&out);
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["verdict"]["rank"], 32);
    assert_eq!(recs[1]["verdict"]["rank"], 33);
    assert_eq!(recs[0]["witness"]["part_sizes"], serde_json::json!([8, 10]));

    let (code, _, _) = invoke(&["extremal", "--delta", "5", "--nmax", "20"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn csv_output_has_one_header() {
    let (code, out, _) = invoke(&[
        "--format", "csv", "extremal", "--delta", "6", "--nmax", "17",
    ]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5);
    let width = lines[0].split(',').count();
    assert!(lines.iter().all(|l| l.split(',').count() == width));
    assert!(lines[0].contains("witness.cut"));
}

#[test]
fn enumerate_writes_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("laman7.g6");
    let (code, out, _) = invoke(&["enumerate", "--n", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 70);
    let (code, out, _) = invoke(&["enumerate", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn seed_flag_and_environment() {
    std::env::set_var("RIGIDITY_SEED", "41");
    let from_env =
        Cli::try_parse_from(["rigidity", "extremal", "--delta", "6", "--nmax", "16"]).unwrap();
    let from_flag = Cli::try_parse_from([
        "rigidity", "--seed", "7", "extremal", "--delta", "6", "--nmax", "16",
    ])
    .unwrap();
    std::env::remove_var("RIGIDITY_SEED");
    assert_eq!(from_env.seed, 41);
    assert_eq!(from_flag.seed, 7);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rigidity");
    let ok = std::process::Command::new(bin)
        .args(["laman-max", "--nmin", "3", "--nmax", "5"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap().lines().count(), 3);
    let bad = std::process::Command::new(bin)
        .args(["analyze", "/nonexistent"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

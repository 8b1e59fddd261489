//! End-to-end tests of the binary: exit codes, line formats, and the
//! frozen counts and values the command surface promises.

use std::path::PathBuf;
use std::process::{Command, Output};

use alpha_index::graph::{graph6_decode, is_isomorphic, path_kite};
use alpha_index::spectral::perron_oracle;

fn run(arguments: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alpha-index"))
        .args(arguments)
        .output()
        .expect("binary launches")
}

fn json_lines(output: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&output.stdout)
        .lines()
        .map(|line| serde_json::from_str(line).expect("stdout lines are JSON"))
        .collect()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("process exits normally")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("alpha-index-cli-{}-{name}", std::process::id()))
}

#[test]
fn rho_computes_known_indices() {
    let complete = run(&["rho", "--family", "complete:5", "--alpha", "0.3"]);
    assert_eq!(exit_code(&complete), 0);
    let lines = json_lines(&complete);
    assert_eq!(lines.len(), 1);
    assert!((lines[0]["rho"].as_f64().unwrap() - 4.0).abs() <= 1e-10);
    assert_eq!(lines[0]["graph6"], "D~{");

    let k4 = run(&["rho", "--graph6", "C~", "--alpha", "0"]);
    assert_eq!(exit_code(&k4), 0);
    assert!((json_lines(&k4)[0]["rho"].as_f64().unwrap() - 3.0).abs() <= 1e-10);

    let bug_line = &json_lines(&run(&["rho", "--family", "bug:6,3,5", "--alpha", "0"]))[0];
    let decoded = graph6_decode(bug_line["graph6"].as_str().unwrap()).unwrap();
    let oracle = perron_oracle(&decoded, 0.0).unwrap().rho;
    assert!((bug_line["rho"].as_f64().unwrap() - oracle).abs() <= 1e-9);
}

#[test]
fn rho_includes_perron_vector_on_request() {
    let output = run(&["rho", "--family", "path:3", "--alpha", "0", "--perron"]);
    let lines = json_lines(&output);
    let vector = lines[0]["perron"].as_array().unwrap();
    assert_eq!(vector.len(), 3);
    assert!((lines[0]["rho"].as_f64().unwrap() - 2.0f64.sqrt()).abs() <= 1e-10);

    let bare = run(&["rho", "--family", "path:3", "--alpha", "0"]);
    assert!(json_lines(&bare)[0].get("perron").is_none());
}

#[test]
fn rho_reads_edgelist_files() {
    let file = temp_path("edges.txt");
    std::fs::write(&file, "0 1\n1 2\n").unwrap();
    let output = run(&["rho", "--edgelist", file.to_str().unwrap(), "--alpha", "0"]);
    std::fs::remove_file(&file).unwrap();
    assert_eq!(exit_code(&output), 0);
    assert!((json_lines(&output)[0]["rho"].as_f64().unwrap() - 2.0f64.sqrt()).abs() <= 1e-10);
}

#[test]
fn usage_errors_exit_with_two() {
    let conflicting = run(&["rho", "--family", "path:3", "--graph6", "Bw", "--alpha", "0"]);
    assert_eq!(exit_code(&conflicting), 2);

    let missing = run(&["rho", "--alpha", "0"]);
    assert_eq!(exit_code(&missing), 2);

    let alpha_one = run(&["rho", "--family", "path:3", "--alpha", "1"]);
    assert_eq!(exit_code(&alpha_one), 2);
    assert!(String::from_utf8_lossy(&alpha_one.stderr).contains("[0, 1)"));

    let bad_family = run(&["rho", "--family", "star:4", "--alpha", "0"]);
    assert_eq!(exit_code(&bad_family), 2);
}

#[test]
fn verify_diameter_reports_hold() {
    let output = run(&["verify", "diameter", "--n", "6", "--k", "3", "--alpha", "0,0.5"]);
    assert_eq!(exit_code(&output), 0);
    let reports = json_lines(&output);
    assert_eq!(reports.len(), 2);
    for report in &reports {
        assert_eq!(report["claim"], "diameter_extremal");
        assert!(report["violations"].as_array().unwrap().is_empty());
        assert!(report["indeterminate"].as_array().unwrap().is_empty());
        assert_eq!(report["parameters"]["witness_classes"], "1");
    }
}

#[test]
fn verify_clique_witness_is_the_path_kite() {
    let output = run(&["verify", "clique", "--n", "6", "--omega", "3", "--alpha", "0"]);
    assert_eq!(exit_code(&output), 0);
    let report = &json_lines(&output)[0];
    assert!(report["violations"].as_array().unwrap().is_empty());
    let witness = graph6_decode(report["extremal_witness"].as_str().unwrap()).unwrap();
    assert!(is_isomorphic(&witness, &path_kite(3, 3).unwrap()).unwrap());
}

#[test]
fn verify_balance_and_lemma_suites_pass() {
    let balance = run(&["verify", "balance", "--k", "6", "--s", "7", "--alpha", "0,0.5"]);
    assert_eq!(exit_code(&balance), 0);
    let report = &json_lines(&balance)[0];
    assert_eq!(report["claim"], "bug_balance_chain");
    assert_eq!(report["instances_checked"], 6);

    let ratio = run(&["verify", "lemmas", "--suite", "ratio", "--alpha", "0,0.5"]);
    assert_eq!(exit_code(&ratio), 0);

    let pendent = run(&["verify", "lemmas", "--suite", "pendent", "--corpus", "default"]);
    assert_eq!(exit_code(&pendent), 0);
    assert!(json_lines(&pendent)[0]["violations"]
        .as_array()
        .unwrap()
        .is_empty());

    let unknown = run(&["verify", "lemmas", "--suite", "pendent", "--corpus", "exotic"]);
    assert_eq!(exit_code(&unknown), 2);
}

#[test]
fn scan_conjecture1_streams_consistent_records() {
    let output = run(&[
        "scan",
        "conjecture1",
        "--base",
        "family:complete:3",
        "--root",
        "0",
        "--budget",
        "6",
        "--alpha",
        "0",
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(output.stderr.is_empty());
    let records = json_lines(&output);
    assert_eq!(records.len(), 4);
    for record in &records {
        assert_eq!(record["conjecture"], "same_root_balance");
        assert_eq!(record["direction"], "consistent");
        assert_eq!(record["proved_zone"], true);
    }
}

#[test]
fn scan_conjecture2_rejects_a_bare_edge_base() {
    let output = run(&[
        "scan",
        "conjecture2",
        "--base",
        "path:2",
        "--roots",
        "0,1",
        "--alpha",
        "0",
    ]);
    assert_eq!(exit_code(&output), 2);
    assert!(String::from_utf8_lossy(&output.stderr).contains("degree at least 2"));
}

#[test]
fn scan_question1_finds_reversals_deterministically() {
    let arguments = ["scan", "question1", "--max-order", "6", "--alpha", "0"];
    let first = run(&arguments);
    let second = run(&arguments);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(first.stderr.is_empty());
    let reversed = json_lines(&first)
        .iter()
        .filter(|record| record["direction"] == "reversed")
        .count();
    assert_eq!(reversed, 3);
}

#[test]
fn enumerate_matches_class_counts() {
    let connected = run(&["enumerate", "--n", "5", "--connected", "--dedup"]);
    assert_eq!(exit_code(&connected), 0);
    assert_eq!(String::from_utf8_lossy(&connected.stdout).lines().count(), 21);

    let trees = run(&["enumerate", "--n", "4", "--trees", "--dedup"]);
    assert_eq!(String::from_utf8_lossy(&trees.stdout).lines().count(), 2);

    let too_large = run(&["enumerate", "--n", "9", "--connected"]);
    assert_eq!(exit_code(&too_large), 2);
}

#[test]
fn output_and_csv_files_capture_the_run() {
    let json_file = temp_path("rho.json");
    let csv_file = temp_path("rho.csv");
    let output = run(&[
        "rho",
        "--family",
        "complete:4",
        "--alpha",
        "0,0.5",
        "--output",
        json_file.to_str().unwrap(),
        "--csv",
        csv_file.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&output), 0);
    assert!(output.stdout.is_empty());

    let json_text = std::fs::read_to_string(&json_file).unwrap();
    assert_eq!(json_text.lines().count(), 2);
    let first: serde_json::Value = serde_json::from_str(json_text.lines().next().unwrap()).unwrap();
    assert!((first["rho"].as_f64().unwrap() - 3.0).abs() <= 1e-10);

    let csv_text = std::fs::read_to_string(&csv_file).unwrap();
    assert_eq!(
        csv_text.lines().next().unwrap(),
        "graph6,order,alpha,rho,route,iterations,residual"
    );
    assert_eq!(csv_text.lines().count(), 3);

    std::fs::remove_file(&json_file).unwrap();
    std::fs::remove_file(&csv_file).unwrap();
}

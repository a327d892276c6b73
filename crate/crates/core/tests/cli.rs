//! End-to-end tests of the `graphlines` binary: exit codes, report shapes,
//! determinism.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use graphlines::catalog::catalog_entry;
use graphlines::edgelist::parse_edgelist;
use graphlines::graph6::to_graph6;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_graphlines"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("stdin writes");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn analyze_a_graph6_literal() {
    let out = run(&["analyze", "Cl"]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["analysis"]["ell"], 1);
    assert_eq!(v["analysis"]["ul"], 6);
    assert_eq!(v["analysis"]["family"], "F:C4");
    assert_eq!(v["analysis"]["main_ok"], "-");
    assert_eq!(v["analysis"]["conj3_ok"], "1");
    assert_eq!(v["structure"]["chordal"], false);
    assert_eq!(v["structure"]["two_connected"], true);
}

#[test]
fn analyze_b7_shows_the_bridge_and_pendant() {
    let b7 = to_graph6(&catalog_entry("B7").unwrap().graph);
    let out = run(&["analyze", &b7]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["analysis"]["br"], 1);
    assert_eq!(v["analysis"]["pendant"], true);
    assert_eq!(v["analysis"]["family"], "B:B7");
    // The inequality numbers show the violation; the theorem verdict is out
    // of hypothesis because B7 sits outside the hereditary class.
    assert_eq!(v["analysis"]["ell"], 4);
    assert_eq!(v["analysis"]["in_C"], false);
    assert_eq!(v["analysis"]["main_ok"], "-");
    assert_eq!(v["analysis"]["conj2_ok"], "1");
}

#[test]
fn analyze_k3_holds_everywhere() {
    let out = run(&["analyze", "Bw"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["analysis"]["ell"], 3);
    assert_eq!(v["analysis"]["main_ok"], "1");
}

#[test]
fn analyze_reads_edgelist_files() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("graphlines-cli-test-{}.txt", std::process::id()));
    std::fs::write(&path, "C4\n4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert!(out.status.success(), "{}", stderr_of(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["analysis"]["family"], "F:C4");
}

#[test]
fn analyze_rejects_bad_input_with_exit_2() {
    let out = run(&["analyze", "!!not-a-graph!!"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("error"));
    // Too small for line statistics.
    let out = run(&["analyze", "@"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["verify", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["search"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_beyond_the_builtin_bound_exits_2() {
    let out = run(&["search", "--nmax", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr_of(&out);
    assert!(err.contains("external generator"), "{err}");
}

#[test]
fn verify_lemma31_holds() {
    let out = run(&["verify", "lemma31"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().map(str::trim).collect();
    assert_eq!(lines.len(), 6);
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["holds"], true);
        assert!(v["claim_id"].as_str().unwrap().starts_with("lemma31/"));
    }
}

#[test]
fn verify_lemma32_reports_the_known_exception_with_exit_1() {
    let out = run(&["verify", "lemma32"]);
    assert_eq!(out.status.code(), Some(1));
    let failures: Vec<serde_json::Value> = stdout_of(&out)
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .filter(|v| v["holds"] == false)
        .collect();
    // One twin case plus the four literal-hypothesis hits on the same two
    // multipartite graphs.
    assert_eq!(failures.len(), 5);
    assert!(failures
        .iter()
        .all(|v| v["claim_id"].as_str().unwrap().contains("lemma32")));
}

#[test]
fn verify_claims_holds_at_small_order() {
    let out = run(&["verify", "claims", "--nmax", "4", "--random-cases", "5"]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    assert!(stderr_of(&out).contains("0 failed"));
}

#[test]
fn verify_conjectures_ul_is_clean() {
    let out = run(&["verify", "conjectures", "--nmax", "5", "--which", "ul"]);
    assert!(out.status.success());
    assert!(stderr_of(&out).contains("0 unexpected failures"));
}

#[test]
fn verify_conjectures_pendant_tolerates_known_exceptions() {
    let out = run(&["verify", "conjectures", "--nmax", "5", "--which", "pendant"]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    let err = stderr_of(&out);
    assert!(err.contains("0 unexpected failures"), "{err}");
    assert!(err.contains("5 expected exceptional failures"), "{err}");
}

#[test]
fn search_enumerated_counts_and_violations() {
    let out = run(&["search", "--nmax", "5", "--inequality", "main"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "graph6,n,m,ell,br,ul,pendant,in_C,family,main_ok,conj2_ok,conj3_ok"
    );
    assert_eq!(lines.count(), 30, "connected graphs with 2 <= n <= 5");
    assert!(stderr_of(&out).contains("5 violations"));
}

#[test]
fn search_violations_only_lists_the_known_five() {
    let out = run(&[
        "search",
        "--nmax",
        "5",
        "--inequality",
        "main",
        "--violations-only",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let mut families: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(8).unwrap())
        .collect();
    families.sort_unstable();
    assert_eq!(families, vec!["F0:H5", "F:C4", "F:K23", "F:W4", "F:W4'"]);
}

#[test]
fn search_stdin_reports_bad_lines_and_continues() {
    let out = run_with_stdin(
        &["search", "--stdin", "--inequality", "conj3"],
        ">>graph6<<\nCl\nC~\nbroken\n",
    );
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).lines().count(), 3, "header plus two records");
    let err = stderr_of(&out);
    assert!(err.contains("line 4"), "{err}");
    assert!(err.contains("scanned 2 graphs"), "{err}");
}

#[test]
fn search_parallel_output_is_deterministic() {
    let mut input = String::new();
    for n in 2..=5 {
        for g in graphlines::search::enumerate_connected(n).unwrap().iter() {
            input.push_str(&to_graph6(g));
            input.push('\n');
        }
    }
    let one = run_with_stdin(&["search", "--stdin", "--jobs", "1"], &input);
    let four = run_with_stdin(&["search", "--stdin", "--jobs", "4"], &input);
    assert!(one.status.success() && four.status.success());
    assert_eq!(stdout_of(&one), stdout_of(&four));
}

#[test]
fn search_jsonl_format() {
    let out = run(&["search", "--nmax", "3", "--format", "jsonl"]);
    assert!(out.status.success());
    for line in stdout_of(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["graph6"].is_string());
        assert!(v["in_C"].is_boolean());
        assert!(v["conj3_ok"].is_string());
    }
}

#[test]
fn render_is_deterministic_and_shaped() {
    let a = run(&["render", "Cl"]);
    let b = run(&["render", "Cl"]);
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));
    let dot = stdout_of(&a);
    assert!(dot.starts_with("graph lines {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
    assert!(dot.contains("L0 = {0, 1, 2, 3}"));
    assert!(!dot.contains("l1 ["), "C4 has a single line class");

    let out = run(&["render", "@"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_dumps() {
    let out = run(&["catalog", "--format", "g6"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let records: Vec<&str> = text.lines().filter(|l| !l.starts_with(">>")).collect();
    assert_eq!(records.len(), 15);
    assert!(text.contains(">> C4 group=F n=4 m=4 ell=1"));
    assert!(text.contains(">> H8_3 group=F0 n=8 m=16"));

    let out = run(&["catalog", "--format", "edgelist"]);
    assert!(out.status.success());
    let stanzas = parse_edgelist(&stdout_of(&out)).unwrap();
    assert_eq!(stanzas.len(), 15);
    assert_eq!(stanzas[0].0.as_deref(), Some("C4"));
    assert_eq!(stanzas[14].1.vertex_count(), 7);
}

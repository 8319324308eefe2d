//! End-to-end tests of the `monoideal` binary: output texts, file
//! round-trips, JSON reports, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::tempdir;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monoideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("utf8 stderr")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        stdout_of(output),
        stderr_of(output)
    );
}

#[test]
fn min_output_round_trips_as_input() {
    let dir = tempdir().unwrap();
    let first = run(&["min", &fixture("construction8.ideal")]);
    assert_exit(&first, 0);
    let text = stdout_of(&first);
    assert!(text.starts_with("vars x1 x2 x3 x4 x5 x6 x7 x8\nideal "));
    let copy = dir.path().join("copy.ideal");
    std::fs::write(&copy, &text).unwrap();
    let second = run(&["min", copy.to_str().unwrap()]);
    assert_exit(&second, 0);
    assert_eq!(stdout_of(&second), text);
}

#[test]
fn worked_chain_reaches_the_maximal_ideal() {
    let dir = tempdir().unwrap();
    let write = |path: &Path, output: &Output| {
        assert_exit(output, 0);
        std::fs::write(path, output.stdout.as_slice()).unwrap();
    };

    let l = dir.path().join("l.ideal");
    write(&l, &run(&["intersect", &fixture("construction8.ideal"), &fixture("qx8_prime.ideal")]));
    let l2 = dir.path().join("l2.ideal");
    write(&l2, &run(&["power", l.to_str().unwrap(), "-k", "2"]));
    let colon = run(&["colon", l2.to_str().unwrap(), "--by", "x2*x3*x4*x5*x7"]);
    assert_exit(&colon, 0);
    assert_eq!(
        stdout_of(&colon),
        "vars x1 x2 x3 x4 x5 x6 x7 x8\nideal x1, x2, x3, x4, x5, x6, x7, x8\n"
    );
}

#[test]
fn failed_torsion_freeness_reports_the_embedded_prime_and_exits_one() {
    let output = run(&["ntf", &fixture("cover_c5.ideal"), "--max-power", "3"]);
    assert_exit(&output, 1);
    let text = stdout_of(&output);
    assert!(text.contains("verdict: fails-at-2"), "got: {text}");
    assert!(text.contains("embedded: [x1,x2,x3,x4,x5] at k=2"), "got: {text}");
}

#[test]
fn passing_torsion_freeness_exits_zero() {
    let dir = tempdir().unwrap();
    let edge = dir.path().join("edge.ideal");
    let graph = run(&["graph", "--type", "path", "--n", "4", "--ideal", "edge"]);
    assert_exit(&graph, 0);
    std::fs::write(&edge, graph.stdout.as_slice()).unwrap();
    let output = run(&["ntf", edge.to_str().unwrap(), "--max-power", "3"]);
    assert_exit(&output, 0);
    assert_eq!(stdout_of(&output), "verdict: NTF-up-to-3\n");
}

#[test]
fn parse_errors_carry_line_and_column_and_exit_two() {
    let dir = tempdir().unwrap();
    let bad = dir.path().join("bad.ideal");
    std::fs::write(&bad, "vars x1 x2\nideal x1*zz\n").unwrap();
    let output = run(&["min", bad.to_str().unwrap()]);
    assert_exit(&output, 2);
    let message = stderr_of(&output);
    assert!(message.contains(":2:10:"), "got: {message}");
    assert!(message.contains("unknown variable 'zz'"), "got: {message}");
}

#[test]
fn oversized_dominating_set_enumeration_is_refused_with_exit_three() {
    let output = run(&["graph", "--type", "star", "--n", "17", "--ideal", "di"]);
    assert_exit(&output, 3);
    assert!(stderr_of(&output).contains("budget"), "got: {}", stderr_of(&output));
}

#[test]
fn json_reports_are_stable_across_runs() {
    let mask = |text: &str| -> String {
        let mut out = String::new();
        for line in text.lines() {
            if line.trim_start().starts_with("\"timing_ms\"") {
                out.push_str("  \"timing_ms\": 0,\n");
            } else {
                out.push_str(line);
                out.push('\n');
            }
        }
        out
    };
    let first = run(&["--json", "ass", &fixture("cover_c5.ideal")]);
    let second = run(&["--json", "ass", &fixture("cover_c5.ideal")]);
    assert_exit(&first, 0);
    let text = stdout_of(&first);
    for field in ["\"command\"", "\"inputs\"", "\"result\"", "\"verdict\"", "\"witnesses\"", "\"timing_ms\"", "\"seed\""] {
        assert!(text.contains(field), "missing {field} in {text}");
    }
    assert!(text.contains("\"sha256\""));
    assert_eq!(mask(&text), mask(&stdout_of(&second)));
}

#[test]
fn graph_families_produce_the_expected_ideals() {
    let ni = run(&["graph", "--type", "path", "--n", "4", "--ideal", "ni"]);
    assert_exit(&ni, 0);
    assert_eq!(stdout_of(&ni), "vars x1 x2 x3 x4\nideal x1*x2, x3*x4\n");

    let di = run(&["graph", "--type", "path", "--n", "4", "--ideal", "di"]);
    assert_exit(&di, 0);
    assert_eq!(stdout_of(&di), "vars x1 x2 x3 x4\nideal x1*x3, x1*x4, x2*x3, x2*x4\n");

    let from_file = run(&["graph", "--file", &fixture("path4.graph"), "--ideal", "di"]);
    assert_exit(&from_file, 0);
    assert_eq!(stdout_of(&from_file), stdout_of(&di));
}

#[test]
fn decompose_prints_components_then_the_irredundancy_line() {
    let output = run(&["decompose", &fixture("cover_c5.ideal")]);
    assert_exit(&output, 0);
    assert_eq!(
        stdout_of(&output),
        "component: x1, x2\ncomponent: x1, x5\ncomponent: x2, x3\ncomponent: x3, x4\ncomponent: x4, x5\nirredundant: true\n"
    );
}

#[test]
fn single_scenario_suite_passes_and_exits_zero() {
    let output = run(&["suite", "--scenario", "A"]);
    assert_exit(&output, 0);
    let text = stdout_of(&output);
    assert!(text.contains("scenario A: pass"), "got: {text}");
}

#[test]
fn conflicting_minor_flags_exit_two() {
    let output = run(&[
        "minor",
        &fixture("cover_c5.ideal"),
        "--delete",
        "x1",
        "--contract",
        "x2",
    ]);
    assert_exit(&output, 2);
}

#[test]
fn intersect_rejects_mismatched_variable_contexts() {
    let dir = tempdir().unwrap();
    let other = dir.path().join("other.ideal");
    std::fs::write(&other, "vars y1 y2\nideal y1*y2\n").unwrap();
    let output = run(&["intersect", &fixture("cover_c5.ideal"), other.to_str().unwrap()]);
    assert_exit(&output, 2);
    assert!(stderr_of(&output).contains("variable context"), "got: {}", stderr_of(&output));
}

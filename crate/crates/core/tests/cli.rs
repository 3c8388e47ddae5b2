use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_minconn"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("minconn-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Writes the stdout of a `generate` call to a scratch file.
fn generated(name: &str, args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let path = scratch(name);
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn generate_complete_golden() {
    let out = run(&["generate", "complete", "--n", "4", "--r", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"r\":3,\"vertices\":[\"1\",\"2\",\"3\",\"4\"],\"edges\":[[\"1\",\"2\",\"3\"],[\"1\",\"2\",\"4\"],[\"1\",\"3\",\"4\"],[\"2\",\"3\",\"4\"]]}\n"
    );
    assert!(out.stderr.is_empty());
}

#[test]
fn generate_star_and_size_order() {
    let star: Value = serde_json::from_slice(&run(&["generate", "star", "--n", "9", "--r", "6"]).stdout).unwrap();
    assert_eq!(star["edges"].as_array().unwrap().len(), 4);
    let file = generated("size_order.json", &["generate", "size-order", "--n", "9", "--m", "3", "--r", "6"]);
    let r = report(&run(&["analyze", &file]));
    assert_eq!(r["result"]["minimally_connected"], true);
    assert_eq!((r["result"]["n"].as_u64(), r["result"]["k"].as_u64()), (Some(9), Some(3)));
    let bad = run(&["generate", "size-order", "--n", "9", "--m", "5", "--r", "6"]);
    assert_eq!(bad.status.code(), Some(2));
    assert_eq!(run(&["generate", "random-tree", "--k", "3", "--r", "3"]).status.code(), Some(2));
}

#[test]
fn analyze_reports() {
    let two = generated("two_edge.json", &["generate", "two-edge", "--r", "3"]);
    let out = run(&["analyze", &two]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], serde_json::json!(["analyze", two]));
    assert_eq!(r["input_digest"].as_str().unwrap().len(), 64);
    assert_eq!(r["result"]["minimally_connected"], true);
    assert_eq!(r["result"]["tree"], false);

    let star = generated("star.json", &["generate", "star", "--n", "9", "--r", "6"]);
    let r = report(&run(&["analyze", &star]));
    assert_eq!(r["result"]["star"], true);
    assert_eq!(r["result"]["tightness_sum"], 15);
}

#[test]
fn malformed_input_exits_2() {
    let path = scratch("bad.json");
    std::fs::write(&path, "{\"r\": 3, \"edges\": [[\"a\", \"b\"]]}").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("edges[0]"));
    assert_eq!(run(&["analyze", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn span_weighted_totals() {
    let file = data("greedy_counterexample.json");
    let greedy = report(&run(&["span", &file, "--weighted", "greedy"]));
    assert_eq!(greedy["result"]["weight"], "5");
    let exact = report(&run(&["span", &file, "--weighted", "exact"]));
    assert_eq!(exact["result"]["weight"], "4");
    assert_eq!(exact["result"]["subhypergraph"]["edges"], serde_json::json!([["a", "b", "c"], ["c", "d", "e"]]));

    let k4 = generated("k4.json", &["generate", "complete", "--n", "4", "--r", "3"]);
    let lex = report(&run(&["span", &k4]));
    assert_eq!(lex["result"]["size"], 2);
    assert_eq!(lex["result"]["size_bounds"], serde_json::json!([2, 2]));
    assert_eq!(run(&["span", &k4, "--order", "seeded"]).status.code(), Some(2));
    assert_eq!(run(&["span", &k4, "--weighted", "exact"]).status.code(), Some(2));
    let seeded = report(&run(&["span", &k4, "--order", "seeded", "--seed", "3"]));
    assert_eq!(seeded["seed"], 3);
    assert_eq!(seeded["result"]["size"], 2);
}

#[test]
fn color_modes() {
    let tree = generated("tree4.json", &["generate", "random-tree", "--k", "3", "--r", "4", "--seed", "1"]);
    let weak2 = report(&run(&["color", &tree, "--mode", "weak2"]));
    assert_eq!(weak2["result"]["palette_size"], 2);
    let k3 = report(&run(&["color", &tree, "--mode", "k", "--k", "3"]));
    assert_eq!(k3["result"]["palette_size"], 3);
    let strong_tree = report(&run(&["color", &tree, "--mode", "strong"]));
    assert_eq!(strong_tree["result"]["palette_size"], 4);
    assert_eq!(strong_tree["result"]["upper_bound"], 4);

    let ce = generated("ce4.json", &["generate", "clique-expansion", "--n", "4", "--r", "3"]);
    let strong = report(&run(&["color", &ce, "--mode", "strong"]));
    assert_eq!(strong["result"]["palette_size"], 4);

    let k4 = generated("k4c.json", &["generate", "complete", "--n", "4", "--r", "3"]);
    assert_eq!(run(&["color", &k4, "--mode", "weak2"]).status.code(), Some(2));
    assert_eq!(run(&["color", &k4, "--mode", "k"]).status.code(), Some(2));
}

#[test]
fn resource_limits_exit_3() {
    let big = generated("star20.json", &["generate", "star", "--n", "20", "--r", "3"]);
    let out = run(&["color", &big, "--mode", "strong"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource limit"));
}

#[test]
fn check_suites() {
    for (suite, extra) in [
        ("tightness", vec![]),
        ("size-bounds", vec![]),
        ("gallai", vec!["--r", "3", "--n", "5"]),
        ("monochromatic", vec!["--n", "4"]),
        ("rc", vec![]),
    ] {
        let mut args = vec!["check", suite, "--seed", "1", "--trials", "60"];
        args.extend(extra);
        let out = run(&args);
        let r = report(&out);
        assert_eq!(out.status.code(), Some(0), "{suite}: {r}");
        assert_eq!(r["result"]["passed"], 60, "{suite}");
    }
    assert_eq!(run(&["check", "tightness", "--trials", "5"]).status.code(), Some(2));
}

/// The diameter claim for complements of connected hypergraphs does not
/// hold, so the sweep reports counterexamples and exits 1.
#[test]
fn check_complement_reports_counterexamples() {
    let out = run(&["check", "complement", "--seed", "7", "--trials", "200"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["holds"], false);
    let first = &r["result"]["counterexamples"][0];
    assert!(first["detail"].as_str().unwrap().contains("diameter 2"));
    assert_eq!(first["instance"]["r"], 3);
}

#[test]
fn verbose_goes_to_stderr_only() {
    let k4 = generated("k4v.json", &["generate", "complete", "--n", "4", "--r", "3"]);
    let quiet = run(&["analyze", &k4]);
    let loud = run(&["--verbose", "analyze", &k4]);
    let stderr = String::from_utf8(loud.stderr.clone()).unwrap();
    assert!(stderr.contains("elapsed"));
    let mut a = report(&quiet);
    let mut b = report(&loud);
    a["command"] = Value::Null;
    b["command"] = Value::Null;
    assert_eq!(a, b);
}

#[test]
fn jobs_do_not_change_results() {
    let one = report(&run(&["check", "rc", "--seed", "4", "--trials", "40", "--jobs", "1"]));
    let four = report(&run(&["check", "rc", "--seed", "4", "--trials", "40", "--jobs", "4"]));
    assert_eq!(one["result"], four["result"]);
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["minconn", "generate", "loose-path", "--k", "3", "--r", "3"];
    let inner = minconn::cli::run(args);
    let outer = run(&args[1..]);
    assert_eq!(inner.code, outer.status.code().unwrap());
    assert_eq!(inner.stdout.as_bytes(), &outer.stdout[..]);
}

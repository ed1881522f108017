use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammawitt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

const LINE: &str = r#"{"rank":1,"inequalities":[[1]],"weight":[1],"degree_bound":2}"#;

fn witt_doc(a1: i64, a2: i64) -> String {
    format!(r#"{{"monoid":{LINE},"ring":{{"kind":"Z"}},"coeffs":[{{"gamma":[1],"value":"{a1}"}},{{"gamma":[2],"value":"{a2}"}}]}}"#)
}

fn coeff(doc: &Value, gamma: i64) -> i64 {
    doc["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["gamma"][0] == gamma)
        .map_or(0, |c| c["value"].as_str().unwrap().parse().unwrap())
}

#[test]
fn laurent_in_one_variable() {
    let o = run(&["kdecomp", "laurent", "--n", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "K_q ⊕ K_{q−1} ⊕ 2·NK_q");
}

#[test]
fn positive_quadrant_rays_at_height_three() {
    let v = json_of(&["monoid", "rays", "--set", "positive-orthant:2", "--height", "3"]);
    assert_eq!(v["count"], 7);
    assert_eq!(v["rays"].as_array().unwrap().len(), 7);
}

#[test]
fn product_on_length_two_witt_vectors() {
    for (a1, a2, b1, b2) in [(1, 2, 3, 5), (-2, 1, 4, -3), (0, 7, 2, 2)] {
        let v = json_of(&["witt", "mul", "--input", &witt_doc(a1, a2), "--other", &witt_doc(b1, b2)]);
        // (a₁, a₂)(b₁, b₂) = (a₁b₁, a₁²b₂ + b₁²a₂ + 2a₂b₂)
        assert_eq!(coeff(&v, 1), a1 * b1);
        assert_eq!(coeff(&v, 2), a1 * a1 * b2 + b1 * b1 * a2 + 2 * a2 * b2);
    }
}

#[test]
fn ghost_output_round_trips() {
    let input = witt_doc(3, -4);
    let g = json_of(&["witt", "ghost", "--input", &input]);
    assert_eq!(coeff(&g, 1), 3);
    assert_eq!(coeff(&g, 2), 9 + 2 * -4);
    let back = json_of(&["witt", "from-ghost", "--input", &g.to_string()]);
    let original: Value = serde_json::from_str(&input).unwrap();
    assert_eq!(coeff(&back, 1), coeff(&original, 1));
    assert_eq!(coeff(&back, 2), coeff(&original, 2));
    // a value document re-parses to itself through an identity operation
    let zero = format!(r#"{{"monoid":{LINE},"coeffs":[]}}"#);
    let same = json_of(&["witt", "add", "--input", &back.to_string(), "--other", &zero]);
    assert_eq!(same, back);
}

#[test]
fn hochschild_output_is_deterministic() {
    let alg = r#"{"monoid":{"rank":2,"generators":[[1,0],[1,1],[1,2]],"weight":[1,0],"degree_bound":2}}"#;
    let args = ["hh", "compute", "--algebra", alg, "--relative", "--nmax", "2", "--basis", "--format", "json"];
    let first = run(&args);
    assert!(first.status.success());
    for _ in 0..3 {
        assert_eq!(run(&args).stdout, first.stdout);
    }
    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["kind"], "hochschild");
}

#[test]
fn cyclic_homology_of_cubic_truncation() {
    let alg = r#"{"monoid":{"rank":1,"inequalities":[[1]],"ideal":[[3]],"weight":[1],"degree_bound":3}}"#;
    let v = json_of(&["hc", "compute", "--algebra", alg, "--relative", "--nmax", "1", "--max-weight", "4"]);
    let entries = v["entries"].as_array().unwrap();
    // HC₀ relative is spanned by x, x²
    assert_eq!(entries.iter().filter(|e| e["n"] == 0).count(), 2);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let alg = r#"{"monoid":{"rank":1,"inequalities":[[1]],"ideal":[[3]],"weight":[1],"degree_bound":3},"field":{"kind":"prime","p":5}}"#;
    let o = run(&["hc", "compute", "--algebra", alg]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["module"], "hochschild");

    let o = run(&["monoid", "enumerate", "--input", r#"{"rank":1,"inequalities":[[1]],"colour":"red"}"#]);
    assert_eq!(o.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["module"], "input");
}

#[test]
fn usage_errors_exit_two() {
    let o = run(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("valid subcommands: monoid, witt, hh, hc, kdecomp, selftest"));
    assert_eq!(run(&["kdecomp", "laurent", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn content_on_the_quadric_cone() {
    let cone = r#"{"rank":2,"generators":[[1,0],[1,1],[1,2]]}"#;
    assert_eq!(stdout(&run(&["monoid", "content", "--input", cone, "--vector", "2,4"])).trim(), "2");
    assert_eq!(stdout(&run(&["monoid", "contains", "--input", cone, "--vector", "1,3"])).trim(), "false");
}

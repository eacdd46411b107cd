use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubicsolve")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("one JSON document")
}

fn roots(v: &Value) -> Vec<(f64, f64)> {
    v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|z| (z["re"].as_f64().unwrap(), z["im"].as_f64().unwrap()))
        .collect()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

#[test]
fn pq_input_reports_case_and_exact_roots() {
    let o = run(&["solve", "--p", "-6", "--q", "-9", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["case"], "real_distinct");
    let r = roots(&v);
    assert!(close(r[0].0, 3.0, 1e-12) && r[0].1 == 0.0);
    assert!(close(r[1].0, -1.5, 1e-12) && close(r[1].1, -(3f64.sqrt()) / 2.0, 1e-12));
    assert_eq!(v["exact"][0], "3");
    assert_eq!(v["rs"]["exact"], serde_json::json!(["-1/2", "-4"]));
}

#[test]
fn equal_case_has_double_root() {
    let v = json(&run(&["solve", "--expr", "x^3-12x+16=0", "--format", "json"]));
    assert_eq!(v["case"], "equal");
    assert_eq!(roots(&v), vec![(-4.0, 0.0), (2.0, 0.0), (2.0, 0.0)]);
    assert_eq!(v["multiplicity"], serde_json::json!([[0, 1], [1, 2]]));
}

#[test]
fn general_coefficients_are_shifted_back() {
    // (x − 1)(x − 2)(x − 3)
    let v = json(&run(&["solve", "--a", "-6", "--b", "11", "--c", "-6", "--format", "json"]));
    let r = roots(&v);
    for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
        assert!(close(got.0, want, 1e-12), "{r:?}");
    }
    assert_eq!(v["exact"], serde_json::json!(["1", "2", "3"]));
    let v = json(&run(&["solve", "--lead", "2", "--a", "-12", "--b", "22", "--c", "-12", "--format", "json"]));
    assert_eq!(v["exact"], serde_json::json!(["1", "2", "3"]));
}

#[test]
fn trig_format_prints_amplitude_and_angles() {
    let o = run(&["solve", "--expr", "x^3-0.75x+0.125", "--format", "trig"]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.contains("amplitude = -1"), "{text}");
    assert!(text.contains("0.333333333333*pi"), "{text}");
    assert!(text.contains("-0.939692620786"), "{text}");
    assert!(text.contains("0.766044443119"), "{text}");
}

#[test]
fn exact_format_prints_surds() {
    let text = stdout(&run(&["solve", "--expr", "x^3-6x-9", "--format", "exact"]));
    assert!(text.contains("x1 = 3"), "{text}");
    assert!(text.contains("-3/2 + 1/2*sqrt(-3)"), "{text}");
}

#[test]
fn both_methods_agree_and_verify() {
    let o = run(&["solve", "--expr", "x^3-48x-64*sqrt(2)", "--method", "both", "--verify", "--format", "json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert!(v["comparison"]["max_distance"].as_f64().unwrap() <= 1e-10);
    assert_eq!(v["verification"]["pass"], true);
    assert_eq!(v["exact"], Value::Null);
}

#[test]
fn moebius_and_branch_options_give_the_same_roots() {
    let base = roots(&json(&run(&["solve", "--p", "-6", "--q", "-9", "--format", "json"])));
    for extra in [["--method", "moebius"], ["--branch", "principal"], ["--branch", "real"]] {
        let mut args = vec!["solve", "--p", "-6", "--q", "-9", "--format", "json"];
        args.extend(extra);
        let r = roots(&json(&run(&args)));
        for (a, b) in r.iter().zip(&base) {
            assert!(close(a.0, b.0, 1e-12) && close(a.1, b.1, 1e-12), "{extra:?}: {r:?}");
        }
    }
}

#[test]
fn denest_examples() {
    let v = json(&run(&["denest", "--a", "9/2", "--b", "49/4", "--format", "json"]));
    assert_eq!(v["exact"], "3");
    let v = json(&run(&["denest", "--a", "2", "--b", "5", "--format", "json"]));
    assert_eq!(v["exact"], "1");
    let v = json(&run(&["denest", "--a", "1", "--b", "2", "--format", "json"]));
    assert_eq!(v["exact"], Value::Null);
    assert!(close(v["value"].as_f64().unwrap(), 0.596071637983647, 1e-12));
    assert_eq!(v["note"], "no rational value");
}

#[test]
fn usage_errors_exit_with_2() {
    let o = run(&["solve", "--expr", "x^3+"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("position 4"), "{err}");
    assert_eq!(run(&["solve", "--expr", "x^4+x"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "--lead", "0", "--a", "1", "--b", "1", "--c", "1"]).status.code(), Some(2));
    assert_eq!(run(&["denest", "--a", "1", "--b", "-2"]).status.code(), Some(2));
    assert_eq!(run(&["solve"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_with_3() {
    // residuals overflow to infinity at this magnitude
    let o = run(&["solve", "--p", "1e300", "--q", "1e300", "--verify"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn batch_keeps_order_and_reports_bad_lines() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "x^3-6x-9=0\n# comment\n\nbogus\nx^3-12x+16=0\nx^3-0.75x+0.125").unwrap();
    let o = run(&["solve", "--batch", file.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let cases: Vec<&str> = lines.iter().map(|v| v["case"].as_str().unwrap()).collect();
    assert_eq!(cases, ["real_distinct", "equal", "conjugate_pair"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn clean_batch_succeeds() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    for k in 1..=50 {
        writeln!(file, "x^3 - {k}x + 1").unwrap();
    }
    let o = run(&["solve", "--batch", file.path().to_str().unwrap(), "--verify"]);
    assert!(o.status.success());
    let inputs: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["input"].as_str().unwrap().to_owned())
        .collect();
    let expected: Vec<String> = (1..=50).map(|k| format!("x^3 - {k}x + 1")).collect();
    assert_eq!(inputs, expected);
}

use std::process::{Command, Output};

use serde_json::Value;

fn qplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qplane")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn exit_codes() {
    let ok = qplane(&["verify", "--suite", "lowest-weight", "--max-n", "8", "--mode", "symbolic"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(qplane(&["verify", "--suite", "qhahn-algebra", "--N", "6"]).status.code(), Some(0));

    let poisoned = qplane(&["verify", "--suite", "lowest-weight", "--poison"]);
    assert_eq!(poisoned.status.code(), Some(1));
    let err = String::from_utf8_lossy(&poisoned.stderr);
    assert!(err.contains("FAILED") && err.contains("lhs"), "{err}");

    for bad in [
        &["verify", "--suite", "nope"][..],
        &["--trials", "2", "verify"],
        &["compute", "qhahn", "--k", "4", "--N", "3"],
        &["compute", "phi", "--expr", "X"],
        &["compute", "phi-inv", "--expr", "x +"],
        &["table", "cg", "--N", "0"],
        &["verify", "--suite", "classical-limit", "--numeric", "1", "2", "3"],
        &["frobnicate"],
    ] {
        assert_eq!(qplane(bad).status.code(), Some(2), "{bad:?}");
    }
    assert_eq!(qplane(&["--help"]).status.code(), Some(0));
}

#[test]
fn compute_examples() {
    let lw = json(&qplane(&["compute", "lowest-weight", "--n", "1"]));
    assert_eq!(lw["object"], "lowest-weight");
    assert_eq!(lw["value"].as_array().map(Vec::len), Some(2));

    let j0 = json(&qplane(&["compute", "jacobi", "--n", "0"]));
    assert_eq!(j0["text"], "1");

    let r = json(&qplane(&["compute", "qrc", "--n", "0", "--f", "x", "--g", "y"]));
    // z · (u z) = u z²
    assert_eq!(r["text"], "u*z^2");

    let back = json(&qplane(&["compute", "phi-inv", "--expr", "x + u*y"]));
    assert_eq!(back["text"], "t");
    let fwd = json(&qplane(&["compute", "phi", "--expr", "t"]));
    assert_eq!(fwd["text"], "u*y + x");
}

#[test]
fn cg_table_formats() {
    let t = json(&qplane(&["table", "cg", "--N", "1"]));
    assert_eq!(t["columns"], serde_json::json!(["x", "y"]));
    assert_eq!(t["rows"].as_array().map(Vec::len), Some(2));
    let csv = stdout(&qplane(&["table", "cg", "--N", "1", "--out", "csv"]));
    assert_eq!(csv.lines().next(), Some("k,x,y"));
    assert_eq!(csv.lines().nth(1), Some("0,1,u"));
    let tex = stdout(&qplane(&["table", "cg", "--N", "2", "--out", "latex"]));
    assert!(tex.starts_with("\\begin{tabular}") && tex.trim_end().ends_with("\\end{tabular}"));
}

fn check_schema(line: &str) {
    let v: Value = serde_json::from_str(line).expect("one report per line");
    let obj = v.as_object().expect("report is an object");
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort();
    let allowed = ["counterexample", "identity", "mode", "params", "status"];
    assert!(keys.iter().all(|k| allowed.contains(k)), "{keys:?}");
    assert!(obj["identity"].is_string());
    assert!(obj["params"].is_object());
    assert!(matches!(obj["mode"].as_str(), Some("symbolic" | "point")));
    match obj["status"].as_str() {
        Some("ok") => assert!(!obj.contains_key("counterexample")),
        Some("fail") => assert!(obj.contains_key("counterexample")),
        other => panic!("bad status {other:?}"),
    }
}

#[test]
fn report_schema_for_every_suite() {
    let small = ["--max-n", "2", "--max-degree", "3", "--N", "2"];
    for extra in [&["verify"][..], &["verify", "--poison"], &["--mode", "point", "--seed", "11", "verify"]] {
        let args: Vec<&str> = small.iter().chain(extra).copied().collect();
        let o = qplane(&args);
        let text = stdout(&o);
        assert!(text.lines().count() > 13, "{args:?}");
        text.lines().for_each(check_schema);
    }
}

#[test]
fn csv_report_stream() {
    let o = qplane(&["--out", "csv", "verify", "--suite", "cg", "--N", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("identity,mode,status,params"));
    assert_eq!(lines.filter(|l| l.starts_with("clebsch-gordan,symbolic,ok,")).count(), 5);
}

#[test]
fn numeric_flag_moves_the_smoke_test() {
    let near = qplane(&["verify", "--suite", "classical-limit", "--numeric", "1.000001", "2.3", "3.7"]);
    assert_eq!(near.status.code(), Some(0));
    let far = qplane(&["verify", "--suite", "classical-limit", "--numeric", "1.01", "2.3", "3.7"]);
    assert_eq!(far.status.code(), Some(1));
}

use std::path::PathBuf;
use std::process::{Command, Output};

use hamming_radio::formats::{write_labeling_csv, write_ordering_csv};
use hamming_radio::{build_ordering, labeling_233};

fn hradio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hradio"))
        .args(args)
        .env_remove("HRADIO_NODE_BUDGET")
        .env_remove("HRADIO_TIME_BUDGET")
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

#[test]
fn order_matches_library_output() {
    let o = hradio(&["order", "3x3x6"]);
    assert_eq!(o.status.code(), Some(0));
    let mut expected = Vec::new();
    write_ordering_csv(&build_ordering(3, 3, 6).unwrap(), &mut expected).unwrap();
    assert_eq!(o.stdout, expected);
    let row19 = stdout(&o).lines().nth(19).unwrap().to_string();
    assert_eq!(row19, "19,\"(1,2,3)\"");
}

#[test]
fn order_reproduces_the_published_table() {
    let o = hradio(&["order", "3x3x6"]);
    assert_eq!(o.stdout, std::fs::read(golden("order_3x3x6.csv")).unwrap());
}

#[test]
fn order_sorts_factors() {
    let sorted = hradio(&["order", "3x3x6"]);
    let shuffled = hradio(&["order", "6x3x3"]);
    assert_eq!(sorted.stdout, shuffled.stdout);
    assert!(stderr(&shuffled).contains("sorted to 3x3x6"));
}

#[test]
fn order_needs_three_factors() {
    let o = hradio(&["order", "2x2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert_eq!(hradio(&["order", "1x3x3"]).status.code(), Some(2));
    assert_eq!(hradio(&["order", "3xfoo"]).status.code(), Some(2));
}

#[test]
fn order_warns_on_exceptional_graphs() {
    let o = hradio(&["order", "2x2x4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 17);
    assert!(stderr(&o).contains("not graceful"));
    assert!(!stderr(&hradio(&["order", "3x3x6"])).contains("not graceful"));
}

#[test]
fn order_blocks_and_json() {
    let o = hradio(&["order", "3x3x6", "--blocks"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("# A(")).count(), 9);
    let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    let plain = stdout(&hradio(&["order", "3x3x6"]));
    assert_eq!(rows, plain.lines().collect::<Vec<_>>());

    let flat = json(&hradio(&["order", "3x3x6", "--format", "json"]));
    assert_eq!(flat.as_array().unwrap().len(), 54);
    assert_eq!(flat[18], "(1,2,3)");
    let grouped = json(&hradio(&["order", "3x3x6", "--format", "json", "--blocks"]));
    assert_eq!(grouped.as_array().unwrap().len(), 9);
    assert_eq!(grouped[3][0], "(1,2,3)");
}

#[test]
fn verify_published_labeling() {
    let path = golden("table3_2x3x3.csv");
    let o = hradio(&["verify", "2x3x3", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report = json(&o);
    assert_eq!(report["valid"], true);
    assert_eq!(report["span"], 20);
}

#[test]
fn verify_reports_collisions() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden("table3_2x3x3.csv")).unwrap();
    let bad = text.replace("\"(2,3,2)\",20", "\"(2,3,2)\",19");
    assert_ne!(bad, text);
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, bad).unwrap();
    let o = hradio(&["verify", "2x3x3", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let report = json(&o);
    assert_eq!(report["valid"], false);
    let violations = report["violations"].as_array().unwrap();
    assert!(violations
        .iter()
        .any(|v| v["u"] == "(1,2,1)" && v["v"] == "(2,3,2)" && v["actual_gap"] == 0));
}

#[test]
fn verify_rejects_unreadable_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.csv");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(
        hradio(&["verify", "2x3x3", empty.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let partial = dir.path().join("partial.csv");
    std::fs::write(&partial, "vertex,label\n\"(1,1,1)\",1\n").unwrap();
    assert_eq!(
        hradio(&["verify", "2x3x3", partial.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );

    let missing = dir.path().join("missing.csv");
    assert_eq!(
        hradio(&["verify", "2x3x3", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn rn_values() {
    let o = hradio(&["rn", "2x3x3", "--certify"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["rn"], 20);
    assert_eq!(r["case"], "two_three_three");
    assert_eq!(r["solver"]["certified"], true);
    assert_eq!(r["solver"]["optimal"], true);

    let r = json(&hradio(&["rn", "2x2x7"]));
    assert_eq!(
        (r["rn"].as_u64(), r["case"].as_str()),
        (Some(41), Some("two_two_n"))
    );
    let r = json(&hradio(&["rn", "4x5x6"]));
    assert_eq!(
        (r["rn"].as_u64(), r["case"].as_str()),
        (Some(120), Some("graceful"))
    );
    let r = json(&hradio(&["rn", "3x2x3"]));
    assert_eq!(r["graph"], "2x3x3");
    assert_eq!(r["axis_order"], serde_json::json!([2, 1, 3]));

    assert_eq!(hradio(&["rn", "3x3"]).status.code(), Some(2));
}

#[test]
fn label_matches_library_output() {
    let o = hradio(&["label", "2x3x3", "--certify"]);
    assert_eq!(o.status.code(), Some(0));
    let mut expected = Vec::new();
    write_labeling_csv(&labeling_233(), &mut expected).unwrap();
    assert_eq!(o.stdout, expected);
    assert_eq!(o.stdout, std::fs::read(golden("table3_2x3x3.csv")).unwrap());
}

#[test]
fn label_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    for graph in ["2x2x5", "3x3x4", "2x3x3", "2x2"] {
        let o = hradio(&["label", graph]);
        assert_eq!(o.status.code(), Some(0), "{graph}");
        let path = dir.path().join(format!("{graph}.csv"));
        std::fs::write(&path, &o.stdout).unwrap();
        let v = hradio(&["verify", graph, path.to_str().unwrap()]);
        assert_eq!(v.status.code(), Some(0), "{graph}");
        let rn = json(&hradio(&["rn", graph]));
        assert_eq!(json(&v)["span"], rn["rn"], "{graph}");
    }
}

#[test]
fn solve_reports_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.csv");
    let o = hradio(&[
        "solve",
        "2x2",
        "--no-symmetry",
        "--witness",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["rn"], 5);
    assert_eq!(r["optimal"], true);
    assert!(r["nodes_explored"].is_u64());
    let v = hradio(&["verify", "2x2", witness.to_str().unwrap()]);
    assert_eq!(json(&v)["span"], 5);

    let inline = json(&hradio(&["solve", "2x2x2"]));
    assert_eq!(inline["rn"], 11);
    assert_eq!(inline["witness"].as_array().unwrap().len(), 8);
}

#[test]
fn solve_budget_exhaustion_exits_3() {
    let o = hradio(&["solve", "2x2x2x2", "--node-budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
    let r = json(&o);
    assert_eq!(r["optimal"], false);

    let o = Command::new(env!("CARGO_BIN_EXE_hradio"))
        .args(["solve", "2x2x2x2"])
        .env("HRADIO_NODE_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn sweep_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let o = hradio(&["sweep", "4", "4", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "l,m,n,vertices,formula_rn,case,graceful,solver_rn,solver_optimal"
    );
    assert!(lines.contains(&"2,3,3,18,20,two_three_three,false,20,true"));
    assert!(lines.contains(&"3,3,3,27,27,graceful,true,,"));
    assert!(lines.contains(&"2,2,4,16,23,two_two_n,false,23,true"));
    assert_eq!(lines.len(), 11);

    assert_eq!(hradio(&["sweep", "1", "4", "4"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hradio(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(hradio(&["order"]).status.code(), Some(2));
    assert_eq!(hradio(&["--help"]).status.code(), Some(0));
}

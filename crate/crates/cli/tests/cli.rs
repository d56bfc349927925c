//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crossfam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn bound_mixed_kernel_branch() {
    let out = run(&["bound", "--n", "5", "--ks", "3,3,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["regime"], "mixed");
    assert_eq!(v["values"]["lambda1"], 16);
    assert_eq!(v["values"]["lambda2"], 19);
    assert_eq!(v["values"]["bound"], 19);
    assert_eq!(v["values"]["branch"], "kernel");
}

#[test]
fn bound_nonmixed_star_branch() {
    let out = run(&["bound", "--n", "6", "--ks", "3,3,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["regime"], "nonmixed");
    assert_eq!(v["values"]["bound"], 25);
    assert_eq!(v["values"]["branch"], "star");
}

#[test]
fn bound_unsupported_window_exits_2() {
    let out = run(&["bound", "--n", "4", "--ks", "3,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn bound_reorders_sizes_with_warning() {
    let out = run(&["bound", "--n", "5", "--ks", "2,3,3"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("reordered"));
    assert_eq!(json(&out)["values"]["bound"], 19);
}

#[test]
fn oracle_matches_and_classifies() {
    let out = run(&["oracle", "--n", "5", "--ks", "3,3,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["values"]["oracle"], 19);
    assert_eq!(v["values"]["match"], "yes");
    assert_eq!(v["classes"], serde_json::json!(["kernel"]));
    assert_eq!(
        v["tuples"],
        serde_json::json!([["{2,4,5}", "{2,4,5}", "{1,2}"]])
    );
}

#[test]
fn oracle_exceptional_case() {
    let out = run(&["oracle", "--n", "5", "--ks", "3,3,2,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["values"]["oracle"], 20);
    assert_eq!(v["classes"], serde_json::json!(["exceptional"]));
    assert!(v["tuples"].as_array().unwrap().len() >= 4);
}

#[test]
fn oracle_two_families() {
    let out = run(&["oracle", "--n", "4", "--ks", "2,2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["values"]["oracle"], 6);
}

#[test]
fn oracle_budget_exhaustion_exits_2() {
    let out = run(&[
        "oracle",
        "--n",
        "9",
        "--ks",
        "4,4,3",
        "--budget-nodes",
        "100",
    ]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exceeded"));
}

#[test]
fn profile_endpoint_max() {
    let out = run(&["profile", "--n", "5", "--ks", "3,3,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["values"]["profile"], serde_json::json!([16, 17, 18, 19]));
    assert_eq!(v["values"]["verdict"], "endpoint-max");
}

#[test]
fn profile_exceptional_flat() {
    let out = run(&["profile", "--n", "5", "--ks", "3,3,2,2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["values"]["profile"], serde_json::json!([20, 20, 20, 20]));
    assert_eq!(v["values"]["verdict"], "exceptional-flat");
}

#[test]
fn profile_outside_mixed_exits_2() {
    let out = run(&["profile", "--n", "6", "--ks", "3,3,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn verify_suites_pass() {
    let out = run(&["verify", "--suite", "lex", "--n-max", "6"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["failures"], 0);
    assert!(v["checks"].as_u64().unwrap() > 1000);

    let out = run(&["verify", "--suite", "partners", "--n-max", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["failures"], 0);

    let out = run(&["verify", "--suite", "increments", "--n-max", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["failures"], 0);

    let out = run(&[
        "verify", "--suite", "kk", "--n-max", "6", "--seed", "7", "--trials", "200",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["failures"], 0);
}

#[test]
fn verify_unknown_suite_exits_2() {
    let out = run(&["verify", "--suite", "nope"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sweep_csv_schema() {
    let out = run(&["sweep", "--n-max", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,t,ks,regime,lambda1,lambda2,bound,oracle,match,classes,elapsed_ms"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.len() > 5);
    for row in rows {
        assert!(row.split(',').count() >= 11, "row {row}");
        assert!(row.contains(",yes,"), "row {row} did not match the bound");
    }
}

#[test]
fn sweep_json_to_file() {
    let dir = std::env::temp_dir().join("crossfam-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.json");
    let out = run(&["sweep", "--n-max", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&path).unwrap()).expect("file is JSON");
    let rows = v.as_array().unwrap();
    assert!(rows.len() > 5);
    for row in rows {
        assert_eq!(row["values"]["match"], "yes");
    }
    std::fs::remove_file(&path).ok();
}

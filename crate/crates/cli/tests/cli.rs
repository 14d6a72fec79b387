//! End-to-end tests of the pdet binary: exit codes, JSON schema, verdicts,
//! and report determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn pdet(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pdet"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    name.to_string()
}

fn json_of(out: &Output) -> Value {
    assert!(
        !out.stdout.is_empty(),
        "no stdout; stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn pdet_reports_pseudo_det() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a.txt", "5 6\n10 12\n");
    let out = pdet(&["--format", "json", "pdet", &file], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["command"], "pdet");
    assert_eq!(v["results"]["pseudo_det"], "17");
    assert_eq!(v["results"]["spectral_count"], 1);
    assert_eq!(v["results"]["rank"], 1);
    assert_eq!(v["results"]["char_poly"][0], "0");
    assert_eq!(v["inputs"][0]["path"], "a.txt");
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn pdet_of_identity() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "i3.txt", "1 0 0\n0 1 0\n0 0 1\n");
    let out = pdet(&["--format", "json", "pdet", &file], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["pseudo_det"], "1");
    assert_eq!(v["results"]["spectral_count"], 3);
}

#[test]
fn cauchy_binet_on_wide_pair() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(
        dir.path(),
        "f.txt",
        "2 -1 0 3 1 -2 4\n0 1 -3 2 2 0 -1\n1 0 2 -2 3 1 0\n-1 2 1 0 -3 2 2\n3 -2 0 1 0 -1 1\n",
    );
    let g = write(
        dir.path(),
        "g.txt",
        "1 2 -1 0 3 1 -2\n0 -2 1 1 0 2 3\n2 0 0 -1 1 -3 1\n-2 1 3 0 2 0 -1\n1 1 -2 2 0 1 0\n",
    );
    let out = pdet(&["--format", "json", "cauchy-binet", &f, &g], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "pass"));
}

#[test]
fn charpoly_is_a_subset_of_pdet() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "a.txt", "0 4 4\n4 0 3\n4 3 6\n");
    let out = pdet(&["--format", "json", "charpoly", &file], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    let coeffs: Vec<&str> = v["results"]["char_poly"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "41", "6", "-1"]);
    assert!(v["results"].get("pseudo_det").is_none());
}

#[test]
fn cauchy_binet_verdicts_pass() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "1 4\n2 5\n3 6\n");
    let g = write(dir.path(), "g.txt", "1 0\n1 1\n1 0\n");
    let out = pdet(&["--format", "json", "cauchy-binet", &f, &g], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert!(!verdicts.is_empty());
    assert!(verdicts.iter().all(|x| x["status"] == "pass"));
    let duality = verdicts.iter().find(|x| x["name"] == "duality").unwrap();
    assert_eq!(duality["lhs"], "11");
    assert_eq!(duality["rhs"], "11");
}

#[test]
fn cauchy_binet_budget_skips() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "1 2\n3 4\n5 6\n");
    let g = write(dir.path(), "g.txt", "1 0\n0 1\n1 1\n");
    let out = pdet(
        &["--format", "json", "--budget", "1", "cauchy-binet", &f, &g],
        dir.path(),
    );
    assert!(out.status.success(), "skipped verdicts still exit 0");
    let v = json_of(&out);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x["status"] == "skipped"));
}

#[test]
fn shape_mismatch_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "1 2\n3 4\n");
    let g = write(dir.path(), "g.txt", "1 2 3\n4 5 6\n");
    let out = pdet(&["cauchy-binet", &f, &g], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("2x2") && stderr.contains("2x3"), "{stderr}");
}

#[test]
fn exterior_order_one_echoes_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "f.txt", "1/2 2\n3 4\n5 -6\n");
    let out = pdet(&["--format", "json", "exterior", &f, "1"], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    let rows: Vec<&str> = v["results"]["matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r.as_str().unwrap())
        .collect();
    assert_eq!(rows, ["1/2 2", "3 4", "5 -6"]);
    assert_eq!(v["results"]["shape"], "3x2");
}

#[test]
fn graph_trees_and_forests() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.txt", "4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = pdet(&["--format", "json", "graph", &k4, "trees"], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["spanning_trees"], "16");
    assert_eq!(v["verdicts"][0]["status"], "pass");

    let k3 = write(dir.path(), "k3.txt", "3\n0 1\n0 2\n1 2\n");
    let out = pdet(&["--format", "json", "graph", &k3, "forests"], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["rooted_forests"], "16");
    assert_eq!(v["verdicts"][0]["status"], "pass");
}

#[test]
fn graph_trees_rejects_disconnected() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "4\n0 1\n2 3\n");
    let out = pdet(&["graph", &g, "trees"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("kernel"), "{stderr}");
}

#[test]
fn graph_betti_and_dirac() {
    let dir = tempfile::tempdir().unwrap();
    let c4 = write(dir.path(), "c4.txt", "4\n0 1\n1 2\n2 3\n0 3\n");
    let out = pdet(&["--format", "json", "graph", &c4, "betti"], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["betti"][0], 1);
    assert_eq!(v["results"]["betti"][1], 1);

    let out = pdet(&["--format", "json", "graph", &c4, "dirac"], dir.path());
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["dirac_pseudo_det"], "-16");
    assert_eq!(v["results"]["form_laplacian_pseudo_det"], "256");
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "pass"));
}

#[test]
fn graph_simplexgraph() {
    let dir = tempfile::tempdir().unwrap();
    let k2 = write(dir.path(), "k2.txt", "2\n0 1\n");
    let out = pdet(
        &["--format", "json", "graph", &k2, "simplexgraph"],
        dir.path(),
    );
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["results"]["simplex_count"], 3);
    assert_eq!(v["results"]["edge_list"], "3\n0 2\n1 2\n");
}

#[test]
fn parse_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "1 2\n3\n");
    let out = pdet(&["pdet", &bad], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let loopy = write(dir.path(), "loop.txt", "2\n0 0\n");
    let out = pdet(&["graph", &loopy, "forests"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("loop"));
}

#[test]
fn selftest_zero_budget_skips_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = pdet(
        &["--format", "json", "--budget", "0", "selftest"],
        dir.path(),
    );
    assert!(out.status.success());
    let v = json_of(&out);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert!(!verdicts.is_empty());
    assert!(verdicts.iter().all(|x| x["status"] == "skipped"));
}

#[test]
fn selftest_reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "--format",
        "json",
        "--seed",
        "11",
        "--budget",
        "3",
        "selftest",
    ];
    let a = pdet(&args, dir.path());
    let b = pdet(&args, dir.path());
    assert!(a.status.success() && b.status.success());
    let mut va = json_of(&a);
    let mut vb = json_of(&b);
    // wall-clock duration is the only field allowed to differ
    va.as_object_mut().unwrap().remove("duration_ms");
    vb.as_object_mut().unwrap().remove("duration_ms");
    assert_eq!(va, vb);
    assert!(va["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "pass"));
}

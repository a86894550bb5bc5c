//! End-to-end tests of the command-line interface, run against the
//! compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn norm3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_norm3"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_catalog_member(dir: &Path, member: &str) -> std::path::PathBuf {
    let out = norm3(&["catalog", member]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let path = dir.join(format!("{member}.json"));
    std::fs::write(&path, v["hoffman"].to_string()).unwrap();
    path
}

fn write_star(dir: &Path, leaves: usize) -> std::path::PathBuf {
    let slim: Vec<usize> = (0..=leaves).collect();
    let edges: Vec<[usize; 2]> = (1..=leaves).map(|i| [0, i]).collect();
    let v = serde_json::json!({"slim": slim, "fat": [], "edges": edges});
    let path = dir.join(format!("star{leaves}.json"));
    std::fs::write(&path, v.to_string()).unwrap();
    path
}

#[test]
fn analyze_c3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_catalog_member(dir.path(), "c3");
    let out = norm3(&["analyze", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lambda_vs_minus3"], "equal");
    assert_eq!(v["factors"], 1);
    assert_eq!(v["tree_like"], true);
}

#[test]
fn analyze_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.json");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(code(&norm3(&["analyze", empty.to_str().unwrap()])), 2);
    assert_eq!(code(&norm3(&["analyze", "/nonexistent/x.json"])), 2);
}

#[test]
fn analyze_counts_factors_of_direct_sum() {
    // two single-slim parts hanging off a shared fat vertex: decomposable
    let dir = tempfile::tempdir().unwrap();
    let v = serde_json::json!({"slim": [0, 1], "fat": [2], "edges": [[0, 2], [1, 2], [0, 1]]});
    let path = dir.path().join("sum.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let out = norm3(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["factors"], 2);
}

#[test]
fn solve_c5_found_in_dimension_four() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_catalog_member(dir.path(), "c5");
    let out = norm3(&["solve", input.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "found");
    assert_eq!(v["representation"]["dim"], 4);
}

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // spectral radius above 3: proven not representable
    let k110 = write_star(dir.path(), 10);
    let out = norm3(&["solve", k110.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    // the four-leaf star is representable (in dimension eight)
    let k14 = write_star(dir.path(), 4);
    let out = norm3(&["solve", k14.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    // tiny node budget: inconclusive
    let c5 = write_catalog_member(dir.path(), "c5");
    let out = norm3(&["solve", c5.to_str().unwrap(), "--budget", "2"]);
    assert_eq!(code(&out), 4);
    // unsupported norm
    let out = norm3(&["solve", c5.to_str().unwrap(), "--t", "4"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn catalog_members_and_psi() {
    let out = norm3(&["catalog", "c2", "--psi"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["hoffman"]["slim"].as_array().unwrap().len(), 2);
    assert_eq!(v["psi"]["dim"], 1);
    for member in ["h3", "fat-star3", "f-prime3"] {
        assert_eq!(code(&norm3(&["catalog", member])), 0);
    }
    assert_eq!(code(&norm3(&["catalog", "nonsense"])), 2);
}

#[test]
fn trees_census_csv_and_json() {
    let out = norm3(&["trees", "--max-n", "5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "code,n,lambda_cmp,representable,dim,witness-file");
    assert_eq!(lines.len(), 9); // header + the 8 trees on <= 5 vertices
    // all trees this small are representable
    assert!(lines[1..].iter().all(|l| l.contains(",greater,yes,")));

    let out = norm3(&["trees", "--max-n", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn trees_witness_files() {
    let dir = tempfile::tempdir().unwrap();
    let wdir = dir.path().join("w");
    let out = norm3(&[
        "trees",
        "--max-n",
        "3",
        "--witness-dir",
        wdir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_dir(&wdir).unwrap().count(), 3);
}

#[test]
fn seedlings_counts() {
    for (base, expected) in [("e6", 7), ("e7", 18), ("e8", 50)] {
        let out = norm3(&["seedlings", "--base", base]);
        assert_eq!(code(&out), 0);
        let text = stdout(&out);
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), expected.to_string());
        assert_eq!(lines.count(), expected);
    }
    assert_eq!(code(&norm3(&["seedlings", "--base", "a3"])), 2);
}

#[test]
fn verify_main_theorem_small() {
    let out = norm3(&["verify", "main-theorem", "--max-n", "8"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("-> ok"));
}

#[test]
fn verify_properties_deterministic() {
    let a = norm3(&["verify", "properties", "--seed", "5", "--count", "40"]);
    let b = norm3(&["verify", "properties", "--seed", "5", "--count", "40"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn export_dot_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let c2 = write_catalog_member(dir.path(), "c2");
    let out = norm3(&["export", c2.to_str().unwrap(), "--format", "dot"]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert_eq!(dot.matches("shape=circle").count(), 2);
    assert_eq!(dot.matches("shape=square").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 4);

    // canonical JSON round-trip is byte-stable
    let out = norm3(&["export", c2.to_str().unwrap(), "--format", "json"]);
    let first = stdout(&out);
    let back = dir.path().join("back.json");
    std::fs::write(&back, first.trim()).unwrap();
    let out2 = norm3(&["export", back.to_str().unwrap(), "--format", "json"]);
    assert_eq!(first, stdout(&out2));

    assert_eq!(
        code(&norm3(&["export", c2.to_str().unwrap(), "--format", "xml"])),
        2
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&norm3(&["no-such-command"])), 2);
    assert_eq!(code(&norm3(&["trees"])), 2); // missing --max-n
    assert_eq!(code(&norm3(&["trees", "--max-n", "0"])), 2);
}

//! Black-box tests of the `polychrome` binary: exit codes, file formats,
//! and byte-for-byte determinism.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polychrome"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_is_deterministic_byte_for_byte() {
    let a = run(&["gen", "--kind", "uniform-random", "--n", "20", "--seed", "42"]);
    let b = run(&["gen", "--kind", "uniform-random", "--n", "20", "--seed", "42"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).lines().filter(|l| !l.starts_with('#') && !l.is_empty()).count() == 20);

    let c = run(&["gen", "--kind", "uniform-random", "--n", "20", "--seed", "43"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn gen_rejects_unknown_kind() {
    let out = run(&["gen", "--kind", "hexagonal", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_emits_csv_with_header() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let out = bin()
        .args(["gen", "--kind", "grid", "--n", "9", "--seed", "0", "--out", path_str(&inst)])
        .output()
        .unwrap();
    assert!(out.status.success());

    let out = run(&["enumerate", "--input", path_str(&inst)]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,s,size,members"));
    assert!(lines.count() > 9, "expected more ranges than points");
}

#[test]
fn color_verify_empirical_roundtrip() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let coloring = dir.path().join("coloring.json");
    assert!(run(&["gen", "--kind", "uniform-random", "--n", "18", "--seed", "7", "--out", path_str(&inst)])
        .status
        .success());
    assert!(run(&[
        "color", "--input", path_str(&inst), "--k", "2", "--strategy", "exact",
        "--seed", "1", "--out", path_str(&coloring),
    ])
    .status
    .success());

    let emp = run(&["empirical", "--input", path_str(&inst), "--coloring", path_str(&coloring)]);
    assert!(emp.status.success());
    let t: usize = stdout(&emp).trim().parse().unwrap();
    assert!(t >= 2 && t <= 12);

    // verify succeeds at the empirical threshold, fails just below it
    let ok = run(&[
        "verify", "--input", path_str(&inst), "--coloring", path_str(&coloring),
        "--threshold", &t.to_string(),
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let bad = run(&[
        "verify", "--input", path_str(&inst), "--coloring", path_str(&coloring),
        "--threshold", &(t - 1).to_string(),
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("violation:"));
}

#[test]
fn verify_rejects_mismatched_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let coloring = dir.path().join("coloring.json");
    assert!(run(&["gen", "--kind", "grid", "--n", "10", "--seed", "0", "--out", path_str(&inst)])
        .status
        .success());
    std::fs::write(&coloring, r#"{"k":2,"colors":[0,1,0]}"#).unwrap();
    let out = run(&[
        "verify", "--input", path_str(&inst), "--coloring", path_str(&coloring),
        "--threshold", "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn extract_witness_flow() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    let parent = dir.path().join("parent.json");
    let refined = dir.path().join("refined.json");
    let trace = dir.path().join("trace.json");
    let n = 20;
    assert!(run(&["gen", "--kind", "uniform-random", "--n", "20", "--seed", "3", "--out", path_str(&inst)])
        .status
        .success());
    // parent: single class; refined: split never uses color 1 (broken)
    std::fs::write(&parent, format!(r#"{{"k":1,"colors":[{}]}}"#, vec!["0"; n].join(","))).unwrap();
    std::fs::write(&refined, format!(r#"{{"k":2,"colors":[{}]}}"#, vec!["0"; n].join(","))).unwrap();

    let out = run(&[
        "extract-witness", "--input", path_str(&inst), "--parent", path_str(&parent),
        "--coloring", path_str(&refined), "--c", "2", "--t", "2", "--out", path_str(&trace),
    ]);
    assert_eq!(out.status.code(), Some(1), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let doc = std::fs::read_to_string(&trace).unwrap();
    assert!(doc.contains("\"kind\""));
    assert!(doc.contains("\"derived\""));

    // a sound refined coloring has nothing to extract
    let good = dir.path().join("good.json");
    assert!(run(&[
        "color", "--input", path_str(&inst), "--k", "2", "--strategy", "exact",
        "--seed", "0", "--out", path_str(&good),
    ])
    .status
    .success());
    let out = run(&[
        "extract-witness", "--input", path_str(&inst), "--parent", path_str(&parent),
        "--coloring", path_str(&good), "--c", "12", "--t", "20",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("nothing to extract"));
}

#[test]
fn search_p2_reports_best_threshold() {
    let out = run(&["search-p2", "--n-max", "8", "--budget", "20", "--seed", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("best optimal 2-coloring threshold:"));
}

#[test]
fn experiment_runs_config_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("exp.toml");
    std::fs::write(
        &config,
        r#"
[[runs]]
generator = "uniform-random"
n = 14
k = 2
strategy = "exact"
seeds = [0, 1]

[[runs]]
generator = "grid"
n = 16
k = 4
strategy = "greedy-sweep"
seeds = [5]
"#,
    )
    .unwrap();
    let a = run(&["experiment", "--config", path_str(&config), "--jobs", "2"]);
    assert!(a.status.success());
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("generator,n,k,strategy,seed,empirical,theoretical,status"));
    assert_eq!(lines.count(), 3);

    let b = run(&["experiment", "--config", path_str(&config), "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout, "report must not depend on job count");
}

#[test]
fn render_emits_svg_with_exact_comment() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    assert!(run(&["gen", "--kind", "staircase-adversarial", "--n", "8", "--seed", "0", "--out", path_str(&inst)])
        .status
        .success());
    let out = run(&["render", "--input", path_str(&inst)]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("<svg") || text.starts_with("<?xml"));
    assert!(text.contains("</svg>"));
    assert!(text.contains("exact"), "exact-coordinate comment missing");
}

#[test]
fn triangle_override_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("inst.txt");
    assert!(run(&["gen", "--kind", "uniform-random", "--n", "10", "--seed", "2", "--out", path_str(&inst)])
        .status
        .success());
    let a = run(&["enumerate", "--input", path_str(&inst)]);
    let b = run(&[
        "enumerate", "--input", path_str(&inst), "--triangle", "0,0 3,0 0,3",
    ]);
    assert!(a.status.success() && b.status.success());
    // scaled triangle contains the same points: same memberships, scaled coords
    let count = |o: &Output| stdout(o).lines().count();
    assert_eq!(count(&a), count(&b));

    let bad = run(&["enumerate", "--input", path_str(&inst), "--triangle", "0,0 1,1 2,2"]);
    assert_eq!(bad.status.code(), Some(2), "collinear triangle must be a usage error");
}

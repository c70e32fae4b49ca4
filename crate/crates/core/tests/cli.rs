mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tropj::exact::*;
use tropj::jinv::*;
use tropj::puiseux::*;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn tropj(args: &[&str]) -> Output {
    common::invariants();
    Command::new(env!("CARGO_BIN_EXE_tropj"))
        .args(args)
        .env(CACHE_ENV, common::cache_path())
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn tropicalize_worked_example() {
    let o = tropj(&["tropicalize", path_str(&data("worked_example_heights.json"))]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("cycle length = 5"), "{s}");
    assert!(s.contains("cycle edge lengths: 1 1 1 2"), "{s}");
    let zero = stdout(&tropj(&["tropicalize", path_str(&data("zero_heights.json"))]));
    assert!(zero.contains("no cycle; length = 0"));
    let fold = stdout(&tropj(&["tropicalize", path_str(&data("fold_heights.json"))]));
    assert!(fold.contains("generalized cycle length = "), "{fold}");
}

#[test]
fn tropicalize_outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut runs = Vec::new();
    for k in 0..2 {
        let svg = dir.path().join(format!("curve{k}.svg"));
        let json = dir.path().join(format!("curve{k}.json"));
        let o = tropj(&[
            "tropicalize",
            path_str(&data("worked_example_heights.json")),
            "--svg",
            path_str(&svg),
            "--json",
            path_str(&json),
            "--ascii",
        ]);
        assert!(o.status.success());
        runs.push((std::fs::read(&svg).unwrap(), std::fs::read(&json).unwrap(), o.stdout));
    }
    assert_eq!(runs[0], runs[1]);
    let svg = String::from_utf8(runs[0].0.clone()).unwrap();
    assert!(tropj::tropcurve::svg_is_well_formed(&svg));
    let json: serde_json::Value = serde_json::from_slice(&runs[0].1).unwrap();
    assert!(json.get("vertices").is_some());
    assert!(json.get("heights").is_some());
}

#[test]
fn jval_heights_and_cubics() {
    let s = stdout(&tropj(&["jval", path_str(&data("worked_example_heights.json"))]));
    assert!(s.contains("val_u(A) = 0"), "{s}");
    assert!(s.contains("val_u(Delta) = 5"));
    assert!(s.contains("val_u(j) = -5"));
    let w = stdout(&tropj(&["jval", path_str(&data("weierstrass_cubic.json"))]));
    assert!(w.contains("val(j(f)) = 0"), "{w}");
    assert!(w.contains("lc(j(f)) = -15625/557"));
    let fermat = stdout(&tropj(&["jval", path_str(&data("fermat_cubic.json"))]));
    assert!(fermat.contains("val(j(f)) = inf"), "{fermat}");
}

#[test]
fn exit_codes() {
    assert_eq!(tropj(&["--help"]).status.code(), Some(0));
    assert_eq!(tropj(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(tropj(&["jval", "/nonexistent/heights.json"]).status.code(), Some(1));
    assert_eq!(tropj(&["verify", "--samples", "0"]).status.code(), Some(1));
    assert_eq!(tropj(&["shift-experiment", "--b", "-1"]).status.code(), Some(1));
    assert_eq!(tropj(&["shift-experiment", "--b", "x"]).status.code(), Some(1));
    let nodal = tropj(&["jval", path_str(&data("nodal_cubic.json"))]);
    assert_eq!(nodal.status.code(), Some(2));
    assert!(!nodal.stderr.is_empty());
}

#[test]
fn truncated_input_exits_with_three() {
    common::invariants();
    // The b = 1/3 shift, keeping only a sliver past each leading term: the
    // leading terms cancel in Δ and the truncation hides what comes next.
    let shifted = experiment_cubic()
        .shift_x(&PuiseuxSeries::monomial(int(1), ratio(1, 3)))
        .unwrap();
    let truncated: Vec<PuiseuxSeries> = shifted
        .coefficients()
        .iter()
        .map(|c| if c.is_exact_zero() { c.clone() } else { c.truncated_relative(&ratio(1, 12)) })
        .collect();
    let f = Cubic::new(truncated).unwrap();
    assert_eq!(evaluate_j(&f).unwrap_err(), JinvError::TruncationInsufficient);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("truncated.json");
    std::fs::write(&path, serde_json::to_string(&f.to_json()).unwrap()).unwrap();
    assert_eq!(tropj(&["jval", path_str(&path)]).status.code(), Some(3));
}

#[test]
fn verify_and_rays() {
    let o = tropj(&["verify", "--samples", "20", "--seed", "7", "--pin-example"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("passed, 0 failed"), "{}", stdout(&o));
    let r = tropj(&["rays", "--catalog"]);
    assert!(r.status.success());
    let s = stdout(&r);
    assert!(s.contains("11 rays up to symmetry"));
    assert!(!s.contains("DISAGREE"));
    assert_eq!(s.matches("  agree").count(), 11);
}

#[test]
fn shift_experiment_report() {
    let s = stdout(&tropj(&["shift-experiment", "--b", "1/3"]));
    assert!(s.contains("cycle length = 13/3"), "{s}");
    assert!(s.contains("val_u(j) = -13/3"));
    assert!(s.contains("val(j(f)) = -5"));
    assert!(s.contains("0 (cancels)"));
    let big = stdout(&tropj(&["shift-experiment", "--b", "2"]));
    assert!(big.contains("subdivision unchanged by the shift"), "{big}");
    assert!(big.contains("cycle length = 5"));
}

#[test]
fn build_invariants_writes_a_loadable_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(CACHE_FILE_NAME);
    let o = tropj(&["build-invariants", "--output", path_str(&path)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("Weierstrass certificate: ok"));
    let back = deserialize(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(back.delta, common::invariants().delta);
}

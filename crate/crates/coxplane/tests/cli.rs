use std::path::Path;
use std::process::{Command, Output};

use coxplane::emit::from_json;
use serde_json::Value;

fn coxplane(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxplane")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = coxplane(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn cartan_inverse_as_json() {
    let v: Value = serde_json::from_str(&stdout(&["cartan", "--family", "A", "--rank", "4", "--inverse"])).unwrap();
    assert_eq!(v["matrix"][0], serde_json::json!(["4/5", "3/5", "2/5", "1/5"]));
    assert_eq!(v["matrix"][1][1], "6/5");
}

#[test]
fn cartan_rejects_bad_rank() {
    let out = coxplane(&["cartan", "--rank", "9"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn orbit_lists_weights() {
    let v: Value =
        serde_json::from_str(&stdout(&["orbit", "--diagram", "A4", "--weight", "1,0,0,1", "--basis", "weight"]))
            .unwrap();
    assert_eq!(v.as_array().unwrap().len(), 20);
    let csv = stdout(&["orbit", "--diagram", "A3", "--weight", "1,1,1", "--format", "csv"]);
    assert_eq!(csv.lines().count(), 24);
}

#[test]
fn orbit_in_root_basis() {
    let csv = stdout(&["orbit", "--weight", "1,0,0,0", "--basis", "root", "--format", "csv"]);
    assert!(csv.lines().any(|l| l == "4/5,3/5,2/5,1/5"));
}

#[test]
fn symbolic_orbit_is_sorted_and_complete() {
    let text = stdout(&["orbit", "--symbolic"]);
    assert_eq!(text.lines().count(), 120);
    assert_eq!(text, stdout(&["orbit", "--symbolic"]));
}

#[test]
fn projected_pentagon() {
    let set = from_json(&stdout(&["orbit", "--weight", "1,0,0,0", "--project", "par"])).unwrap();
    assert_eq!(set.len(), 5);
    assert!(set.points.iter().all(|p| (p.fx.hypot(p.fy) - 0.4f64.sqrt()).abs() < 1e-12));
}

#[test]
fn voronoi_projection_csv() {
    let csv = stdout(&["orbit", "--voronoi", "a4-root", "--project", "par", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("x,y"));
    assert_eq!(csv.lines().count(), 31);
}

#[test]
fn project_reads_points() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("points.json");
    std::fs::write(&input, r#"[[0,-1,1,0],["1/2",0,0,0],[0,0,0,0]]"#).unwrap();
    let set = from_json(&stdout(&["project", "--in", input.to_str().unwrap(), "--plane", "perp"])).unwrap();
    assert_eq!(set.len(), 3);
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "[[1,2]]").unwrap();
    assert!(!coxplane(&["project", "--in", bad.to_str().unwrap()]).status.success());
}

#[test]
fn strip_with_windows_and_offset() {
    let root =
        from_json(&stdout(&["strip", "--lattice", "root", "--window", "root-voronoi", "--par-r2", "4/5,6/5"])).unwrap();
    assert_eq!(root.len(), 11);
    assert!(root.metadata.iter().any(|(k, _)| k == "window"));
    let custom =
        stdout(&["strip", "--lattice", "weight", "--window", "custom:2/5,2/5", "--par-r2", "2/5", "--format", "csv"]);
    assert!(custom.lines().count() > 1);
    let shifted =
        stdout(&["strip", "--par-r2", "2,2", "--offset", "-1/7,1/3,0,1/11", "--format", "csv", "--threads", "2"]);
    assert!(shifted.starts_with("x,y\n"));
}

#[test]
fn strip_respects_the_box_cap() {
    let out = coxplane(&["strip", "--par-r2", "10,10", "--max-box", "10"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("10"));
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("limits.toml");
    std::fs::write(&cfg, "[limits]\nmax_box = 10\n").unwrap();
    assert!(!coxplane(&["strip", "--par-r2", "10,10", "--config", cfg.to_str().unwrap()]).status.success());
    assert!(coxplane(&["strip", "--par-r2", "2/5", "--config", cfg.to_str().unwrap(), "--max-box", "1000000"])
        .status
        .success());
}

#[test]
fn strip_rejects_empty_window() {
    assert!(!coxplane(&["strip", "--window", "custom:0", "--par-r2", "1"]).status.success());
}

#[test]
fn slab_counts() {
    assert_eq!(stdout(&["slab", "--amax", "2", "--smax", "2", "--format", "csv"]).lines().count(), 382);
}

#[test]
fn out_flag_writes_files_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested/slab.svg");
    stdout(&["slab", "--amax", "1", "--smax", "1", "--format", "svg", "--out", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg") && svg.contains("<circle"));
}

#[test]
fn config_controls_svg_style() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("style.toml");
    std::fs::write(&cfg, "[svg]\nfill = \"#ff0000\"\n").unwrap();
    let svg = stdout(&["slab", "--amax", "1", "--smax", "0", "--format", "svg", "--config", cfg.to_str().unwrap()]);
    assert!(svg.contains("#ff0000"));
    std::fs::write(&cfg, "[svg]\ncolour = 1\n").unwrap();
    assert!(!coxplane(&["slab", "--amax", "1", "--smax", "0", "--config", cfg.to_str().unwrap()]).status.success());
}

#[test]
fn figure_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    stdout(&["figure", "fig7a", "--out", out]);
    let csv = std::fs::read_to_string(Path::new(out).join("fig7a.csv")).unwrap();
    assert_eq!(csv.lines().count(), 6);
    assert!(Path::new(out).join("fig7a.svg").exists());
}

#[test]
fn verify_single_suite() {
    let text = stdout(&["verify", "--suite", "golden"]);
    assert!(text.lines().all(|l| !l.ends_with("FAIL")));
    assert!(text.contains("golden.examples"));
    assert!(!text.contains("group."));
}

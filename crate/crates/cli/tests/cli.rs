//! Behavior of the command-line surface, driven through the binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn hypoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("hypoly-test-{}-{}", std::process::id(), name));
    p
}

#[test]
fn incircle_pentagon_table() {
    let out = hypoly(&["incircle", "--deg", "90", "90", "90", "90", "90"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("5.306375309525"), "{}", stdout);
    assert!(stdout.contains("0.626869662906"), "{}", stdout);
}

#[test]
fn incircle_accepts_sixty_degree_quadrilateral() {
    // Σ(π−β) = 8π/3 > 2π
    let out = hypoly(&["incircle", "--deg", "60", "60", "60", "60"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn incircle_rejects_inadmissible_angles() {
    // Σ(π−β) = 3π/2 < 2π
    let out = hypoly(&["incircle", "--deg", "90", "90", "90"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("2π"), "{}", stderr);
}

#[test]
fn incircle_radian_flag() {
    let out = hypoly(&[
        "incircle",
        "--rad",
        "1.5707963267948966",
        "1.5707963267948966",
        "1.5707963267948966",
        "1.5707963267948966",
        "1.5707963267948966",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("5.306375309525"));
}

#[test]
fn minimize_triangle_notes_zero_dimensional_manifold() {
    let out = hypoly(&["minimize", "--deg", "40", "50", "60", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("zero-dimensional"), "{}", stdout);
    assert!(stdout.contains("PASS"), "{}", stdout);
}

#[test]
fn minimize_pentagon_json_report() {
    let out = hypoly(&[
        "minimize", "--deg", "90", "90", "90", "90", "90", "--samples", "6", "--seed", "3",
        "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("valid JSON report");
    assert_eq!(report["passed"], serde_json::Value::Bool(true));
    assert!(report["gap_min"].as_f64().unwrap() >= 0.0);
}

#[test]
fn render_from_angles_produces_svg() {
    let svg_path = tmp("pent.svg");
    let out = hypoly(&[
        "render",
        "--angles",
        "90",
        "90",
        "90",
        "90",
        "90",
        "--incircle",
        "--duals-table",
        "--out",
        svg_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("<svg"));
    // 5 edges + 1 incircle polyline
    assert_eq!(svg.matches("<polyline").count(), 6);
    assert!(svg.contains("e1* = ("));
    std::fs::remove_file(&svg_path).ok();
}

#[test]
fn render_with_explicit_lengths_validates_them() {
    let out = hypoly(&[
        "render", "--angles", "90", "90", "90", "90", "90", "--lengths", "1.0", "1.0", "1.0",
        "1.0", "1.0",
    ]);
    assert_eq!(out.status.code(), Some(2), "non-closing lengths are an input error");
    let l = "1.0612750619050357";
    let out = hypoly(&[
        "render", "--angles", "90", "90", "90", "90", "90", "--lengths", l, l, l, l, l,
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn render_rejects_incircle_flag_for_noncritical_polygons() {
    // a valid closed hexagon away from the incircle polygon
    let angles = hypoly::AngleSpec::new(vec![std::f64::consts::PI / 2.0; 5]).unwrap();
    let q = hypoly::Polygon::sample(&angles, 11, 0.3).unwrap();
    let path = tmp("sampled.json");
    std::fs::write(&path, q.to_json_string()).unwrap();
    let out = hypoly(&[
        "render",
        "--input",
        path.to_str().unwrap(),
        "--incircle",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no inscribed circle"), "{}", stderr);
    // without the flag it renders fine
    let out = hypoly(&["render", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_file(&path).ok();
}

#[test]
fn render_validates_options() {
    let out = hypoly(&["render", "--angles", "90", "90", "90", "90", "90", "--width-px", "16"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hypoly(&[
        "render", "--angles", "90", "90", "90", "90", "90", "--samples-per-edge", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_accepts_emitted_polygons_and_rejects_corrupted_ones() {
    let path = tmp("check.json");
    let out = hypoly(&[
        "incircle", "--deg", "72", "81", "99", "63", "--json", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = hypoly(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("valid polygon"));

    // corrupt one vertex coordinate
    let text = std::fs::read_to_string(&path).unwrap();
    let mut value: serde_json::Value = serde_json::from_str(&text).unwrap();
    value["polygon"]["vertices"][1][1] = serde_json::json!(0.5);
    std::fs::write(&path, serde_json::to_string(&value).unwrap()).unwrap();
    let out = hypoly(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let out = hypoly(&["check", "/nonexistent/path.json"]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn malformed_json_is_an_input_error() {
    let path = tmp("garbage.json");
    std::fs::write(&path, "{not json").unwrap();
    let out = hypoly(&["render", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

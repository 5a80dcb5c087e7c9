use std::process::{Command, Output};

use ccm_core::scalar::{format_exact, int, parse_exact, Rational};
use serde_json::{json, Value};
use tempfile::TempDir;

fn ccm_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ccm-lab"))
        .arg("--no-timestamp")
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &TempDir, name: &str, doc: Value) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, doc.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn square(dir: &TempDir) -> String {
    write(dir, "square.json", json!({"type": "polygon", "vertices": [[0, 0], [2, 0], [2, 2], [0, 2]]}))
}

fn octahedron(dir: &TempDir) -> String {
    let faces: Vec<[usize; 3]> = vec![
        [0, 2, 4], [2, 1, 4], [1, 3, 4], [3, 0, 4],
        [2, 0, 5], [1, 2, 5], [3, 1, 5], [0, 3, 5],
    ];
    write(
        dir,
        "octahedron.json",
        json!({
            "type": "polytope",
            "dimension": 3,
            "vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
            "faces": faces,
        }),
    )
}

#[test]
fn square_circumcenter_of_mass() {
    let dir = TempDir::new().unwrap();
    let out = json_of(&ccm_lab(&["--input", &square(&dir), "compute", "ccm"]));
    assert_eq!(out["center"], json!(["1/1", "1/1"]));
    assert_eq!(out["signed_volume"], json!("4/1"));
    // The origin is a vertex, so two cones of its fan are flat.
    let warnings = out["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().contains("degenerate members at faces [0, 3]")));
}

#[test]
fn euler_parameter_one_is_the_centroid() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", json!({"type": "polygon", "vertices": [[0, 0], [4, 0], [1, 3]]}));
    let out = json_of(&ccm_lab(&["--input", &tri, "compute", "euler", "--t", "1"]));
    assert_eq!(out["center"], json!(["5/3", "1/1"]));
    let out = json_of(&ccm_lab(&["--input", &tri, "compute", "cm"]));
    assert_eq!(out["center"], json!(["5/3", "1/1"]));
    let out = json_of(&ccm_lab(&["--input", &tri, "compute", "euler", "--t", "3"]));
    assert_eq!(out["center"], json!(["1/1", "1/1"]));
}

#[test]
fn octahedron_center() {
    let dir = TempDir::new().unwrap();
    let out = json_of(&ccm_lab(&["--input", &octahedron(&dir), "compute", "ccm"]));
    assert_eq!(out["center"], json!(["0/1", "0/1", "0/1"]));
    assert_eq!(out["signed_volume"], json!("4/3"));
}

#[test]
fn clockwise_input_warns_but_agrees() {
    let dir = TempDir::new().unwrap();
    let cw = write(&dir, "cw.json", json!({"type": "polygon", "vertices": [[0, 2], [2, 2], [2, 0], [0, 0]]}));
    let out = json_of(&ccm_lab(&["--input", &cw, "compute", "ccm"]));
    assert_eq!(out["center"], json!(["1/1", "1/1"]));
    assert_eq!(out["signed_volume"], json!("-4/1"));
    assert!(out["warnings"].to_string().contains("clockwise"));
}

#[test]
fn float_backend_emits_numbers() {
    let dir = TempDir::new().unwrap();
    let out = json_of(&ccm_lab(&["--input", &square(&dir), "--backend", "float", "compute", "ccm"]));
    assert_eq!(out["center"][0].as_f64(), Some(1.0));
    assert_eq!(out["backend"], json!("float"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "uniqueness"][..],
        &["--dimension", "3", "--trials", "10", "verify", "actions"],
        &["--trials", "20", "verify", "triangulation"],
        &["--trials", "20", "verify", "archimedes"],
        &["--trials", "20", "--dimension", "3", "verify", "isometry"],
    ] {
        let out = json_of(&ccm_lab(args));
        assert_eq!(out["passed"], json!(true), "{args:?}");
    }
}

#[test]
fn k_alpha_column() {
    let out = json_of(&ccm_lab(&["experiment", "k-alpha", "--h", "1,1/2,1/10"]));
    let phis: Vec<&Value> = out["rows"].as_array().unwrap().iter().map(|r| &r["phi"]).collect();
    assert_eq!(phis, [&json!(["0/1", "0/1"]), &json!(["0/1", "-3/8"]), &json!(["0/1", "-99/200"])]);
}

#[test]
fn degenerate_triangle_report() {
    let out = json_of(&ccm_lab(&["experiment", "degenerate-triangle"]));
    assert_eq!(out["ccm_abc"], json!(["0/1", "0/1"]));
    assert_eq!(out["restores_total_sum"], json!(true));
    assert_ne!(out["discrepancy"], json!(["0/1", "0/1"]));
}

#[test]
fn moment_needs_a_polygon_and_reports_exact_terms() {
    let dir = TempDir::new().unwrap();
    assert_eq!(ccm_lab(&["experiment", "moment"]).status.code(), Some(2));
    let unit = write(&dir, "unit.json", json!({"type": "polygon", "vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}));
    let out = ccm_lab(&["--input", &unit, "experiment", "moment"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(out.status.success());
    assert!(text.contains("\"pi\""), "{text}");
}

#[test]
fn continuous_limit_converges() {
    let out = json_of(&ccm_lab(&["experiment", "continuous-limit", "--samples", "250,500,1000"]));
    let rows = out["rows"].as_array().unwrap();
    let last = rows.last().unwrap();
    assert_eq!(last["samples"], json!(1000));
    assert!(last["gap"].as_f64().unwrap() < 1e-4);
    assert_eq!(out["gap_nonincreasing"], json!(true));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let oct = octahedron(&dir);
    for args in [
        &["--input", oct.as_str(), "compute", "ccm"][..],
        &["--seed", "7", "--trials", "10", "verify", "triangulation"],
        &["--seed", "7", "--trials", "10", "--output", "csv", "verify", "archimedes"],
    ] {
        let a = ccm_lab(args);
        let b = ccm_lab(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn timestamp_is_present_by_default() {
    let out = Command::new(env!("CARGO_BIN_EXE_ccm-lab"))
        .args(["experiment", "k-alpha", "--h", "1"])
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["timestamp"].is_string());
}

#[test]
fn emitted_points_round_trip_as_input() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.json", json!({"type": "polygon", "vertices": [[0, 0], ["7/3", "1/5"], [1, 3]]}));
    let first = json_of(&ccm_lab(&["--input", &tri, "compute", "ccm"]));
    let c: Vec<Rational> = first["center"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| parse_exact(v.as_str().unwrap()).unwrap())
        .collect();
    // A right triangle at the emitted point has its centroid at c + (1, 1).
    let shifted = |dx: i64, dy: i64| json!([format_exact(&(&c[0] + int(dx))), format_exact(&(&c[1] + int(dy)))]);
    let again = write(&dir, "again.json", json!({"type": "polygon", "vertices": [shifted(0, 0), shifted(3, 0), shifted(0, 3)]}));
    let second = json_of(&ccm_lab(&["--input", &again, "compute", "cm"]));
    assert_eq!(second["center"], shifted(1, 1));
}

#[test]
fn csv_output_has_a_header() {
    let dir = TempDir::new().unwrap();
    let out = ccm_lab(&["--input", &square(&dir), "--output", "csv", "compute", "cm"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("which,c1,c2,signed_volume"));
    assert_eq!(lines.next(), Some("cm,1/1,1/1,4/1"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    let bad = bad.to_str().unwrap();
    assert_eq!(ccm_lab(&["--input", bad, "compute", "ccm"]).status.code(), Some(2));
    assert_eq!(ccm_lab(&["--bogus-flag", "verify", "all"]).status.code(), Some(2));
    assert_eq!(ccm_lab(&["--tolerance", "0", "verify", "actions"]).status.code(), Some(2));
    assert_eq!(ccm_lab(&["--trials", "0", "verify", "actions"]).status.code(), Some(2));
    assert_eq!(ccm_lab(&["compute", "ccm", "--input", "/nonexistent/file.json"]).status.code(), Some(2));
    let flat = write(&dir, "flat.json", json!({"type": "polygon", "vertices": [[0, 0], [1, 1], [2, 2]]}));
    assert_eq!(ccm_lab(&["--input", &flat, "compute", "ccm"]).status.code(), Some(3));
    let faces = write(
        &dir,
        "faces.json",
        json!({"type": "polygon", "vertices": [[0, 0], [1, 0], [0, 1]], "faces": [[0, 1]]}),
    );
    assert_eq!(ccm_lab(&["--input", &faces, "compute", "ccm"]).status.code(), Some(2));
}

//! Integration tests driving the built `centroid` binary: exit codes,
//! format equivalence, report consistency and GeoJSON emission.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const QUAD_GEOJSON: &str =
    r#"{"type":"Polygon","coordinates":[[[0,30],[90,30],[90,60],[0,60],[0,30]]]}"#;
const QUAD_WKT: &str = "POLYGON((0 30, 90 30, 90 60, 0 60, 0 30))";

/// (pi/2) (sin 60 deg - sin 30 deg)
const QUAD_AREA: f64 = 0.574_951_359_778_215_1;

fn centroid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

#[test]
fn quadrilateral_text_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let output = centroid(&["--ellipsoid", "unit-sphere", &path]);
    assert!(output.status.success());
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("lon 45.000000000"), "{text}");
    assert!(text.contains("45\u{00b0}00'00.000\" E"), "{text}");
}

#[test]
fn quadrilateral_json_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let output = centroid(&["--ellipsoid", "unit-sphere", "--format", "json", &path]);
    let json = stdout_json(&output);
    let lon = json["centre"]["lon_deg"].as_f64().unwrap();
    let area = json["area"]["m2"].as_f64().unwrap();
    assert!((lon - 45.0).abs() < 1e-7, "lon = {lon}");
    assert!((area - QUAD_AREA).abs() / QUAD_AREA < 1e-6, "area = {area}");
    assert_eq!(json["diagnostics"]["sum_sign"].as_i64(), Some(1));
    assert!(json["ellipsoid"]["inv_f"].is_null());
}

#[test]
fn geojson_and_wkt_inputs_give_bitwise_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let geojson = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let wkt = write_temp(&dir, "quad.wkt", QUAD_WKT);
    let a = centroid(&["--ellipsoid", "hayford", "--format", "json", &geojson]);
    let b = centroid(&["--ellipsoid", "hayford", "--format", "json", &wkt]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout, "reports differ between GeoJSON and WKT input");
}

#[test]
fn text_and_json_numbers_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let text_out = centroid(&["--ellipsoid", "hayford", &path]);
    let json_out = centroid(&["--ellipsoid", "hayford", "--format", "json", &path]);
    let text = String::from_utf8(text_out.stdout).unwrap();
    let json = stdout_json(&json_out);

    // The centre line prints lat/lon with 9 decimals; they must match the
    // JSON values at that precision.
    let centre_line = text.lines().find(|l| l.starts_with("Centre")).unwrap();
    let mut numbers = centre_line
        .split_whitespace()
        .filter_map(|w| w.trim_end_matches('\u{00b0}').parse::<f64>().ok());
    let lat = numbers.next().unwrap();
    let lon = numbers.next().unwrap();
    assert!((lat - json["centre"]["lat_deg"].as_f64().unwrap()).abs() <= 5e-10);
    assert!((lon - json["centre"]["lon_deg"].as_f64().unwrap()).abs() <= 5e-10);
    // DMS strings are rendered from the same values in both modes.
    assert!(text.contains(json["centre"]["lat_dms"].as_str().unwrap()));
    assert!(text.contains(json["centre"]["lon_dms"].as_str().unwrap()));
}

#[test]
fn missing_file_exits_2() {
    let output = centroid(&["missing.geojson"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(!output.stderr.is_empty());
}

#[test]
fn non_polygon_geometry_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(
        &dir,
        "line.geojson",
        r#"{"type":"LineString","coordinates":[[0,0],[1,1]]}"#,
    );
    let output = centroid(&[&path]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("LineString"), "{stderr}");
}

#[test]
fn malformed_json_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "broken.geojson", "{\"type\": \"Polygon\",");
    let output = centroid(&[&path]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn degenerate_polygon_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    // All vertices on one parallel: zero signed area.
    let path = write_temp(
        &dir,
        "flat.geojson",
        r#"{"type":"Polygon","coordinates":[[[0,10],[1,10],[2,10],[0,10]]]}"#,
    );
    let output = centroid(&[&path]);
    assert_eq!(output.status.code(), Some(1));
    let stderr = String::from_utf8(output.stderr).unwrap();
    assert!(stderr.contains("degenerate"), "{stderr}");
}

#[test]
fn bad_lambda0_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let output = centroid(&["--lambda0", "twelve", &path]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_centroid"))
        .args(["--ellipsoid", "unit-sphere", "--format", "json", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(QUAD_WKT.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    let json = stdout_json(&output);
    assert!((json["centre"]["lon_deg"].as_f64().unwrap() - 45.0).abs() < 1e-7);
}

#[test]
fn oracle_block_reports_small_separation() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let output = centroid(&[
        "--ellipsoid",
        "hayford",
        "--oracle",
        "--format",
        "json",
        &path,
    ]);
    let json = stdout_json(&output);
    let oracle = &json["oracle"];
    assert!(!oracle.is_null());
    let rel = oracle["area_delta_rel"].as_f64().unwrap().abs();
    let sep = oracle["centre_separation_m"].as_f64().unwrap();
    assert!(rel < 1e-4, "relative area delta {rel}");
    assert!(sep < 1e-4 * 6_378_388.0, "centre separation {sep} m");
}

#[test]
fn custom_ellipsoid_matches_preset() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let preset = centroid(&["--ellipsoid", "hayford", "--format", "json", &path]);
    let custom = centroid(&["--a", "6378388", "--inv-f", "297", "--format", "json", &path]);
    let a = stdout_json(&preset);
    let b = stdout_json(&custom);
    assert_eq!(a["centre"], b["centre"]);
    assert_eq!(a["area"], b["area"]);
    assert_eq!(b["ellipsoid"]["name"].as_str(), Some("custom"));
}

#[test]
fn emit_geojson_writes_a_feature_collection() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let emitted = dir.path().join("out.geojson");
    let output = centroid(&[
        "--ellipsoid",
        "unit-sphere",
        "--format",
        "json",
        "--emit-geojson",
        emitted.to_str().unwrap(),
        &input,
    ]);
    let report = stdout_json(&output);
    let collection: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&emitted).unwrap()).unwrap();
    assert_eq!(collection["type"].as_str(), Some("FeatureCollection"));
    let features = collection["features"].as_array().unwrap();
    assert_eq!(features.len(), 2);
    assert_eq!(features[0]["geometry"]["type"].as_str(), Some("Polygon"));
    assert_eq!(features[1]["geometry"]["type"].as_str(), Some("Point"));
    let point = features[1]["geometry"]["coordinates"].as_array().unwrap();
    assert_eq!(point[0].as_f64(), report["centre"]["lon_deg"].as_f64());
    assert_eq!(point[1].as_f64(), report["centre"]["lat_deg"].as_f64());
}

#[test]
fn antimeridian_polygon_is_handled() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(
        &dir,
        "fiji.wkt",
        "POLYGON((179.0 -17.0, -179.5 -17.0, -179.5 -16.0, 179.0 -16.0, 179.0 -17.0))",
    );
    let output = centroid(&["--ellipsoid", "wgs84", "--format", "json", &path]);
    let json = stdout_json(&output);
    let lon = json["centre"]["lon_deg"].as_f64().unwrap();
    assert!(lon.abs() > 179.0, "centre longitude {lon} should sit near the antimeridian");
    let lat = json["centre"]["lat_deg"].as_f64().unwrap();
    assert!((-17.0..=-16.0).contains(&lat));
}

#[test]
fn lambda0_choice_hardly_moves_the_centre() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(&dir, "quad.geojson", QUAD_GEOJSON);
    let auto = stdout_json(&centroid(&["--format", "json", &path]));
    let fixed = stdout_json(&centroid(&["--lambda0", "25", "--format", "json", &path]));
    let d_lat = (auto["centre"]["lat_deg"].as_f64().unwrap()
        - fixed["centre"]["lat_deg"].as_f64().unwrap())
    .abs();
    let d_lon = (auto["centre"]["lon_deg"].as_f64().unwrap()
        - fixed["centre"]["lon_deg"].as_f64().unwrap())
    .abs();
    // 1e-3 * max_dphi rad, in degrees, is ~5.7e-5 deg; stay well below.
    assert!(d_lat < 6e-5 && d_lon < 6e-5, "lambda0 moved the centre by ({d_lon}, {d_lat}) deg");
}

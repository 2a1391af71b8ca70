//! Report assembly and rendering: decimal degrees plus
//! degrees-minutes-seconds, areas in m^2 and km^2, diagnostics, and the
//! optional oracle comparison block. The JSON form serializes the same
//! struct the text form prints, so both modes report identical values.

use serde::Serialize;
use spheroid_centroid::{
    geodetic_to_cartesian, CentroidResult, Ellipsoid, GeodeticCoord,
};

#[derive(Debug, Serialize)]
pub struct Report {
    pub ellipsoid: EllipsoidBlock,
    pub centre: CentreBlock,
    pub g_xyz_m: XyzBlock,
    pub area: AreaBlock,
    pub diagnostics: DiagnosticsBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleBlock>,
}

#[derive(Debug, Serialize)]
pub struct EllipsoidBlock {
    pub name: String,
    pub a_m: f64,
    /// `None` for a sphere (infinite inverse flattening).
    pub inv_f: Option<f64>,
    pub e2: f64,
}

#[derive(Debug, Serialize)]
pub struct CentreBlock {
    pub lon_deg: f64,
    pub lat_deg: f64,
    pub lon_dms: String,
    pub lat_dms: String,
}

#[derive(Debug, Serialize)]
pub struct XyzBlock {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

#[derive(Debug, Serialize)]
pub struct AreaBlock {
    pub m2: f64,
    pub km2: f64,
}

#[derive(Debug, Serialize)]
pub struct DiagnosticsBlock {
    pub strips: usize,
    pub sum_sign: i8,
    pub lambda0_deg: Option<f64>,
    pub densified: bool,
    pub input_vertices: usize,
    pub processed_vertices: usize,
}

#[derive(Debug, Serialize)]
pub struct OracleBlock {
    pub centre: CentreBlock,
    pub area_m2: f64,
    pub area_delta_m2: f64,
    pub area_delta_rel: f64,
    pub centre_separation_m: f64,
    pub rows: usize,
}

/// Renders a longitude or latitude as `D°MM'SS.mmm" H`. Seconds carry
/// three decimals so the string round-trips to decimal degrees within
/// 0.005 arc seconds.
pub fn format_dms(value_deg: f64, positive: char, negative: char) -> String {
    let hemisphere = if value_deg < 0.0 { negative } else { positive };
    let total_mas = (value_deg.abs() * 3_600_000.0).round() as u64;
    let degrees = total_mas / 3_600_000;
    let minutes = (total_mas % 3_600_000) / 60_000;
    let mas = total_mas % 60_000;
    format!(
        "{degrees}\u{00b0}{minutes:02}'{:02}.{:03}\" {hemisphere}",
        mas / 1000,
        mas % 1000
    )
}

fn centre_block(centre: GeodeticCoord) -> CentreBlock {
    let lon_deg = centre.lon.to_degrees();
    let lat_deg = centre.lat.to_degrees();
    CentreBlock {
        lon_deg,
        lat_deg,
        lon_dms: format_dms(lon_deg, 'E', 'W'),
        lat_dms: format_dms(lat_deg, 'N', 'S'),
    }
}

pub fn build_report(
    ellipsoid_name: &str,
    ell: &Ellipsoid,
    result: &CentroidResult,
    oracle: Option<&CentroidResult>,
) -> Report {
    let oracle_block = oracle.map(|o| {
        let separation = geodetic_to_cartesian(ell, result.centre)
            .distance(geodetic_to_cartesian(ell, o.centre));
        OracleBlock {
            centre: centre_block(o.centre),
            area_m2: o.area,
            area_delta_m2: o.area - result.area,
            area_delta_rel: (o.area - result.area) / o.area,
            centre_separation_m: separation,
            rows: o.diagnostics.strip_count,
        }
    });
    Report {
        ellipsoid: EllipsoidBlock {
            name: ellipsoid_name.to_string(),
            a_m: ell.a(),
            inv_f: if ell.flattening() == 0.0 { None } else { Some(1.0 / ell.flattening()) },
            e2: ell.e2(),
        },
        centre: centre_block(result.centre),
        g_xyz_m: XyzBlock { x: result.g_xyz.x, y: result.g_xyz.y, z: result.g_xyz.z },
        area: AreaBlock { m2: result.area, km2: result.area / 1e6 },
        diagnostics: DiagnosticsBlock {
            strips: result.diagnostics.strip_count,
            sum_sign: result.diagnostics.sum_sign,
            lambda0_deg: result.diagnostics.lambda0.map(f64::to_degrees),
            densified: result.diagnostics.densified,
            input_vertices: result.diagnostics.input_vertices,
            processed_vertices: result.diagnostics.processed_vertices,
        },
        oracle: oracle_block,
    }
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let e = &report.ellipsoid;
    let inv_f = e
        .inv_f
        .map(|v| format!("{v}"))
        .unwrap_or_else(|| "inf (sphere)".to_string());
    out.push_str(&format!(
        "Ellipsoid   {} (a = {} m, 1/f = {}, e2 = {:.12})\n",
        e.name, e.a_m, inv_f, e.e2
    ));
    out.push_str(&format!(
        "Centre      lat {:.9}\u{00b0}  lon {:.9}\u{00b0}\n",
        report.centre.lat_deg, report.centre.lon_deg
    ));
    out.push_str(&format!(
        "            {}  {}\n",
        report.centre.lat_dms, report.centre.lon_dms
    ));
    out.push_str(&format!(
        "G (m)       x {:.6}  y {:.6}  z {:.6}\n",
        report.g_xyz_m.x, report.g_xyz_m.y, report.g_xyz_m.z
    ));
    out.push_str(&format!(
        "Area        {:.9e} m2  ({:.9e} km2)\n",
        report.area.m2, report.area.km2
    ));
    let d = &report.diagnostics;
    let lambda0 = d
        .lambda0_deg
        .map(|v| format!("{v:.9}\u{00b0}"))
        .unwrap_or_else(|| "n/a".to_string());
    out.push_str(&format!(
        "Diagnostics {} strips, sum sign {}, lambda0 {}, densified {}, vertices {} -> {}\n",
        d.strips,
        if d.sum_sign >= 0 { "+" } else { "-" },
        lambda0,
        if d.densified { "yes" } else { "no" },
        d.input_vertices,
        d.processed_vertices
    ));
    if let Some(o) = &report.oracle {
        out.push_str(&format!(
            "Oracle      lat {:.9}\u{00b0}  lon {:.9}\u{00b0}  ({}  {})\n",
            o.centre.lat_deg, o.centre.lon_deg, o.centre.lat_dms, o.centre.lon_dms
        ));
        out.push_str(&format!(
            "            area {:.9e} m2, delta {:.3e} m2 ({:.3e} relative), centre separation {:.3e} m, {} rows\n",
            o.area_m2, o.area_delta_m2, o.area_delta_rel, o.centre_separation_m, o.rows
        ));
    }
    out
}

pub fn render_json(report: &Report) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

//! CLI orchestration: argument parsing, pipeline wiring, exit codes.
//!
//! Exit codes: 0 on success, 1 when the computation degenerates (zero
//! signed area, centre on the rotation axis, diverged projection), 2 for
//! input, parameter and I/O errors.

use std::io::Read;
use std::path::PathBuf;

use clap::Parser;
use spheroid_centroid::{
    oracle_centroid, polygon_centroid, CentroidConfig, Ellipsoid, Error as CoreError, GridSpec,
    RingRole,
};

use crate::ingest::{self, ParsedInput};
use crate::report::{build_report, render_json, render_text};

/// Default densification bound, radians.
const DEFAULT_MAX_STEP_RAD: f64 = 1e-3;
/// Default oracle grid step, radians.
const DEFAULT_GRID_STEP_RAD: f64 = 5e-4;

/// Area and centre of gravity of polygons on an oblate spheroid.
///
/// Reads a polygon boundary (GeoJSON Polygon/MultiPolygon or WKT
/// POLYGON/MULTIPOLYGON, decimal degrees, longitude first), decomposes it
/// into narrow signed strips on the chosen reference ellipsoid, and
/// reports the surface area and the conventional centre of gravity, both
/// in space and back-projected onto the spheroid.
#[derive(Debug, Parser)]
#[command(name = "centroid", version)]
pub struct Cli {
    /// Input file; use '-' to read standard input.
    pub input: String,

    /// Reference ellipsoid preset.
    #[arg(long, value_parser = ["hayford", "wgs84", "unit-sphere"], default_value = "hayford")]
    pub ellipsoid: String,

    /// Custom equatorial semi-axis in metres (overrides --ellipsoid).
    #[arg(long, conflicts_with = "ellipsoid")]
    pub a: Option<f64>,

    /// Custom inverse flattening 1/f; omit with --a for a sphere.
    #[arg(long, requires = "a")]
    pub inv_f: Option<f64>,

    /// Reference longitude in degrees, or 'auto' (vertex mean).
    #[arg(long, default_value = "auto", allow_hyphen_values = true)]
    pub lambda0: String,

    /// Densification bound on latitude steps, degrees
    /// [default: 1e-3 rad ~ 0.0573].
    #[arg(long)]
    pub max_dphi: Option<f64>,

    /// Densification bound on longitude steps, degrees
    /// [default: 1e-3 rad ~ 0.0573].
    #[arg(long)]
    pub max_dlambda: Option<f64>,

    /// Cross-check the result with the brute-force surface integrator.
    #[arg(long)]
    pub oracle: bool,

    /// Oracle grid step in degrees [default: 5e-4 rad ~ 0.0286].
    #[arg(long, requires = "oracle")]
    pub grid_step: Option<f64>,

    /// Output format.
    #[arg(long, value_parser = ["text", "json"], default_value = "text")]
    pub format: String,

    /// Write a GeoJSON FeatureCollection (input polygon + computed centre)
    /// to this path.
    #[arg(long, value_name = "PATH")]
    pub emit_geojson: Option<PathBuf>,
}

#[derive(Debug)]
pub enum AppError {
    /// Input, parameter or I/O problem: exit code 2.
    Input(String),
    /// The computation itself degenerated: exit code 1.
    Computation(String),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Input(_) => 2,
            AppError::Computation(_) => 1,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Input(m) | AppError::Computation(m) => f.write_str(m),
        }
    }
}

fn core_error(e: CoreError) -> AppError {
    match e {
        CoreError::DegeneratePolygon { .. }
        | CoreError::NearAxis { .. }
        | CoreError::ProjectionDiverged { .. } => AppError::Computation(e.to_string()),
        _ => AppError::Input(e.to_string()),
    }
}

/// Runs the pipeline and returns the rendered report for standard output.
pub fn run(cli: &Cli) -> Result<String, AppError> {
    let (ellipsoid_name, ell) = resolve_ellipsoid(cli)?;
    let parsed = read_input(cli)?;
    let cfg = resolve_config(cli)?;

    let result = polygon_centroid(&ell, &parsed.polygon, &cfg).map_err(core_error)?;

    let oracle = if cli.oracle {
        let step = match cli.grid_step {
            Some(deg) if deg > 0.0 => deg.to_radians(),
            Some(deg) => {
                return Err(AppError::Input(format!("--grid-step must be positive, got {deg}")))
            }
            None => DEFAULT_GRID_STEP_RAD,
        };
        let grid = GridSpec::cover_square(&parsed.polygon, step).map_err(core_error)?;
        Some(oracle_centroid(&ell, &parsed.polygon, &grid).map_err(core_error)?)
    } else {
        None
    };

    let report = build_report(&ellipsoid_name, &ell, &result, oracle.as_ref());

    if let Some(path) = &cli.emit_geojson {
        let feature_collection = feature_collection(&parsed, &report);
        std::fs::write(path, serde_json::to_string_pretty(&feature_collection).unwrap())
            .map_err(|e| AppError::Input(format!("cannot write {}: {e}", path.display())))?;
    }

    Ok(match cli.format.as_str() {
        "json" => render_json(&report),
        _ => render_text(&report),
    })
}

fn resolve_ellipsoid(cli: &Cli) -> Result<(String, Ellipsoid), AppError> {
    if let Some(a) = cli.a {
        let ell = Ellipsoid::new(a, cli.inv_f.unwrap_or(f64::INFINITY))
            .map_err(|e| AppError::Input(e.to_string()))?;
        return Ok(("custom".to_string(), ell));
    }
    let ell = Ellipsoid::from_name(&cli.ellipsoid)
        .ok_or_else(|| AppError::Input(format!("unknown ellipsoid preset: {}", cli.ellipsoid)))?;
    Ok((cli.ellipsoid.clone(), ell))
}

fn read_input(cli: &Cli) -> Result<ParsedInput, AppError> {
    let (bytes, hint) = if cli.input == "-" {
        let mut buffer = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buffer)
            .map_err(|e| AppError::Input(format!("cannot read standard input: {e}")))?;
        (buffer, None)
    } else {
        let bytes = std::fs::read(&cli.input)
            .map_err(|e| AppError::Input(format!("cannot read {}: {e}", cli.input)))?;
        (bytes, ingest::hint_from_path(&cli.input))
    };
    ingest::parse_polygon(&bytes, hint).map_err(|e| match e {
        ingest::IngestError::Polygon(core) => core_error(core),
        other => AppError::Input(other.to_string()),
    })
}

fn resolve_config(cli: &Cli) -> Result<CentroidConfig, AppError> {
    let lambda0 = match cli.lambda0.as_str() {
        "auto" => None,
        text => Some(
            text.parse::<f64>()
                .map_err(|_| {
                    AppError::Input(format!("--lambda0 must be 'auto' or degrees, got '{text}'"))
                })?
                .to_radians(),
        ),
    };
    let step = |value: Option<f64>, flag: &str| -> Result<f64, AppError> {
        match value {
            Some(deg) if deg > 0.0 && deg.is_finite() => Ok(deg.to_radians()),
            Some(deg) => Err(AppError::Input(format!("{flag} must be positive, got {deg}"))),
            None => Ok(DEFAULT_MAX_STEP_RAD),
        }
    };
    Ok(CentroidConfig {
        lambda0,
        max_dphi: step(cli.max_dphi, "--max-dphi")?,
        max_dlambda: step(cli.max_dlambda, "--max-dlambda")?,
        ..CentroidConfig::default()
    })
}

/// FeatureCollection with the input polygon (as parsed, degrees) and the
/// computed centre point, for external map display.
fn feature_collection(parsed: &ParsedInput, report: &crate::report::Report) -> serde_json::Value {
    // Group rings back into polygons: each outer ring starts a part.
    let mut parts: Vec<Vec<serde_json::Value>> = Vec::new();
    for (ring, role) in &parsed.rings_deg {
        let mut closed: Vec<[f64; 2]> = ring.clone();
        if closed.first() != closed.last() {
            if let Some(&first) = closed.first() {
                closed.push(first);
            }
        }
        let ring_json = serde_json::json!(closed);
        match role {
            RingRole::Outer => parts.push(vec![ring_json]),
            RingRole::Hole => {
                if let Some(last) = parts.last_mut() {
                    last.push(ring_json);
                }
            }
        }
    }
    let geometry = if parts.len() == 1 {
        serde_json::json!({ "type": "Polygon", "coordinates": parts[0] })
    } else {
        serde_json::json!({ "type": "MultiPolygon", "coordinates": parts })
    };
    serde_json::json!({
        "type": "FeatureCollection",
        "features": [
            {
                "type": "Feature",
                "properties": { "role": "input" },
                "geometry": geometry,
            },
            {
                "type": "Feature",
                "properties": {
                    "role": "centre",
                    "area_m2": report.area.m2,
                    "lat_dms": report.centre.lat_dms,
                    "lon_dms": report.centre.lon_dms,
                },
                "geometry": {
                    "type": "Point",
                    "coordinates": [report.centre.lon_deg, report.centre.lat_deg],
                },
            }
        ]
    })
}

//! Independent brute-force verifier: integrates area and centroid over a
//! dense sweep of latitude rows with even-odd point-in-polygon crossings,
//! sharing no code path with the engine's strip formulae.
//!
//! Each row is a narrow latitude band. The polygon's cross
//! section at the row's centre latitude is recovered from the edge
//! crossings of the scan line (the same even-odd rule as
//! [`point_in_polygon`], applied to a whole row at once); within the
//! cross-section intervals the area element `N(phi) rho(phi) cos(phi)` and
//! the Cartesian moments integrate in longitude in closed form. Bands are
//! split at vertex latitudes so every row's integrand is smooth, which
//! makes the midpoint rule in latitude genuinely second order in the grid
//! step. This is deliberately a different derivation route than the
//! engine's first-order strips, which strengthens the cross-check.
//!
//! Rows are independent; with the `parallel` feature they are evaluated on
//! rayon and reduced in row order, bit-identical to the serial path.

use crate::ellipsoid::Ellipsoid;
use crate::engine::{CentroidResult, Diagnostics};
use crate::error::{Error, Result};
use crate::geodesy::{project_to_ellipsoid, Cartesian3, GeodeticCoord};
use crate::polygon::EllipsoidalPolygon;
use crate::sum::NeumaierSum;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Minimum number of (equivalent) interior grid cells for a meaningful
/// quadrature.
pub const MIN_INTERIOR_CELLS: usize = 100;

/// Integration grid: steps in longitude and latitude plus the bounding box
/// of the polygon, padded by one cell on every side.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub d_lambda: f64,
    pub d_phi: f64,
    /// `(lon_min, lon_max, lat_min, lat_max)`, radians.
    pub bbox: (f64, f64, f64, f64),
}

impl GridSpec {
    pub fn new(d_lambda: f64, d_phi: f64, bbox: (f64, f64, f64, f64)) -> Result<Self> {
        if !(d_lambda > 0.0) || !(d_phi > 0.0) || !d_lambda.is_finite() || !d_phi.is_finite() {
            return Err(Error::InvalidPolygon("grid steps must be positive".into()));
        }
        if !(bbox.0 <= bbox.1 && bbox.2 <= bbox.3) {
            return Err(Error::InvalidPolygon("grid bbox is empty".into()));
        }
        Ok(Self { d_lambda, d_phi, bbox })
    }

    /// Grid covering `poly`, with the bounding box padded by one cell.
    pub fn cover(poly: &EllipsoidalPolygon, d_lambda: f64, d_phi: f64) -> Result<Self> {
        let (lon_min, lon_max, lat_min, lat_max) = poly.bbox();
        Self::new(
            d_lambda,
            d_phi,
            (lon_min - d_lambda, lon_max + d_lambda, lat_min - d_phi, lat_max + d_phi),
        )
    }

    /// Square grid with the same step in both directions.
    pub fn cover_square(poly: &EllipsoidalPolygon, step: f64) -> Result<Self> {
        Self::cover(poly, step, step)
    }
}

/// Even-odd ray-casting test on the unwrapped chart. Points within about
/// 1e-12 rad of an edge may report either side (boundary fuzz).
pub fn point_in_polygon(poly: &EllipsoidalPolygon, q: GeodeticCoord) -> bool {
    let mut inside = false;
    for ring in poly.rings() {
        let vertices = ring.vertices();
        let n = vertices.len();
        for i in 0..n {
            if let Some(cross) = crossing_longitude(vertices[i], vertices[(i + 1) % n], q.lat) {
                if cross > q.lon {
                    inside = !inside;
                }
            }
        }
    }
    inside
}

/// Longitude where the edge `(a, b)` crosses the parallel `phi`, if it
/// does. The half-open comparison counts each vertex for exactly one of
/// its edges, so a closed ring always yields an even crossing count.
fn crossing_longitude(a: GeodeticCoord, b: GeodeticCoord, phi: f64) -> Option<f64> {
    if (a.lat > phi) != (b.lat > phi) {
        let t = (phi - a.lat) / (b.lat - a.lat);
        Some(a.lon + t * (b.lon - a.lon))
    } else {
        None
    }
}

/// Brute-force area and centroid of `poly` by the row sweep described in
/// the module docs. Converges with order 2 in `d_phi`; `d_lambda` enters
/// the resolution requirement of at least [`MIN_INTERIOR_CELLS`]
/// equivalent interior cells.
pub fn oracle_centroid(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    grid: &GridSpec,
) -> Result<CentroidResult> {
    run(ell, poly, grid, cfg!(feature = "parallel"))
}

/// [`oracle_centroid`] restricted to the sequential path.
pub fn oracle_centroid_serial(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    grid: &GridSpec,
) -> Result<CentroidResult> {
    run(ell, poly, grid, false)
}

#[derive(Clone, Copy, Default)]
struct RowSums {
    area: f64,
    mx: f64,
    my: f64,
    mz: f64,
    chart: f64,
}

fn run(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    grid: &GridSpec,
    parallel: bool,
) -> Result<CentroidResult> {
    let pb = poly.bbox();
    if pb.0 < grid.bbox.0 || pb.1 > grid.bbox.1 || pb.2 < grid.bbox.2 || pb.3 > grid.bbox.3 {
        return Err(Error::InvalidPolygon(
            "grid bbox does not cover the polygon".into(),
        ));
    }

    let mut edges: Vec<(GeodeticCoord, GeodeticCoord)> = Vec::new();
    let mut lats: Vec<f64> = Vec::new();
    for ring in poly.rings() {
        let vertices = ring.vertices();
        let n = vertices.len();
        for i in 0..n {
            edges.push((vertices[i], vertices[(i + 1) % n]));
            lats.push(vertices[i].lat);
        }
    }
    lats.sort_by(f64::total_cmp);
    lats.dedup();

    // Rows: each band between consecutive vertex latitudes is cut into
    // equal rows no taller than d_phi. Splitting at vertex latitudes keeps
    // the cross-section width linear within every band.
    let mut rows: Vec<(f64, f64)> = Vec::new();
    for pair in lats.windows(2) {
        let (lo, hi) = (pair[0], pair[1]);
        let height = hi - lo;
        if height <= 0.0 {
            continue;
        }
        let count = ((height / grid.d_phi) * (1.0 - 1e-12)).ceil().max(1.0) as usize;
        let h = height / count as f64;
        for j in 0..count {
            rows.push((lo + (j as f64 + 0.5) * h, h));
        }
    }

    let sums = row_sums_all(ell, &edges, &rows, parallel);

    // Deterministic row-ordered reduction.
    let mut area = NeumaierSum::default();
    let mut mx = NeumaierSum::default();
    let mut my = NeumaierSum::default();
    let mut mz = NeumaierSum::default();
    let mut chart = NeumaierSum::default();
    for r in &sums {
        area.add(r.area);
        mx.add(r.mx);
        my.add(r.my);
        mz.add(r.mz);
        chart.add(r.chart);
    }

    let cells = (chart.value() / (grid.d_lambda * grid.d_phi)).floor().max(0.0) as usize;
    if cells < MIN_INTERIOR_CELLS {
        return Err(Error::InsufficientResolution { cells, minimum: MIN_INTERIOR_CELLS });
    }
    let total = area.value();
    let g_xyz = Cartesian3::new(mx.value() / total, my.value() / total, mz.value() / total);
    let centre = project_to_ellipsoid(ell, g_xyz)?;
    Ok(CentroidResult {
        area: total,
        g_xyz,
        centre,
        diagnostics: Diagnostics {
            strip_count: rows.len(),
            sum_sign: 1,
            lambda0: None,
            densified: false,
            input_vertices: poly.vertex_count(),
            processed_vertices: rows.len(),
        },
    })
}

fn row_sums_all(
    ell: &Ellipsoid,
    edges: &[(GeodeticCoord, GeodeticCoord)],
    rows: &[(f64, f64)],
    parallel: bool,
) -> Vec<RowSums> {
    #[cfg(feature = "parallel")]
    if parallel {
        return rows
            .par_iter()
            .map(|&(phi, h)| row_sums(ell, edges, phi, h))
            .collect();
    }
    let _ = parallel;
    rows.iter().map(|&(phi, h)| row_sums(ell, edges, phi, h)).collect()
}

fn row_sums(
    ell: &Ellipsoid,
    edges: &[(GeodeticCoord, GeodeticCoord)],
    phi: f64,
    h: f64,
) -> RowSums {
    let mut crossings: Vec<f64> = edges
        .iter()
        .filter_map(|&(a, b)| crossing_longitude(a, b, phi))
        .collect();
    debug_assert!(crossings.len() % 2 == 0, "odd crossing count at phi = {phi}");
    crossings.sort_by(f64::total_cmp);

    // Inside intervals alternate after sorting: [c0,c1], [c2,c3], ...
    let mut width = 0.0;
    let mut dsin = 0.0;
    let mut dcos = 0.0;
    for pair in crossings.chunks_exact(2) {
        width += pair[1] - pair[0];
        dsin += pair[1].sin() - pair[0].sin();
        dcos += pair[0].cos() - pair[1].cos();
    }
    if width == 0.0 {
        return RowSums::default();
    }

    let (sin_phi, cos_phi) = phi.sin_cos();
    let n = ell.prime_vertical_radius(phi);
    let rho = ell.meridional_radius(phi);
    // Exact ellipsoidal area element density at this latitude.
    let f = n * rho * cos_phi;
    RowSums {
        area: f * width * h,
        mx: n * cos_phi * f * dsin * h,
        my: n * cos_phi * f * dcos * h,
        mz: n * (1.0 - ell.e2()) * sin_phi * f * width * h,
        chart: width * h,
    }
}

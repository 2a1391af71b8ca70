//! Strip decomposition of an ellipsoidal polygon: signed elementary areas
//! and centroids, their compensated accumulation, and the full pipeline
//! from rings to the back-projected centre.
//!
//! For two consecutive boundary vertices with midpoint `M`, the elementary
//! strip runs longitudinally from a fixed reference longitude `lambda0` to
//! `lambda_M` and latitudinally over `phi_{i+1} - phi_i`. To first order it
//! is a circular band of radius `R = N_M cos(phi_M)` whose signed area and
//! centroid are
//!
//! ```text
//! S_i = N_M cos(phi_M) (lambda_M - lambda0) * rho_M (phi_{i+1} - phi_i)
//! X_i = N_M cos(phi_M) (sin lambda_M - sin lambda0) / (lambda_M - lambda0)
//! Y_i = N_M cos(phi_M) (cos lambda0 - cos lambda_M) / (lambda_M - lambda0)
//! Z_i = N_M (1 - e2) sin(phi_M)
//! ```
//!
//! `(X_i, Y_i)` is Crawford's centre of gravity of a circular arc, at
//! distance `R sin(alpha)/alpha` from the axis along the arc bisector with
//! `alpha = (lambda_M - lambda0)/2`. The quotients are evaluated through
//! [`sinc`] and the half-angle identities, so the `lambda_M -> lambda0`
//! limit is finite and exact. Summed around the closed boundary the strips
//! cancel outside the polygon and leave the enclosed area `S = |sum S_i|`
//! and the weighted mean centroid `G = sum S_i G_i / sum S_i`.

use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};
use crate::geodesy::{project_to_ellipsoid, Cartesian3, GeodeticCoord};
use crate::polygon::{EllipsoidalPolygon, RingRole};
use crate::sum::NeumaierSum;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this angle [`sinc`] switches from direct evaluation to its Taylor
/// series.
pub const SINC_SERIES_THRESHOLD: f64 = 1e-6;

/// Tuning knobs for [`polygon_centroid`].
#[derive(Clone, Copy, Debug)]
pub struct CentroidConfig {
    /// Reference longitude, radians. `None` picks the vertex-mean longitude
    /// of the outer rings, which keeps strips short.
    pub lambda0: Option<f64>,
    /// Densification bound on `|phi_{i+1} - phi_i|` per processed segment,
    /// radians.
    pub max_dphi: f64,
    /// Densification bound on `|lambda_{i+1} - lambda_i|`, radians.
    pub max_dlambda: f64,
    /// Minimum `|sum S_i|` (m^2) below which the centroid quotient is
    /// considered degenerate.
    pub degeneracy_floor: f64,
}

impl Default for CentroidConfig {
    fn default() -> Self {
        Self {
            lambda0: None,
            max_dphi: 1e-3,
            max_dlambda: 1e-3,
            degeneracy_floor: 1e-6,
        }
    }
}

/// One elementary strip: signed area (m^2) and centroid (metres).
#[derive(Clone, Copy, Debug)]
pub struct StripContribution {
    pub signed_area: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

/// How a centroid was computed; carried along with every result.
#[derive(Clone, Copy, Debug)]
pub struct Diagnostics {
    /// Number of elementary contributions (strips, or rows for the oracle).
    pub strip_count: usize,
    /// Sign of the accumulated `sum S_i`.
    pub sum_sign: i8,
    /// Reference longitude actually used, radians. `None` for the oracle,
    /// which has no reference longitude.
    pub lambda0: Option<f64>,
    /// Whether densification inserted any vertices.
    pub densified: bool,
    /// Vertices in the input polygon.
    pub input_vertices: usize,
    /// Vertices (or rows) actually processed.
    pub processed_vertices: usize,
}

/// Area, 3-D centre of gravity and its back-projection onto the spheroid.
#[derive(Clone, Copy, Debug)]
pub struct CentroidResult {
    /// Polygon area, m^2 (`|sum S_i|`).
    pub area: f64,
    /// Centre of gravity in space; strictly inside the spheroid for any
    /// proper polygon.
    pub g_xyz: Cartesian3,
    /// Orthogonal projection of `g_xyz` onto the spheroid.
    pub centre: GeodeticCoord,
    pub diagnostics: Diagnostics,
}

/// Midpoint of two consecutive vertices on the unwrapped chart:
/// the component-wise arithmetic mean.
pub fn midpoint(a: GeodeticCoord, b: GeodeticCoord) -> GeodeticCoord {
    GeodeticCoord::new(0.5 * (a.lon + b.lon), 0.5 * (a.lat + b.lat))
}

/// `sin(theta)/theta` with the removable singularity filled in.
///
/// Below [`SINC_SERIES_THRESHOLD`] the Taylor series
/// `1 - theta^2/6 + theta^4/120` is used. Up to 1e-2 rad the quotient is
/// evaluated through its polynomial, which is exact to rounding there and
/// keeps the two branches bit-identical around the switch; beyond that the
/// quotient is formed directly.
pub fn sinc(theta: f64) -> f64 {
    let t = theta * theta;
    if theta.abs() < SINC_SERIES_THRESHOLD {
        1.0 - t / 6.0 + t * t / 120.0
    } else if theta.abs() < 1e-2 {
        1.0 + t * (-1.0 / 6.0 + t * (1.0 / 120.0 - t / 5040.0))
    } else {
        theta.sin() / theta
    }
}

/// Distance from the centre of a circle of radius `radius` to the centre
/// of gravity of a circular arc subtending `2 * half_angle`:
/// `radius * sin(half_angle) / half_angle` (Crawford). Never exceeds
/// `radius`; equals it only for a degenerate arc.
pub fn arc_centroid_distance(radius: f64, half_angle: f64) -> f64 {
    radius * sinc(half_angle)
}

/// Signed area and centroid of the elementary strip between the boundary
/// segment `(a, b)` and the reference longitude `lambda0`.
///
/// The segment is assumed short (densified); all formulae are evaluated at
/// the arithmetic midpoint. The limit values at `lambda_M == lambda0` are
/// `S_i = 0`, `X_i = N cos(phi_M) cos(lambda0)`,
/// `Y_i = N cos(phi_M) sin(lambda0)`.
pub fn strip_contribution(
    ell: &Ellipsoid,
    a: GeodeticCoord,
    b: GeodeticCoord,
    lambda0: f64,
) -> StripContribution {
    let m = midpoint(a, b);
    let (sin_m, cos_m) = m.lat.sin_cos();
    let n = ell.prime_vertical_radius(m.lat);
    let rho = ell.meridional_radius(m.lat);

    // Arc radius, half-angle and bisector of the strip.
    let radius = n * cos_m;
    let dlam = m.lon - lambda0;
    let half_angle = 0.5 * dlam;
    let bisector = 0.5 * (m.lon + lambda0);
    let d = arc_centroid_distance(radius, half_angle);

    StripContribution {
        signed_area: radius * dlam * rho * (b.lat - a.lat),
        x: d * bisector.cos(),
        y: d * bisector.sin(),
        z: n * (1.0 - ell.e2()) * sin_m,
    }
}

/// Subdivides every segment of a closed ring (closure implied) by linear
/// interpolation into the minimal number of equal pieces satisfying both
/// densification bounds. Original vertices are preserved exactly and the
/// output stays unwrapped.
pub fn densify_ring(ring: &[GeodeticCoord], cfg: &CentroidConfig) -> Vec<GeodeticCoord> {
    let n = ring.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let a = ring[i];
        let b = ring[(i + 1) % n];
        out.push(a);
        let pieces = split_count(b.lat - a.lat, cfg.max_dphi)
            .max(split_count(b.lon - a.lon, cfg.max_dlambda));
        for k in 1..pieces {
            let t = k as f64 / pieces as f64;
            out.push(GeodeticCoord::new(
                a.lon + t * (b.lon - a.lon),
                a.lat + t * (b.lat - a.lat),
            ));
        }
    }
    out
}

fn split_count(delta: f64, bound: f64) -> usize {
    // The 1e-12 relative slack keeps exact multiples (0.1 / 0.01) from
    // rounding up to an extra piece.
    let ratio = (delta.abs() / bound) * (1.0 - 1e-12);
    (ratio.ceil() as usize).max(1)
}

/// Total signed area and area-weighted mean centroid of a strip sequence.
///
/// Summation is Neumaier-compensated and consumes the strips in input
/// order, so the reduction is deterministic. Fails when `|sum S_i|` falls
/// below `degeneracy_floor` (m^2), where the quotient is ill-conditioned.
pub fn accumulate(
    strips: &[StripContribution],
    degeneracy_floor: f64,
) -> Result<(f64, Cartesian3)> {
    let mut s = NeumaierSum::default();
    let mut sx = NeumaierSum::default();
    let mut sy = NeumaierSum::default();
    let mut sz = NeumaierSum::default();
    for strip in strips {
        s.add(strip.signed_area);
        sx.add(strip.signed_area * strip.x);
        sy.add(strip.signed_area * strip.y);
        sz.add(strip.signed_area * strip.z);
    }
    let total = s.value();
    if total.abs() < degeneracy_floor {
        return Err(Error::DegeneratePolygon { sum: total, floor: degeneracy_floor });
    }
    Ok((
        total,
        Cartesian3::new(sx.value() / total, sy.value() / total, sz.value() / total),
    ))
}

/// Full pipeline: normalize ring orientations, densify, evaluate strips,
/// accumulate across all rings in one sum (holes subtract), back-project.
///
/// Outer rings are normalized to contribute positively and holes
/// negatively regardless of input winding, so `area = |sum S_i|` and the
/// centroid are winding-agnostic. With the `parallel` feature the strips
/// of each ring are evaluated on rayon; the result is bit-identical to
/// [`polygon_centroid_serial`] because strips are accumulated in segment
/// order either way.
pub fn polygon_centroid(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    cfg: &CentroidConfig,
) -> Result<CentroidResult> {
    run(ell, poly, cfg, cfg!(feature = "parallel"))
}

/// [`polygon_centroid`] restricted to the sequential path.
pub fn polygon_centroid_serial(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    cfg: &CentroidConfig,
) -> Result<CentroidResult> {
    run(ell, poly, cfg, false)
}

fn run(
    ell: &Ellipsoid,
    poly: &EllipsoidalPolygon,
    cfg: &CentroidConfig,
    parallel: bool,
) -> Result<CentroidResult> {
    validate_config(cfg)?;
    let lambda0 = cfg.lambda0.unwrap_or_else(|| auto_lambda0(poly));

    let mut strips: Vec<StripContribution> = Vec::new();
    let mut input_vertices = 0;
    let mut processed_vertices = 0;
    for ring in poly.rings() {
        input_vertices += ring.vertices().len();
        let dense = densify_ring(ring.vertices(), cfg);
        processed_vertices += dense.len();

        let mut ring_strips = segment_strips(ell, &dense, lambda0, parallel);
        let mut ring_sum = NeumaierSum::default();
        for s in &ring_strips {
            ring_sum.add(s.signed_area);
        }
        let sum = ring_sum.value();
        if sum == 0.0 {
            // A ring whose signed area vanishes has no usable orientation.
            return Err(Error::DegeneratePolygon { sum: 0.0, floor: cfg.degeneracy_floor });
        }
        let flip = match ring.role() {
            RingRole::Outer => sum < 0.0,
            RingRole::Hole => sum > 0.0,
        };
        if flip {
            for s in &mut ring_strips {
                s.signed_area = -s.signed_area;
            }
        }
        strips.extend(ring_strips);
    }

    let (total, g_xyz) = accumulate(&strips, cfg.degeneracy_floor)?;
    let centre = project_to_ellipsoid(ell, g_xyz)?;
    Ok(CentroidResult {
        area: total.abs(),
        g_xyz,
        centre,
        diagnostics: Diagnostics {
            strip_count: strips.len(),
            sum_sign: if total >= 0.0 { 1 } else { -1 },
            lambda0: Some(lambda0),
            densified: processed_vertices > input_vertices,
            input_vertices,
            processed_vertices,
        },
    })
}

fn validate_config(cfg: &CentroidConfig) -> Result<()> {
    if !(cfg.max_dphi > 0.0) || !(cfg.max_dlambda > 0.0) {
        return Err(Error::InvalidPolygon(
            "densification bounds must be positive".into(),
        ));
    }
    if !(cfg.degeneracy_floor > 0.0) {
        return Err(Error::InvalidPolygon("degeneracy floor must be positive".into()));
    }
    if let Some(l0) = cfg.lambda0 {
        if !l0.is_finite() {
            return Err(Error::InvalidPolygon("lambda0 must be finite".into()));
        }
    }
    Ok(())
}

/// Vertex-mean longitude of the outer rings; a reference longitude inside
/// the polygon's span minimizes strip lengths and cancellation.
fn auto_lambda0(poly: &EllipsoidalPolygon) -> f64 {
    let mut sum = NeumaierSum::default();
    let mut count = 0usize;
    for ring in poly.rings().iter().filter(|r| r.role() == RingRole::Outer) {
        for v in ring.vertices() {
            sum.add(v.lon);
            count += 1;
        }
    }
    sum.value() / count as f64
}

fn segment_strips(
    ell: &Ellipsoid,
    dense: &[GeodeticCoord],
    lambda0: f64,
    parallel: bool,
) -> Vec<StripContribution> {
    let n = dense.len();
    #[cfg(feature = "parallel")]
    if parallel {
        return (0..n)
            .into_par_iter()
            .map(|i| strip_contribution(ell, dense[i], dense[(i + 1) % n], lambda0))
            .collect();
    }
    let _ = parallel;
    (0..n)
        .map(|i| strip_contribution(ell, dense[i], dense[(i + 1) % n], lambda0))
        .collect()
}

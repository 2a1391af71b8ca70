//! Geodetic coordinates, Cartesian conversions and orthogonal projection
//! back onto the spheroid.
//!
//! The Cartesian frame is Earth-centred with `z` along the rotation axis.
//! Surface points come from the standard geodetic conversion; the reverse
//! direction drops the ellipsoidal height: [`project_to_ellipsoid`] returns
//! the foot of the normal line through the input point, which for every
//! point outside the ellipsoid's evolute is also its nearest surface point.

use std::f64::consts::PI;

use crate::ellipsoid::Ellipsoid;
use crate::error::{Error, Result};

/// A surface position: longitude and latitude in radians.
///
/// Latitude is geodetic and must lie in `[-pi/2, pi/2]`. Longitude is not
/// range-restricted; polygon rings keep unwrapped longitudes so arithmetic
/// means of consecutive vertices stay meaningful.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GeodeticCoord {
    /// Longitude, radians, positive eastward.
    pub lon: f64,
    /// Latitude, radians, positive northward.
    pub lat: f64,
}

impl GeodeticCoord {
    pub fn new(lon: f64, lat: f64) -> Self {
        Self { lon, lat }
    }
}

/// A point in the Earth-centred Cartesian frame, metres.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cartesian3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Cartesian3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Euclidean distance to another point.
    pub fn distance(&self, other: Cartesian3) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Points closer to the rotation axis than this fraction of `a` have no
/// meaningful longitude and are rejected by [`project_to_ellipsoid`].
pub const NEAR_AXIS_LIMIT: f64 = 1e-9;

const LAT_TOLERANCE: f64 = 1e-13;
const MAX_ITERATIONS: usize = 20;

/// Converts a geodetic surface position to Cartesian coordinates:
/// `x = N cos(phi) cos(lambda)`, `y = N cos(phi) sin(lambda)`,
/// `z = N (1 - e2) sin(phi)`.
pub fn geodetic_to_cartesian(ell: &Ellipsoid, p: GeodeticCoord) -> Cartesian3 {
    let (sin_lat, cos_lat) = p.lat.sin_cos();
    let (sin_lon, cos_lon) = p.lon.sin_cos();
    let n = ell.prime_vertical_radius(p.lat);
    Cartesian3::new(
        n * cos_lat * cos_lon,
        n * cos_lat * sin_lon,
        n * (1.0 - ell.e2()) * sin_lat,
    )
}

/// Projects an arbitrary 3-D point orthogonally onto the spheroid and
/// returns the geodetic coordinates of the foot point, i.e. the surface
/// point whose outward normal line passes through `g`. Longitude is
/// normalized to `(-pi, pi]`.
///
/// The latitude solves `tan(phi) = (z + e2 N(phi) sin(phi)) / p` by fixed
/// point iteration from Bowring's closed-form first guess; convergence is
/// declared when successive latitudes differ by less than 1e-13 rad.
/// Points within [`NEAR_AXIS_LIMIT`]` * a` of the rotation axis are
/// rejected rather than given an arbitrary longitude.
pub fn project_to_ellipsoid(ell: &Ellipsoid, g: Cartesian3) -> Result<GeodeticCoord> {
    let p = g.x.hypot(g.y);
    if p < NEAR_AXIS_LIMIT * ell.a() {
        return Err(Error::NearAxis { limit: NEAR_AXIS_LIMIT });
    }
    let lon = fold_lon(g.y.atan2(g.x));

    let (a, b, e2) = (ell.a(), ell.b(), ell.e2());
    if e2 == 0.0 {
        return Ok(GeodeticCoord::new(lon, g.z.atan2(p)));
    }

    // Bowring's first guess via the parametric latitude.
    let ep2 = (a * a - b * b) / (b * b);
    let theta = (g.z * a).atan2(p * b);
    let (st, ct) = theta.sin_cos();
    let mut lat = (g.z + ep2 * b * st * st * st).atan2(p - e2 * a * ct * ct * ct);

    for _ in 0..MAX_ITERATIONS {
        let n = ell.prime_vertical_radius(lat);
        let next = (g.z + e2 * n * lat.sin()).atan2(p);
        let step = (next - lat).abs();
        lat = next;
        if step < LAT_TOLERANCE {
            return Ok(GeodeticCoord::new(lon, lat));
        }
    }
    Err(Error::ProjectionDiverged { max_iterations: MAX_ITERATIONS })
}

/// Wraps a longitude into `(-pi, pi]`.
pub(crate) fn wrap_longitude(lon: f64) -> f64 {
    let w = (lon + PI).rem_euclid(2.0 * PI) - PI;
    if w == -PI {
        PI
    } else {
        w
    }
}

/// Folds the single boundary case of `atan2` (exact `-pi`) to `+pi`.
fn fold_lon(lon: f64) -> f64 {
    if lon == -PI {
        PI
    } else {
        lon
    }
}

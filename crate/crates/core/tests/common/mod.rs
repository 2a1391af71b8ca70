//! Shared helpers for the integration suites: deterministic test polygon
//! generators and independent reference computations.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use spheroid_centroid::{
    geodetic_to_cartesian, Cartesian3, Ellipsoid, EllipsoidalPolygon, GeodeticCoord,
};
use std::f64::consts::{FRAC_PI_2, PI};

/// Axis-aligned quadrilateral in degrees (lon0 < lon1, lat0 < lat1),
/// counter-clockwise.
pub fn quad_deg(lon0: f64, lon1: f64, lat0: f64, lat1: f64) -> EllipsoidalPolygon {
    EllipsoidalPolygon::single(vec![
        GeodeticCoord::new(lon0.to_radians(), lat0.to_radians()),
        GeodeticCoord::new(lon1.to_radians(), lat0.to_radians()),
        GeodeticCoord::new(lon1.to_radians(), lat1.to_radians()),
        GeodeticCoord::new(lon0.to_radians(), lat1.to_radians()),
    ])
    .unwrap()
}

/// Analytic area of such a quadrilateral on the unit sphere.
pub fn sphere_quad_area(lon0: f64, lon1: f64, lat0: f64, lat1: f64) -> f64 {
    (lon1 - lon0).to_radians() * (lat1.to_radians().sin() - lat0.to_radians().sin())
}

/// Raw vertex ring of a star-shaped polygon around `centre` (radians):
/// radii jittered in [0.35, 1.0] * max_radius, angles jittered but ordered,
/// so the ring is simple by construction.
pub fn star_ring(
    rng: &mut ChaCha8Rng,
    vertex_count: usize,
    centre: (f64, f64),
    max_radius: f64,
) -> Vec<GeodeticCoord> {
    let (lon_c, lat_c) = centre;
    (0..vertex_count)
        .map(|k| {
            let jitter: f64 = rng.random_range(0.0..0.35);
            let angle = 2.0 * PI * (k as f64 + jitter) / vertex_count as f64;
            let radius = max_radius * rng.random_range(0.35..1.0);
            GeodeticCoord::new(
                lon_c + radius * angle.cos(),
                lat_c + radius * angle.sin(),
            )
        })
        .collect()
}

/// Seeded star polygon with 8-64 vertices and extent at most 30 degrees,
/// kept away from the poles.
pub fn star_polygon(rng: &mut ChaCha8Rng) -> EllipsoidalPolygon {
    let vertex_count = rng.random_range(8..=64);
    let lon_c = rng.random_range(-30f64..60f64).to_radians();
    let lat_c = rng.random_range(-45f64..45f64).to_radians();
    let max_radius = rng.random_range(4f64..15f64).to_radians();
    EllipsoidalPolygon::single(star_ring(rng, vertex_count, (lon_c, lat_c), max_radius))
        .unwrap()
}

/// Chord distance (metres) between two surface positions, the surface
/// separation measure used throughout the suites.
pub fn surface_separation(ell: &Ellipsoid, a: GeodeticCoord, b: GeodeticCoord) -> f64 {
    geodetic_to_cartesian(ell, a).distance(geodetic_to_cartesian(ell, b))
}

/// Brute-force nearest-surface-point search by iterated grid refinement.
/// Independent of the fixed-point projection: it only samples the forward
/// conversion on a shrinking lattice.
pub fn nearest_surface_point(ell: &Ellipsoid, g: Cartesian3) -> GeodeticCoord {
    let (mut lon, mut lat) = (0.0f64, 0.0f64);
    let (mut span_lon, mut span_lat) = (2.0 * PI, PI);
    for _ in 0..14 {
        let mut best = (f64::INFINITY, lon, lat);
        for i in 0..=40 {
            for j in 0..=40 {
                let cand_lon = lon - span_lon / 2.0 + i as f64 * span_lon / 40.0;
                let cand_lat =
                    (lat - span_lat / 2.0 + j as f64 * span_lat / 40.0).clamp(-FRAC_PI_2, FRAC_PI_2);
                let c = geodetic_to_cartesian(ell, GeodeticCoord::new(cand_lon, cand_lat));
                let d = c.distance(g);
                if d < best.0 {
                    best = (d, cand_lon, cand_lat);
                }
            }
        }
        lon = best.1;
        lat = best.2;
        span_lon *= 0.2;
        span_lat *= 0.2;
    }
    let wrapped = if lon > PI {
        lon - 2.0 * PI
    } else if lon <= -PI {
        lon + 2.0 * PI
    } else {
        lon
    };
    GeodeticCoord::new(wrapped, lat)
}

//! Polygons on the spheroid: rings of geodetic vertices with outer/hole
//! roles.
//!
//! Construction normalizes each ring onto one continuous longitude chart:
//! the first vertex is wrapped into `(-pi, pi]` and every following
//! longitude is chosen within half a turn of its predecessor, so arithmetic
//! means of consecutive longitudes stay meaningful across the antimeridian.
//! Rings that cannot be unwrapped -- consecutive vertices half a turn
//! apart, rings that wind around the globe (which is how a ring enclosing
//! a pole appears on this chart), or rings spanning more than a full turn
//! -- are rejected rather than silently mangled. Further rings are shifted
//! by whole turns so the whole polygon shares one chart.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geodesy::{wrap_longitude, GeodeticCoord};

/// Whether a ring bounds area (outer) or removes it (hole).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingRole {
    Outer,
    Hole,
}

/// One closed ring: an ordered vertex list, implicitly closed (the last
/// vertex connects back to the first).
#[derive(Clone, Debug)]
pub struct Ring {
    vertices: Vec<GeodeticCoord>,
    role: RingRole,
}

impl Ring {
    pub fn vertices(&self) -> &[GeodeticCoord] {
        &self.vertices
    }

    pub fn role(&self) -> RingRole {
        self.role
    }
}

/// One or more rings of geodetic vertices on a common unwrapped chart.
#[derive(Clone, Debug)]
pub struct EllipsoidalPolygon {
    rings: Vec<Ring>,
}

impl EllipsoidalPolygon {
    /// Builds a polygon from raw rings (longitudes in any branch, radians).
    /// Consecutive duplicate vertices and a duplicated closing vertex are
    /// dropped; each ring must keep at least 3 vertices.
    pub fn new(rings: Vec<(Vec<GeodeticCoord>, RingRole)>) -> Result<Self> {
        if rings.is_empty() {
            return Err(Error::InvalidPolygon("polygon has no rings".into()));
        }
        if !rings.iter().any(|(_, role)| *role == RingRole::Outer) {
            return Err(Error::InvalidPolygon("polygon has no outer ring".into()));
        }
        let mut normalized: Vec<Ring> = Vec::with_capacity(rings.len());
        for (index, (vertices, role)) in rings.into_iter().enumerate() {
            let mut ring = normalize_ring(vertices, index)?;
            if let Some(first) = normalized.first() {
                align_chart(first, &mut ring);
            }
            normalized.push(Ring { vertices: ring, role });
        }
        Ok(Self { rings: normalized })
    }

    /// Single outer ring.
    pub fn single(ring: Vec<GeodeticCoord>) -> Result<Self> {
        Self::new(vec![(ring, RingRole::Outer)])
    }

    pub fn rings(&self) -> &[Ring] {
        &self.rings
    }

    /// Bounding box over all unwrapped vertices:
    /// `(lon_min, lon_max, lat_min, lat_max)`.
    pub fn bbox(&self) -> (f64, f64, f64, f64) {
        let mut bbox = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for ring in &self.rings {
            for v in &ring.vertices {
                bbox.0 = bbox.0.min(v.lon);
                bbox.1 = bbox.1.max(v.lon);
                bbox.2 = bbox.2.min(v.lat);
                bbox.3 = bbox.3.max(v.lat);
            }
        }
        bbox
    }

    /// Total vertex count over all rings.
    pub fn vertex_count(&self) -> usize {
        self.rings.iter().map(|r| r.vertices.len()).sum()
    }
}

fn normalize_ring(raw: Vec<GeodeticCoord>, index: usize) -> Result<Vec<GeodeticCoord>> {
    for v in &raw {
        if !v.lon.is_finite() || !v.lat.is_finite() {
            return Err(Error::InvalidPolygon(format!(
                "ring {index} contains a non-finite coordinate"
            )));
        }
        if v.lat.abs() > std::f64::consts::FRAC_PI_2 {
            return Err(Error::InvalidPolygon(format!(
                "ring {index}: latitude {} rad is outside [-pi/2, pi/2]",
                v.lat
            )));
        }
    }

    // Drop consecutive duplicates, including a duplicated closing vertex.
    let mut vertices: Vec<GeodeticCoord> = Vec::with_capacity(raw.len());
    for v in raw {
        if vertices.last() != Some(&v) {
            vertices.push(v);
        }
    }
    if vertices.len() > 1 && vertices.first() == vertices.last() {
        vertices.pop();
    }
    if vertices.len() < 3 {
        return Err(Error::InvalidPolygon(format!(
            "ring {index} has fewer than 3 distinct vertices"
        )));
    }

    // Unwrap: each longitude within half a turn of its predecessor.
    vertices[0].lon = wrap_longitude(vertices[0].lon);
    for i in 1..vertices.len() {
        let step = wrap_longitude(vertices[i].lon - vertices[i - 1].lon);
        if step.abs() >= PI {
            return Err(Error::InvalidPolygon(format!(
                "ring {index}: consecutive vertices {} and {} are half a turn apart in \
                 longitude; the segment direction is ambiguous",
                i - 1,
                i
            )));
        }
        vertices[i].lon = vertices[i - 1].lon + step;
    }

    // The implicit closing segment must also stay within half a turn;
    // otherwise the ring winds around the globe (encloses a pole).
    let closing = vertices[0].lon - vertices[vertices.len() - 1].lon;
    if closing.abs() >= PI {
        return Err(Error::InvalidPolygon(format!(
            "ring {index} winds around the globe (net longitude turn {closing:.6} rad); \
             rings enclosing a pole are not supported"
        )));
    }

    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for v in &vertices {
        lo = lo.min(v.lon);
        hi = hi.max(v.lon);
    }
    if hi - lo >= 2.0 * PI {
        return Err(Error::InvalidPolygon(format!(
            "ring {index} spans {:.6} rad of longitude, more than a full turn",
            hi - lo
        )));
    }

    Ok(vertices)
}

/// Shifts `ring` by whole turns so its mean longitude lands within half a
/// turn of the reference ring's mean. Keeps islands and holes on the same
/// chart as the first ring even when the raw data straddles ±180°.
fn align_chart(reference: &Ring, ring: &mut [GeodeticCoord]) {
    let mean = |vs: &[GeodeticCoord]| vs.iter().map(|v| v.lon).sum::<f64>() / vs.len() as f64;
    let turns = ((mean(reference.vertices()) - mean(ring)) / (2.0 * PI)).round();
    if turns != 0.0 {
        for v in ring.iter_mut() {
            v.lon += turns * 2.0 * PI;
        }
    }
}

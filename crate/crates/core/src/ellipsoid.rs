//! Reference ellipsoid model and radii of curvature.

use crate::error::{Error, Result};

/// An oblate ellipsoid of revolution.
///
/// `a` and `b` are the two fundamental semi-axes (equatorial and polar, in
/// metres); the flattening `f = (a - b)/a` and first eccentricity squared
/// `e2 = (a^2 - b^2)/a^2` are derived once at construction. A sphere
/// (`f = 0`, `e2 = 0`) is a valid special case.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ellipsoid {
    a: f64,
    b: f64,
    f: f64,
    e2: f64,
}

impl Ellipsoid {
    /// Builds an ellipsoid from the equatorial semi-axis `a` (metres) and
    /// the inverse flattening `1/f`. An infinite `inv_f` is the sphere
    /// sentinel (flattening zero); finite values must exceed 1.
    pub fn new(a: f64, inv_f: f64) -> Result<Self> {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidEllipsoid(format!(
                "equatorial semi-axis must be positive, got {a}"
            )));
        }
        if inv_f.is_nan() || (inv_f.is_finite() && inv_f <= 1.0) {
            return Err(Error::InvalidEllipsoid(format!(
                "inverse flattening must exceed 1 (or be infinite for a sphere), got {inv_f}"
            )));
        }
        let f = if inv_f.is_infinite() { 0.0 } else { 1.0 / inv_f };
        Ok(Self {
            a,
            b: a * (1.0 - f),
            f,
            e2: f * (2.0 - f),
        })
    }

    /// A sphere of radius `a` metres.
    pub fn sphere(a: f64) -> Result<Self> {
        Self::new(a, f64::INFINITY)
    }

    /// International (Hayford) 1924 ellipsoid: a = 6378388 m, 1/f = 297.
    pub fn hayford() -> Self {
        Self::new(6_378_388.0, 297.0).expect("constants are valid")
    }

    /// WGS 84 ellipsoid: a = 6378137 m, 1/f = 298.257223563.
    pub fn wgs84() -> Self {
        Self::new(6_378_137.0, 298.257_223_563).expect("constants are valid")
    }

    /// Unit sphere (radius 1 m). Handy for analytic checks.
    pub fn unit_sphere() -> Self {
        Self::sphere(1.0).expect("constants are valid")
    }

    /// Looks up a named preset: `hayford`, `wgs84` or `unit-sphere`.
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "hayford" => Some(Self::hayford()),
            "wgs84" => Some(Self::wgs84()),
            "unit-sphere" => Some(Self::unit_sphere()),
            _ => None,
        }
    }

    /// Equatorial semi-axis, metres.
    pub fn a(&self) -> f64 {
        self.a
    }

    /// Polar semi-axis, metres.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Flattening `(a - b)/a`.
    pub fn flattening(&self) -> f64 {
        self.f
    }

    /// First eccentricity squared `(a^2 - b^2)/a^2`.
    pub fn e2(&self) -> f64 {
        self.e2
    }

    /// Prime vertical radius of curvature `N = a / sqrt(1 - e2 sin^2 phi)`,
    /// the east-west normal-section radius at latitude `phi`. Never smaller
    /// than `a`.
    pub fn prime_vertical_radius(&self, phi: f64) -> f64 {
        let s = phi.sin();
        self.a / (1.0 - self.e2 * s * s).sqrt()
    }

    /// Meridional radius of curvature
    /// `rho = a (1 - e2) / (1 - e2 sin^2 phi)^(3/2)` at latitude `phi`.
    pub fn meridional_radius(&self, phi: f64) -> f64 {
        let s = phi.sin();
        let w2 = 1.0 - self.e2 * s * s;
        self.a * (1.0 - self.e2) / (w2 * w2.sqrt())
    }
}

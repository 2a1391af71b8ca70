use thiserror::Error;

/// Errors produced by ellipsoid construction, polygon ingestion and the
/// centroid/oracle pipelines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ellipsoid: {0}")]
    InvalidEllipsoid(String),

    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),

    /// The point lies too close to the rotation axis for its longitude to
    /// be meaningful.
    #[error("point is within {limit:e} * a of the rotation axis; longitude is undefined there")]
    NearAxis { limit: f64 },

    #[error("geodetic latitude iteration did not converge within {max_iterations} iterations")]
    ProjectionDiverged { max_iterations: usize },

    /// The signed strip areas cancelled out; the centroid quotient is
    /// ill-conditioned below the degeneracy floor.
    #[error("degenerate polygon: |sum of signed strip areas| = {sum:e} m^2 is below the floor {floor:e} m^2")]
    DegeneratePolygon { sum: f64, floor: f64 },

    /// The integration grid is too coarse for the polygon.
    #[error("grid does not resolve the polygon: {cells} interior cells, need at least {minimum}")]
    InsufficientResolution { cells: usize, minimum: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

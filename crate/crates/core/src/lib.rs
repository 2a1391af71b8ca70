//! Surface areas and centres of gravity of polygons on an oblate
//! spheroid.
//!
//! A polygon given as geodetic (longitude, latitude) rings is treated as a
//! thin curved shell of uniform surface density on the reference
//! ellipsoid. Its conventional "centre of gravity" is the statics centroid
//! of that shell, an off-surface point strictly inside the spheroid. The
//! computation runs in three stages:
//!
//! 1. ingest the boundary as an ellipsoidal polygon ([`polygon`]),
//! 2. decompose it into a large number of narrow signed strips, accumulate
//!    their areas and centroids ([`engine`]),
//! 3. project the 3-D centroid orthogonally back onto the spheroid to get
//!    geographic coordinates ([`geodesy`]).
//!
//! Every result can be cross-checked against an independent brute-force
//! surface integrator ([`oracle`]) that shares no code with the strip
//! decomposition.
//!
//! Angles are radians everywhere in this crate; degrees belong to I/O
//! layers. With the default `parallel` feature, strip evaluation and the
//! oracle's row sweep run on rayon; results are bit-identical to the
//! `*_serial` entry points because the final reductions always consume
//! contributions in input order.

pub mod ellipsoid;
pub mod engine;
mod error;
pub mod geodesy;
pub mod oracle;
pub mod polygon;
mod sum;

pub use ellipsoid::Ellipsoid;
pub use engine::{
    accumulate, arc_centroid_distance, densify_ring, midpoint, polygon_centroid,
    polygon_centroid_serial, sinc, strip_contribution, CentroidConfig, CentroidResult,
    Diagnostics, StripContribution,
};
pub use error::{Error, Result};
pub use geodesy::{geodetic_to_cartesian, project_to_ellipsoid, Cartesian3, GeodeticCoord};
pub use oracle::{oracle_centroid, oracle_centroid_serial, point_in_polygon, GridSpec};
pub use polygon::{EllipsoidalPolygon, Ring, RingRole};

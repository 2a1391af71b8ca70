//! Library side of the `centroid` command-line tool: file ingestion
//! (GeoJSON and WKT), report formatting and the CLI orchestration. Kept as
//! a library so the pieces are directly testable.

pub mod app;
pub mod ingest;
pub mod report;

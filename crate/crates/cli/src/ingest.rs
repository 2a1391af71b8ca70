//! Polygon ingestion: GeoJSON (Polygon, MultiPolygon, optionally wrapped in
//! Feature/FeatureCollection) and WKT (POLYGON, MULTIPOLYGON).
//!
//! Coordinates are decimal degrees, longitude first. Rings are converted
//! to radians and normalized (unwrapped longitudes, duplicated closing
//! vertex dropped) by the core polygon constructor; a MultiPolygon or a
//! collection of polygon features merges into one polygon with multiple
//! outer rings.

use serde_json::Value;
use spheroid_centroid::{EllipsoidalPolygon, GeodeticCoord, RingRole};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("GeoJSON parse error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("WKT parse error at byte {offset}: {message}")]
    Wkt { offset: usize, message: String },

    #[error("unsupported geometry: expected Polygon or MultiPolygon, found {found}")]
    NonPolygon { found: String },

    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),

    #[error(transparent)]
    Polygon(#[from] spheroid_centroid::Error),

    #[error("input is not valid UTF-8")]
    NotUtf8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatHint {
    GeoJson,
    Wkt,
}

/// Rings in decimal degrees with their outer/hole roles, in parse order.
pub type DegreeRings = Vec<(Vec<[f64; 2]>, RingRole)>;

/// Parsed polygon plus the original rings in decimal degrees (parse order,
/// closing vertices kept) for echoing the input back out as GeoJSON.
#[derive(Debug)]
pub struct ParsedInput {
    pub polygon: EllipsoidalPolygon,
    pub rings_deg: DegreeRings,
}

/// Parses polygon bytes; without a hint the format is sniffed (a leading
/// `{` means GeoJSON, anything else is treated as WKT).
pub fn parse_polygon(bytes: &[u8], hint: Option<FormatHint>) -> Result<ParsedInput, IngestError> {
    let format = hint.unwrap_or_else(|| sniff(bytes));
    let rings_deg = match format {
        FormatHint::GeoJson => geojson_rings(bytes)?,
        FormatHint::Wkt => wkt_rings(bytes)?,
    };
    build(rings_deg)
}

/// Format hint from a file name, when the extension is conclusive.
pub fn hint_from_path(path: &str) -> Option<FormatHint> {
    let lower = path.to_ascii_lowercase();
    if lower.ends_with(".geojson") || lower.ends_with(".json") {
        Some(FormatHint::GeoJson)
    } else if lower.ends_with(".wkt") {
        Some(FormatHint::Wkt)
    } else {
        None
    }
}

fn sniff(bytes: &[u8]) -> FormatHint {
    match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
        Some(b'{') => FormatHint::GeoJson,
        _ => FormatHint::Wkt,
    }
}

fn build(rings_deg: DegreeRings) -> Result<ParsedInput, IngestError> {
    let mut rings_rad = Vec::with_capacity(rings_deg.len());
    for (index, (ring, role)) in rings_deg.iter().enumerate() {
        for &[lon, lat] in ring {
            if !lon.is_finite() || !lat.is_finite() {
                return Err(IngestError::InvalidCoordinates(format!(
                    "ring {index} contains a non-finite coordinate"
                )));
            }
            if !(-90.0..=90.0).contains(&lat) {
                return Err(IngestError::InvalidCoordinates(format!(
                    "ring {index}: latitude {lat} is outside [-90, 90]"
                )));
            }
        }
        rings_rad.push((
            ring.iter()
                .map(|&[lon, lat]| GeodeticCoord::new(lon.to_radians(), lat.to_radians()))
                .collect(),
            *role,
        ));
    }
    let polygon = EllipsoidalPolygon::new(rings_rad)?;
    Ok(ParsedInput { polygon, rings_deg })
}

// ---------------------------------------------------------------------------
// GeoJSON
// ---------------------------------------------------------------------------

fn geojson_rings(bytes: &[u8]) -> Result<DegreeRings, IngestError> {
    let value: Value = serde_json::from_slice(bytes)?;
    let mut rings = Vec::new();
    collect_geometry(&value, &mut rings, true)?;
    if rings.is_empty() {
        return Err(IngestError::NonPolygon { found: "no polygon geometry".into() });
    }
    Ok(rings)
}

/// Collects polygon rings from a geometry, Feature or FeatureCollection.
/// Inside a FeatureCollection non-polygon features are skipped (`strict`
/// off); a bare non-polygon geometry is an error.
fn collect_geometry(
    value: &Value,
    out: &mut DegreeRings,
    strict: bool,
) -> Result<(), IngestError> {
    let typ = value
        .get("type")
        .and_then(Value::as_str)
        .ok_or_else(|| IngestError::NonPolygon { found: "object without a \"type\"".into() })?;
    match typ {
        "Polygon" => polygon_rings(value.get("coordinates"), out),
        "MultiPolygon" => {
            let parts = value
                .get("coordinates")
                .and_then(Value::as_array)
                .ok_or_else(|| bad_coords("MultiPolygon coordinates must be an array"))?;
            for part in parts {
                polygon_rings(Some(part), out)?;
            }
            Ok(())
        }
        "Feature" => {
            let geometry = value
                .get("geometry")
                .filter(|g| !g.is_null())
                .ok_or_else(|| IngestError::NonPolygon { found: "Feature without geometry".into() })?;
            collect_geometry(geometry, out, strict)
        }
        "FeatureCollection" => {
            let features = value
                .get("features")
                .and_then(Value::as_array)
                .ok_or_else(|| bad_coords("FeatureCollection without a features array"))?;
            for feature in features {
                let geometry = feature.get("geometry").filter(|g| !g.is_null());
                let is_polygonal = geometry
                    .and_then(|g| g.get("type"))
                    .and_then(Value::as_str)
                    .map(|t| t == "Polygon" || t == "MultiPolygon")
                    .unwrap_or(false);
                if is_polygonal {
                    collect_geometry(geometry.unwrap(), out, false)?;
                }
            }
            Ok(())
        }
        other => {
            if strict {
                Err(IngestError::NonPolygon { found: other.into() })
            } else {
                Ok(())
            }
        }
    }
}

/// One GeoJSON polygon: first ring outer, subsequent rings holes.
fn polygon_rings(
    coordinates: Option<&Value>,
    out: &mut DegreeRings,
) -> Result<(), IngestError> {
    let rings = coordinates
        .and_then(Value::as_array)
        .ok_or_else(|| bad_coords("Polygon coordinates must be an array of rings"))?;
    if rings.is_empty() {
        return Err(bad_coords("Polygon has no rings"));
    }
    for (i, ring) in rings.iter().enumerate() {
        let positions = ring
            .as_array()
            .ok_or_else(|| bad_coords("ring must be an array of positions"))?;
        let mut parsed = Vec::with_capacity(positions.len());
        for position in positions {
            parsed.push(parse_position(position)?);
        }
        let role = if i == 0 { RingRole::Outer } else { RingRole::Hole };
        out.push((parsed, role));
    }
    Ok(())
}

fn parse_position(value: &Value) -> Result<[f64; 2], IngestError> {
    let arr = value
        .as_array()
        .ok_or_else(|| bad_coords("position must be an array"))?;
    if arr.len() < 2 {
        return Err(bad_coords("position needs at least [lon, lat]"));
    }
    let lon = arr[0].as_f64().ok_or_else(|| bad_coords("longitude must be a number"))?;
    let lat = arr[1].as_f64().ok_or_else(|| bad_coords("latitude must be a number"))?;
    Ok([lon, lat])
}

fn bad_coords(message: &str) -> IngestError {
    IngestError::InvalidCoordinates(message.to_string())
}

// ---------------------------------------------------------------------------
// WKT
// ---------------------------------------------------------------------------

fn wkt_rings(bytes: &[u8]) -> Result<DegreeRings, IngestError> {
    let text = std::str::from_utf8(bytes).map_err(|_| IngestError::NotUtf8)?;
    let mut cursor = Cursor { text, pos: 0 };
    cursor.skip_ws();
    let keyword = cursor.keyword()?;
    let mut out = Vec::new();
    match keyword.as_str() {
        "POLYGON" => wkt_polygon_body(&mut cursor, &mut out)?,
        "MULTIPOLYGON" => {
            cursor.expect('(')?;
            loop {
                wkt_polygon_body(&mut cursor, &mut out)?;
                if !cursor.eat(',') {
                    break;
                }
            }
            cursor.expect(')')?;
        }
        other => {
            return Err(IngestError::NonPolygon { found: other.to_string() });
        }
    }
    cursor.skip_ws();
    if cursor.pos != cursor.text.len() {
        return Err(cursor.error("trailing characters after the geometry"));
    }
    Ok(out)
}

/// `((x y, x y, ...), (hole), ...)` -- first ring outer, rest holes.
fn wkt_polygon_body(
    cursor: &mut Cursor,
    out: &mut DegreeRings,
) -> Result<(), IngestError> {
    cursor.skip_ws();
    if cursor.keyword_ahead("EMPTY") {
        return Err(cursor.error("EMPTY polygons are not supported"));
    }
    cursor.expect('(')?;
    let mut index = 0;
    loop {
        let ring = wkt_ring(cursor)?;
        let role = if index == 0 { RingRole::Outer } else { RingRole::Hole };
        out.push((ring, role));
        index += 1;
        if !cursor.eat(',') {
            break;
        }
    }
    cursor.expect(')')?;
    Ok(())
}

fn wkt_ring(cursor: &mut Cursor) -> Result<Vec<[f64; 2]>, IngestError> {
    cursor.expect('(')?;
    let mut ring = Vec::new();
    loop {
        let lon = cursor.number()?;
        let lat = cursor.number()?;
        // Tolerate Z/M values: skip further numbers up to the separator.
        while cursor.peek_number() {
            cursor.number()?;
        }
        ring.push([lon, lat]);
        if !cursor.eat(',') {
            break;
        }
    }
    cursor.expect(')')?;
    Ok(ring)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> IngestError {
        IngestError::Wkt { offset: self.pos, message: message.to_string() }
    }

    fn keyword(&mut self) -> Result<String, IngestError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text.as_bytes()[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a geometry keyword"));
        }
        Ok(self.text[start..self.pos].to_ascii_uppercase())
    }

    fn keyword_ahead(&self, word: &str) -> bool {
        self.text[self.pos..]
            .get(..word.len())
            .map(|s| s.eq_ignore_ascii_case(word))
            .unwrap_or(false)
    }

    fn expect(&mut self, c: char) -> Result<(), IngestError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn peek_number(&mut self) -> bool {
        self.skip_ws();
        matches!(
            self.text.as_bytes().get(self.pos),
            Some(b'-') | Some(b'+') | Some(b'.') | Some(b'0'..=b'9')
        )
    }

    fn number(&mut self) -> Result<f64, IngestError> {
        self.skip_ws();
        let bytes = self.text.as_bytes();
        let start = self.pos;
        while self.pos < bytes.len()
            && matches!(bytes[self.pos], b'-' | b'+' | b'.' | b'e' | b'E' | b'0'..=b'9')
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos]
            .parse::<f64>()
            .map_err(|_| IngestError::Wkt {
                offset: start,
                message: format!("not a number: {}", &self.text[start..self.pos]),
            })
    }
}

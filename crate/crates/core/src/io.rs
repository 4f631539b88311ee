//! JSON wire formats for paths, itineraries, windows and polygons.
//!
//! Integers are written as JSON numbers when they fit in an i64 and as
//! decimal strings otherwise; both forms are accepted on input, so
//! every value round-trips bit-exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::path::{FareyPath, ItinerarySpec};
use crate::polygon::TriangulatedPolygon;
use crate::rational::ExtRational;
use crate::tiling::TilingWindow;

/// An exact integer that serializes as a number or decimal string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct JsonIntVisitor;

impl Visitor<'_> for JsonIntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(BigInt::from(v)))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
        v.trim()
            .parse::<BigInt>()
            .map(JsonInt)
            .map_err(|_| E::custom(format!("cannot parse integer {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<JsonInt, D::Error> {
        d.deserialize_any(JsonIntVisitor)
    }
}

fn wrap(xs: &[BigInt]) -> Vec<JsonInt> {
    xs.iter().cloned().map(JsonInt).collect()
}

fn unwrap(xs: &[JsonInt]) -> Vec<BigInt> {
    xs.iter().map(|x| x.0.clone()).collect()
}

/// {"left_period": [...], "core": [...], "right_period": [...]}
#[derive(Serialize, Deserialize, Clone, Debug, Default)]
#[serde(deny_unknown_fields)]
pub struct ItineraryDto {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub left_period: Vec<JsonInt>,
    #[serde(default)]
    pub core: Vec<JsonInt>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub right_period: Vec<JsonInt>,
}

impl From<&ItinerarySpec> for ItineraryDto {
    fn from(spec: &ItinerarySpec) -> Self {
        ItineraryDto {
            left_period: wrap(&spec.left_period),
            core: wrap(&spec.core),
            right_period: wrap(&spec.right_period),
        }
    }
}

impl ItineraryDto {
    pub fn to_spec(&self) -> ItinerarySpec {
        ItinerarySpec {
            left_period: unwrap(&self.left_period),
            core: unwrap(&self.core),
            right_period: unwrap(&self.right_period),
        }
    }
}

/// {"vertices": ["inf", "2", "3/2", ...], "start": 0, "closed": false}
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PathDto {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub start: i64,
    #[serde(default)]
    pub closed: bool,
}

impl From<&FareyPath> for PathDto {
    fn from(path: &FareyPath) -> Self {
        PathDto {
            vertices: path.vertices().iter().map(|v| v.to_string()).collect(),
            start: path.start(),
            closed: path.is_closed(),
        }
    }
}

impl PathDto {
    pub fn to_path(&self) -> Result<FareyPath> {
        let vs = self
            .vertices
            .iter()
            .map(|s| s.parse::<ExtRational>())
            .collect::<Result<Vec<_>>>()?;
        let path = FareyPath::lift(&vs, self.start)?;
        if self.closed && !path.is_closed() {
            return Err(Error::NotClosed);
        }
        Ok(path)
    }
}

/// {"i0": -3, "j0": -3, "rows": [[...], ...]}
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct WindowDto {
    pub i0: i64,
    pub j0: i64,
    pub rows: Vec<Vec<JsonInt>>,
}

impl From<&TilingWindow> for WindowDto {
    fn from(w: &TilingWindow) -> Self {
        WindowDto {
            i0: w.i_range().0,
            j0: w.j_range().0,
            rows: w.rows().iter().map(|r| wrap(r)).collect(),
        }
    }
}

impl WindowDto {
    pub fn to_window(&self) -> Result<TilingWindow> {
        let rows: Vec<Vec<BigInt>> = self.rows.iter().map(|r| unwrap(r)).collect();
        TilingWindow::from_rows(self.i0, self.j0, rows)
    }
}

/// {"n": 7, "diagonals": [[0, 2], ...]}
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct PolygonDto {
    pub n: usize,
    #[serde(default)]
    pub diagonals: Vec<(usize, usize)>,
}

impl From<&TriangulatedPolygon> for PolygonDto {
    fn from(poly: &TriangulatedPolygon) -> Self {
        PolygonDto {
            n: poly.n(),
            diagonals: poly.diagonals(),
        }
    }
}

impl PolygonDto {
    pub fn to_polygon(&self) -> Result<TriangulatedPolygon> {
        TriangulatedPolygon::from_diagonals(self.n, &self.diagonals)
    }
}

/// Parses a JSON document into any of the DTO types.
pub fn from_json<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Other(format!("malformed JSON: {e}")))
}

/// Serializes a DTO compactly.
pub fn to_json<T: Serialize>(t: &T) -> String {
    serde_json::to_string(t).expect("DTOs serialize infallibly")
}

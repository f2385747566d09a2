//! JSON document schema: every rational is the string `p/q` in lowest terms
//! (`p` when the denominator is 1), cells carry content-hash ids derived from
//! their canonical H-representation, and documents round-trip byte-for-byte
//! after canonicalization.
//!
//! Strict mode rejects unknown fields and non-canonical scalars; lax mode
//! accepts and preserves them.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use polyfan::num::Scalar;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseMode {
    Strict,
    Lax,
}

#[derive(Clone, Debug, thiserror::Error)]
pub enum SchemaError {
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
    /// Well-formed document whose geometric content fails validation.
    #[error("{path}: {message}")]
    Geometry { path: String, message: String },
    #[error("json: {0}")]
    Json(String),
}

fn invalid(path: &str, message: impl Into<String>) -> SchemaError {
    SchemaError::Invalid {
        path: path.to_string(),
        message: message.into(),
    }
}

/// Parses a rational scalar; strict mode requires the canonical form.
pub fn parse_scalar(s: &str, mode: ParseMode, path: &str) -> Result<Scalar, SchemaError> {
    let value =
        Scalar::from_str(s.trim()).map_err(|e| invalid(path, format!("bad rational '{s}': {e}")))?;
    if mode == ParseMode::Strict && format_scalar(&value) != s {
        return Err(invalid(
            path,
            format!("rational '{s}' is not in lowest terms (expected '{}')", format_scalar(&value)),
        ));
    }
    Ok(value)
}

pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse_vector(raw: &[String], mode: ParseMode, path: &str) -> Result<Vec<Scalar>, SchemaError> {
    raw.iter()
        .enumerate()
        .map(|(i, s)| parse_scalar(s, mode, &format!("{path}[{i}]")))
        .collect()
}

pub fn format_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

/// `[normal, offset]` pair, e.g. `[["1","0"],"0"]`.
pub type ConstraintDto = (Vec<String>, String);

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct PolyhedronDto {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inequalities: Vec<ConstraintDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub equalities: Vec<ConstraintDto>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct ComplexDto {
    pub ambient_dim: usize,
    pub cells: Vec<PolyhedronDto>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct FanDto {
    pub ambient_dim: usize,
    pub cones: Vec<PolyhedronDto>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RayChoiceDto {
    /// Content-hash reference to a cone listed in `sigma_prime_extra`.
    pub cone: String,
    pub direction: Vec<String>,
    pub step: String,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SeedDto {
    /// All cells of the finite completion (face closure), with ids.
    pub pi: Vec<PolyhedronDto>,
    /// Content-hash references into `pi` marking the preserved subcomplex.
    pub phi: Vec<String>,
    pub sigma: FanDto,
    /// Cones subdivided away, listed with their ray choices.
    pub ray_choices: Vec<RayChoiceDto>,
    pub class: String,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WindowDto {
    /// Interval box: per-coordinate `[lo, hi]` pairs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub intervals: Option<Vec<(String, String)>>,
    /// Alternative H-representation window.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hrep: Option<PolyhedronDto>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckDto {
    pub name: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CellOutDto {
    pub id: String,
    pub base: String,
    pub chain: Vec<ChainLinkDto>,
    pub hrep: PolyhedronDto,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ChainLinkDto {
    pub cone: String,
    pub parent: String,
    pub ladder_index: u64,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExtendedPointDto {
    pub stratum: String,
    pub coords: Vec<String>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportDto {
    pub checks: Vec<CheckDto>,
    pub cells: Vec<CellOutDto>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transcript: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<ExtendedPointDto>,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", content = "payload", rename_all = "lowercase")]
pub enum Payload {
    Complex(ComplexDto),
    Fan(FanDto),
    Seed(SeedDto),
    Window(WindowDto),
    Report(ReportDto),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Document {
    pub schema_version: String,
    #[serde(flatten)]
    pub payload: Payload,
    #[serde(flatten)]
    pub extra: BTreeMap<String, Value>,
}

impl Document {
    pub fn new(payload: Payload) -> Document {
        Document {
            schema_version: SCHEMA_VERSION.to_string(),
            payload,
            extra: BTreeMap::new(),
        }
    }

    pub fn from_json(text: &str, mode: ParseMode) -> Result<Document, SchemaError> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| SchemaError::Json(e.to_string()))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(invalid(
                "$.schema_version",
                format!("unsupported version '{}'", doc.schema_version),
            ));
        }
        if mode == ParseMode::Strict {
            doc.check_strict()?;
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    fn check_strict(&self) -> Result<(), SchemaError> {
        check_extra(&self.extra, "$")?;
        match &self.payload {
            Payload::Complex(c) => {
                check_extra(&c.extra, "$.payload")?;
                for (i, cell) in c.cells.iter().enumerate() {
                    check_extra(&cell.extra, &format!("$.payload.cells[{i}]"))?;
                }
            }
            Payload::Fan(f) => {
                check_extra(&f.extra, "$.payload")?;
                for (i, cone) in f.cones.iter().enumerate() {
                    check_extra(&cone.extra, &format!("$.payload.cones[{i}]"))?;
                }
            }
            Payload::Seed(s) => {
                check_extra(&s.extra, "$.payload")?;
                for (i, cell) in s.pi.iter().enumerate() {
                    check_extra(&cell.extra, &format!("$.payload.pi[{i}]"))?;
                }
                check_extra(&s.sigma.extra, "$.payload.sigma")?;
                for (i, cone) in s.sigma.cones.iter().enumerate() {
                    check_extra(&cone.extra, &format!("$.payload.sigma.cones[{i}]"))?;
                }
                for (i, rc) in s.ray_choices.iter().enumerate() {
                    check_extra(&rc.extra, &format!("$.payload.ray_choices[{i}]"))?;
                }
            }
            Payload::Window(w) => check_extra(&w.extra, "$.payload")?,
            Payload::Report(r) => check_extra(&r.extra, "$.payload")?,
        }
        Ok(())
    }
}

fn check_extra(extra: &BTreeMap<String, Value>, path: &str) -> Result<(), SchemaError> {
    match extra.keys().next() {
        None => Ok(()),
        Some(k) => Err(invalid(path, format!("unknown field '{k}' (strict mode)"))),
    }
}

/// Stable 64-bit FNV-1a content hash of a canonical H-representation.
pub fn content_hash(p: &polyfan::Polyhedron) -> String {
    let mut text = format!("dim={};", p.ambient_dim());
    for c in p.equalities() {
        text.push_str(&format!("e{:?}={};", format_vector(&c.normal), format_scalar(&c.offset)));
    }
    for c in p.inequalities() {
        text.push_str(&format!("i{:?}>={};", format_vector(&c.normal), format_scalar(&c.offset)));
    }
    let mut h: u64 = 0xcbf29ce484222325;
    for b in text.as_bytes() {
        h ^= u64::from(*b);
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("h{h:016x}")
}

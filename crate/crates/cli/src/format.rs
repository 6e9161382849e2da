//! The JSON curve description format (schema version 1).
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "name": "chain",
//!   "genus": 23,
//!   "components": [
//!     {"id": "C1", "genus": 11, "kind": {"type": "general_pointed"}, "points": ["p1"]},
//!     {"id": "E", "genus": 1,
//!      "kind": {"type": "elliptic", "torsion": [{"p": "p1", "q": "p2", "order": 9}]},
//!      "points": ["p1", "p2"]},
//!     {"id": "C2", "genus": 11, "kind": {"type": "general_pointed"}, "points": ["p2"]}
//!   ],
//!   "nodes": [["C1.p1", "E.p1"], ["E.p2", "C2.p2"]],
//!   "witnesses": {
//!     "w": {"series": {"r": 2, "d": 17},
//!           "aspects": {"C1": {"p1": [4, 9, 13]}, "E": {"p1": [4, 8, 13], "p2": [4, 8, 13]},
//!                       "C2": {"p2": [4, 9, 13]}}}
//!   }
//! }
//! ```
//!
//! Unknown keys are rejected everywhere. A torsion `order` of `null` declares
//! `p - q` non-torsion; an undeclared pair is treated as unknown.

use std::collections::BTreeMap;
use std::fmt;

use bnlimit_core::curves::{self, CompactCurve, Component, ComponentKind};
use bnlimit_core::limit::AspectAssignment;
use bnlimit_core::numerology::SeriesType;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveFile {
    pub schema_version: u32,
    pub name: String,
    pub genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub components: Vec<ComponentFile>,
    pub nodes: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub witnesses: BTreeMap<String, WitnessFile>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentFile {
    pub id: String,
    pub genus: u32,
    pub kind: KindFile,
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum KindFile {
    GeneralPointed {
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        cusp_points: Vec<String>,
    },
    Elliptic {
        #[serde(default)]
        torsion: Vec<TorsionFile>,
    },
    FactSheet {
        #[serde(default)]
        facts: Vec<FactFile>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        gonality: Option<u32>,
        #[serde(default)]
        general_points: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsionFile {
    pub p: String,
    pub q: String,
    pub order: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactFile {
    pub r: u32,
    pub d: u32,
    pub dim: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub r: u32,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessFile {
    pub series: SeriesFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// component id -> point name -> vanishing sequence
    pub aspects: BTreeMap<String, BTreeMap<String, Vec<u32>>>,
}

#[derive(Debug)]
pub enum FormatError {
    Json(serde_json::Error),
    Version(u32),
    Curve(bnlimit_core::Error),
    Node(String),
    Witness(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Json(e) => write!(f, "malformed curve description: {e}"),
            FormatError::Version(v) => write!(f, "unsupported schema_version {v} (expected {SCHEMA_VERSION})"),
            FormatError::Curve(e) => write!(f, "{e}"),
            FormatError::Node(s) => write!(f, "node endpoint `{s}` is not of the form component.point"),
            FormatError::Witness(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<bnlimit_core::Error> for FormatError {
    fn from(e: bnlimit_core::Error) -> Self {
        FormatError::Curve(e)
    }
}

fn split_point(s: &str) -> Result<(&str, &str), FormatError> {
    s.split_once('.').filter(|(c, p)| !c.is_empty() && !p.is_empty()).ok_or_else(|| FormatError::Node(s.into()))
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let file: CurveFile = serde_json::from_str(text).map_err(FormatError::Json)?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(FormatError::Version(file.schema_version));
        }
        Ok(file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve descriptions always serialize")
    }

    pub fn to_curve(&self) -> Result<CompactCurve, FormatError> {
        let components = self.components.iter().map(ComponentFile::to_component).collect();
        let mut ends = Vec::with_capacity(self.nodes.len());
        for [a, b] in &self.nodes {
            ends.push((split_point(a)?, split_point(b)?));
        }
        Ok(CompactCurve::new(self.name.clone(), self.genus, components, &ends)?)
    }

    pub fn witness_names(&self) -> impl Iterator<Item = &str> {
        self.witnesses.keys().map(String::as_str)
    }

    /// Resolves a named witness against the curve.
    pub fn witness(&self, curve: &CompactCurve, name: &str) -> Result<(SeriesType, AspectAssignment), FormatError> {
        let w = self.witnesses.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.witness_names().collect();
            FormatError::Witness(format!("no witness `{name}` (available: {})", known.join(", ")))
        })?;
        let t = SeriesType::new(curve.genus(), w.series.r, w.series.d)?;
        let mut out = AspectAssignment::new();
        for (cid, points) in &w.aspects {
            for (pid, entries) in points {
                out.set(curve, cid, pid, entries.clone(), t.d)?;
            }
        }
        Ok((t, out))
    }

    /// Sets the torsion order of every declared pair on `component`.
    pub fn set_torsion(&mut self, component: &str, order: Option<u32>) -> Result<(), FormatError> {
        let c = self
            .components
            .iter_mut()
            .find(|c| c.id == component)
            .ok_or_else(|| FormatError::Witness(format!("no component `{component}`")))?;
        match &mut c.kind {
            KindFile::Elliptic { torsion } => {
                for t in torsion {
                    t.order = order;
                }
                Ok(())
            }
            _ => Err(FormatError::Witness(format!("component `{component}` is not elliptic"))),
        }
    }
}

impl ComponentFile {
    fn to_component(&self) -> Component {
        let kind = match &self.kind {
            KindFile::GeneralPointed { cusp_points } => ComponentKind::GeneralPointed { cusp_points: cusp_points.clone() },
            KindFile::Elliptic { torsion } => ComponentKind::Elliptic {
                torsion: torsion
                    .iter()
                    .map(|t| curves::TorsionPair { p: t.p.clone(), q: t.q.clone(), order: t.order })
                    .collect(),
            },
            KindFile::FactSheet { facts, gonality, general_points } => ComponentKind::FactSheet(curves::FactSheet {
                facts: facts.iter().map(|f| curves::Fact { r: f.r, d: f.d, dim: f.dim }).collect(),
                gonality: *gonality,
                general_points: *general_points,
            }),
        };
        Component { id: self.id.clone(), genus: self.genus, kind, points: self.points.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "schema_version": 1, "name": "pt", "genus": 3,
        "components": [{"id": "C", "genus": 3, "kind": {"type": "general_pointed"}, "points": []}],
        "nodes": []
    }"#;

    #[test]
    fn minimal_parses() {
        let f = CurveFile::parse(MINIMAL).unwrap();
        let c = f.to_curve().unwrap();
        assert_eq!(c.genus(), 3);
    }

    #[test]
    fn unknown_keys_rejected() {
        let bad = MINIMAL.replace("\"nodes\": []", "\"nodes\": [], \"extra\": 1");
        assert!(matches!(CurveFile::parse(&bad), Err(FormatError::Json(_))));
        let bad = MINIMAL.replace("{\"type\": \"general_pointed\"}", "{\"type\": \"general_pointed\", \"torsion\": []}");
        assert!(matches!(CurveFile::parse(&bad), Err(FormatError::Json(_))));
    }

    #[test]
    fn version_checked() {
        let bad = MINIMAL.replace("\"schema_version\": 1", "\"schema_version\": 2");
        assert!(matches!(CurveFile::parse(&bad), Err(FormatError::Version(2))));
    }

    #[test]
    fn malformed_node() {
        assert!(split_point("C1").is_err());
        assert!(split_point(".p").is_err());
        assert_eq!(split_point("C1.p1").unwrap(), ("C1", "p1"));
    }
}

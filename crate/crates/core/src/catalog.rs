//! The catalog of pairs with expected verdicts, stored as JSON:
//!
//! ```json
//! {"version": 1, "entries": [
//!   {"id": "pp-F5", "spec": "upq R 2 1 3 0",
//!    "expected": {"qp": "yes", "pp": "yes", "bb": "yes"},
//!    "source": "...", "aliases": []}
//! ]}
//! ```
//!
//! Specs and aliases are canonicalised on load, so a loaded catalog
//! serialises to canonical, byte-stable JSON.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::criteria::verify::ReportLine;
use crate::criteria::{classify, Flag, Tri};
use crate::families::PairSpec;

/// The catalog shipped with the crate.
pub const SHIPPED: &str = include_str!("../data/catalog.json");

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("cannot read catalog {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("catalog is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported catalog version {0} (expected 1)")]
    Version(u32),
    #[error("entry {id}: {message}")]
    Entry { id: String, message: String },
}

/// Expected verdicts of one entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub qp: Tri,
    pub pp: Tri,
    pub bb: Tri,
}

impl Expected {
    pub fn get(&self, flag: Flag) -> Tri {
        match flag {
            Flag::Qp => self.qp,
            Flag::Pp => self.pp,
            Flag::Bb => self.bb,
        }
    }
}

/// One catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    #[serde(with = "spec_string")]
    pub spec: PairSpec,
    pub expected: Expected,
    pub source: String,
    #[serde(default, with = "spec_strings")]
    pub aliases: Vec<PairSpec>,
}

/// A catalog file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub version: u32,
    pub entries: Vec<CatalogEntry>,
}

mod spec_string {
    use super::PairSpec;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(spec: &PairSpec, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&spec.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<PairSpec, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|e| D::Error::custom(format!("spec {s:?}: {e}")))
    }
}

mod spec_strings {
    use super::PairSpec;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(specs: &[PairSpec], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(specs.len()))?;
        for spec in specs {
            seq.serialize_element(&spec.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<PairSpec>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| s.parse().map_err(|e| D::Error::custom(format!("alias {s:?}: {e}"))))
            .collect()
    }
}

impl Catalog {
    /// Parses and validates a catalog.
    pub fn from_json(text: &str) -> Result<Catalog, CatalogError> {
        let catalog: Catalog = serde_json::from_str(text).map_err(|e| {
            // Name the offending entry when the error lies inside one.
            let entry = serde_json::from_str::<serde_json::Value>(text).ok().and_then(|v| {
                v.get("entries")?.as_array()?.iter().find_map(|e| {
                    let parsed: Result<CatalogEntry, _> = serde_json::from_value(e.clone());
                    parsed
                        .err()
                        .map(|err| (e.get("id").and_then(|i| i.as_str()).unwrap_or("?").to_string(), err))
                })
            });
            match entry {
                Some((id, err)) => CatalogError::Entry {
                    id,
                    message: err.to_string(),
                },
                None => CatalogError::Json(e),
            }
        })?;
        catalog.validate()?;
        Ok(catalog)
    }

    /// Reads a catalog file.
    pub fn load(path: &Path) -> Result<Catalog, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Catalog::from_json(&text)
    }

    /// The catalog shipped with the crate.
    pub fn shipped() -> Catalog {
        Catalog::from_json(SHIPPED).expect("shipped catalog is valid")
    }

    /// Canonical pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("catalog serialises");
        s.push('\n');
        s
    }

    /// Version 1, unique ids, and expectations that respect
    /// `(BB) ⇒ (PP) ⇒ (QP)`.
    pub fn validate(&self) -> Result<(), CatalogError> {
        if self.version != 1 {
            return Err(CatalogError::Version(self.version));
        }
        let mut ids = HashSet::new();
        for e in &self.entries {
            let err = |message: &str| CatalogError::Entry {
                id: e.id.clone(),
                message: message.into(),
            };
            if e.id.is_empty() {
                return Err(err("empty id"));
            }
            if !ids.insert(e.id.as_str()) {
                return Err(err("duplicate id"));
            }
            let x = e.expected;
            if x.bb == Tri::Yes && x.pp != Tri::Yes || x.pp == Tri::Yes && x.qp != Tri::Yes {
                return Err(err("expected verdicts violate (BB) => (PP) => (QP)"));
            }
        }
        Ok(())
    }

    /// Classifies every entry and alias and compares with the expected
    /// verdicts; three lines (qp, pp, bb) per spec, in catalog order.
    pub fn report(&self) -> Vec<ReportLine> {
        let mut lines = Vec::new();
        for e in &self.entries {
            let specs =
                std::iter::once((e.id.clone(), e.spec)).chain(e.aliases.iter().map(|a| (format!("{}~{a}", e.id), *a)));
            for (id, spec) in specs {
                let verdict = classify(&spec);
                for flag in Flag::ALL {
                    let (computed, witness) = match &verdict {
                        Ok(v) => {
                            let rule = v
                                .provenance
                                .iter()
                                .find(|p| p.flag == Some(flag))
                                .map(|p| p.rule_id.clone())
                                .unwrap_or_default();
                            (v.get(flag).to_string(), format!("{spec} [{rule}]"))
                        }
                        Err(err) => (format!("error: {err}"), spec.to_string()),
                    };
                    lines.push(ReportLine::compare(
                        id.clone(),
                        flag.as_str(),
                        computed,
                        e.expected.get(flag),
                        witness,
                    ));
                }
            }
        }
        lines
    }
}

//! Known existence/nonexistence facts about SRG parameter sets, imported
//! from the literature with citations.
//!
//! The database stores only externally sourced primitive facts. Anything the
//! engine can derive (bounds, descent, projection chains) is always
//! re-derived so that certificates cite arithmetic, not cached conclusions.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::parse_u64;
use crate::srg::{complement, SrgParams};

/// Recorded existence status of a parameter set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SrgStatus {
    Exists,
    NotExists,
    Open,
}

impl SrgStatus {
    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "E" => Some(SrgStatus::Exists),
            "N" => Some(SrgStatus::NotExists),
            "O" => Some(SrgStatus::Open),
            _ => None,
        }
    }

    pub fn token(&self) -> &'static str {
        match self {
            SrgStatus::Exists => "E",
            SrgStatus::NotExists => "N",
            SrgStatus::Open => "O",
        }
    }
}

impl std::fmt::Display for SrgStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SrgStatus::Exists => write!(f, "Exists"),
            SrgStatus::NotExists => write!(f, "NotExists"),
            SrgStatus::Open => write!(f, "Open"),
        }
    }
}

/// One database fact: a parameter set, its status, and the citation the
/// status rests on. `Exists` and `NotExists` always carry a source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SrgRecord {
    pub params: SrgParams,
    pub status: SrgStatus,
    pub source: String,
}

/// A lookup result: the matching record plus whether the match went through
/// the complement (statuses transfer under complementation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DbHit {
    pub record: SrgRecord,
    pub via_complement: bool,
}

/// Immutable collection of [`SrgRecord`]s keyed by parameter set.
#[derive(Debug, Clone, Default)]
pub struct SrgDatabase {
    records: BTreeMap<SrgParams, SrgRecord>,
}

const SEED: &str = include_str!("../../data/srg_seed.db");

impl SrgDatabase {
    /// The bundled seed facts compiled into the binary.
    pub fn seed() -> Self {
        SrgDatabase::parse(SEED).expect("bundled seed database is well-formed")
    }

    /// Parses the text format: one `v k lambda mu status source` record per
    /// line, status in {E, N, O}, `#` starting a comment, blank lines
    /// ignored. The source is everything after the status token.
    pub fn parse(text: &str) -> Result<Self> {
        let mut records = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::Parse {
                kind: "srg database",
                reason: format!("line {}: {}", idx + 1, reason),
            };
            let mut tokens = line.split_whitespace();
            let mut field = |name: &str| {
                tokens
                    .next()
                    .map(str::to_owned)
                    .ok_or_else(|| err(format!("missing {name} field")))
            };
            let v = parse_u64(&field("v")?, "database v field")?;
            let k = parse_u64(&field("k")?, "database k field")?;
            let lambda = parse_u64(&field("lambda")?, "database lambda field")?;
            let mu = parse_u64(&field("mu")?, "database mu field")?;
            let status_tok = field("status")?;
            let status = SrgStatus::from_token(&status_tok)
                .ok_or_else(|| err(format!("unknown status {status_tok:?} (want E, N, or O)")))?;
            let source = tokens.collect::<Vec<_>>().join(" ");
            if source.is_empty() && status != SrgStatus::Open {
                return Err(err(format!(
                    "status {} requires a source citation",
                    status.token()
                )));
            }
            let params = SrgParams::new(v, k, lambda, mu);
            if records.contains_key(&params) {
                return Err(err(format!("duplicate record for {params}")));
            }
            records.insert(
                params,
                SrgRecord {
                    params,
                    status,
                    source,
                },
            );
        }
        Ok(SrgDatabase { records })
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        SrgDatabase::parse(&text)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &SrgRecord> {
        self.records.values()
    }

    /// Finds the record for `p`, falling back to `complement(p)` since a
    /// graph exists iff its complement does. Absent both, returns an `Open`
    /// record with an empty source.
    pub fn lookup(&self, p: &SrgParams) -> DbHit {
        if let Some(record) = self.records.get(p) {
            return DbHit {
                record: record.clone(),
                via_complement: false,
            };
        }
        if let Ok(c) = complement(p) {
            if let Some(record) = self.records.get(&c) {
                return DbHit {
                    record: record.clone(),
                    via_complement: true,
                };
            }
        }
        DbHit {
            record: SrgRecord {
                params: *p,
                status: SrgStatus::Open,
                source: String::new(),
            },
            via_complement: false,
        }
    }
}

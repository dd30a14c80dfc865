//! The corpus manifest: named ring constructions with expected invariants,
//! plus the parameter grids of the verification suites.

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use super::constructors::*;
use crate::error::{Result, RingError};
use crate::exterior::build_exterior;
use crate::finring::{Limits, Ring};

const BUILTIN: &str = include_str!("../../data/corpus.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Constructor {
    Zmod { m: u64 },
    Gf { p: u64, k: u32, poly: Vec<u64> },
    Matrix { base: String, d: usize },
    UpperTriangular { base: String, d: usize },
    Product { left: String, right: String },
    Exterior { base: String, n: u32 },
}

/// Invariants an entry is expected to have. `source` says where the values
/// come from (published example, hand computation, elementary arithmetic).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub size: Option<u128>,
    pub characteristic: Option<u64>,
    pub center_size: Option<usize>,
    pub commutative: Option<bool>,
    pub centrally_essential: Option<bool>,
    pub source: Option<String>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    #[default]
    Fast,
    Slow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub name: String,
    pub build: Constructor,
    #[serde(default)]
    pub expect: Expected,
    #[serde(default)]
    pub tier: Tier,
}

/// Base rings and exterior ranks for the exterior-algebra equivalence runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExteriorGrid {
    pub bases: Vec<String>,
    pub n: Vec<u32>,
    pub max_size: u128,
}

/// Prime fields and ranks for the parity sweep. Sizes above `slow_above`
/// only run in the slow tier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParityGrid {
    pub primes: Vec<u64>,
    pub n: Vec<u32>,
    pub max_size: u128,
    pub slow_above: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub entries: Vec<CorpusEntry>,
    pub exterior_grid: ExteriorGrid,
    pub parity_grid: ParityGrid,
}

/// A manifest with memoized ring construction.
pub struct Corpus {
    manifest: Manifest,
    limits: Limits,
    built: Mutex<BTreeMap<String, Ring>>,
}

impl Corpus {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN).expect("checked-in manifest parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let manifest: Manifest =
            serde_json::from_str(text).map_err(|e| RingError::Parse(e.to_string()))?;
        let mut seen = std::collections::BTreeSet::new();
        for e in &manifest.entries {
            if !seen.insert(e.name.as_str()) {
                return Err(RingError::Parse(format!("duplicate entry `{}`", e.name)));
            }
        }
        Ok(Corpus {
            manifest,
            limits: Limits::default(),
            built: Mutex::new(BTreeMap::new()),
        })
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self.built.lock().unwrap().clear();
        self
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn manifest(&self) -> &Manifest {
        &self.manifest
    }

    pub fn entries(&self) -> &[CorpusEntry] {
        &self.manifest.entries
    }

    pub fn entry(&self, name: &str) -> Result<&CorpusEntry> {
        self.manifest
            .entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| RingError::UnknownEntry(name.to_string()))
    }

    /// Builds (or returns the memoized) ring of a named entry.
    pub fn ring(&self, name: &str) -> Result<Ring> {
        if let Some(r) = self.built.lock().unwrap().get(name) {
            return Ok(r.clone());
        }
        let entry = self.entry(name)?.clone();
        let ring = match &entry.build {
            Constructor::Zmod { m } => make_zmod(*m)?.with_limits(self.limits),
            Constructor::Gf { p, k, poly } => make_gf(*p, *k, poly)?.with_limits(self.limits),
            Constructor::Matrix { base, d } => make_matrix_ring(&self.ring(base)?, *d)?,
            Constructor::UpperTriangular { base, d } => {
                make_upper_triangular(&self.ring(base)?, *d)?
            }
            Constructor::Product { left, right } => {
                make_direct_product(&self.ring(left)?, &self.ring(right)?)?
            }
            Constructor::Exterior { base, n } => build_exterior(&self.ring(base)?, *n)?,
        }
        .renamed(name)
        .with_limits(self.limits);
        self.built
            .lock()
            .unwrap()
            .insert(name.to_string(), ring.clone());
        Ok(ring)
    }

    /// Names of entries in manifest order, leaving out the slow tier unless
    /// asked for.
    pub fn names(&self, include_slow: bool) -> Vec<String> {
        self.manifest
            .entries
            .iter()
            .filter(|e| include_slow || e.tier == Tier::Fast)
            .map(|e| e.name.clone())
            .collect()
    }
}

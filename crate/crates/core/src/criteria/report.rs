use serde::Serialize;

use crate::central::{center, is_centrally_essential};
use crate::error::Result;
use crate::finring::{
    idempotents, jacobson_radical, structural_predicates, Element, PredicateRecord, Ring,
};

pub(crate) fn coords(e: &Element) -> Vec<u32> {
    e.coords().to_vec()
}

/// One instance check. `agreement` is `fast == oracle` whenever both ran.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub ring: String,
    pub n: Option<u32>,
    pub fast: Option<bool>,
    pub oracle: Option<bool>,
    pub agreement: Option<bool>,
    pub passed: bool,
    pub skipped: bool,
    pub witnesses: Vec<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl TheoremReport {
    pub fn new(theorem: &str, ring: &str, n: Option<u32>) -> Self {
        TheoremReport {
            theorem: theorem.to_string(),
            ring: ring.to_string(),
            n,
            fast: None,
            oracle: None,
            agreement: None,
            passed: true,
            skipped: false,
            witnesses: Vec::new(),
            note: None,
            elapsed_ms: None,
        }
    }

    /// Records both verdicts; the check passes iff they agree.
    pub fn compare(mut self, fast: bool, oracle: bool) -> Self {
        self.fast = Some(fast);
        self.oracle = Some(oracle);
        self.agreement = Some(fast == oracle);
        self.passed = fast == oracle;
        self
    }

    pub fn verdict(mut self, ok: bool) -> Self {
        self.fast = Some(ok);
        self.passed = ok;
        self
    }

    pub fn skip(mut self, why: impl Into<String>) -> Self {
        self.skipped = true;
        self.note = Some(why.into());
        self
    }

    pub fn fail(mut self, why: impl Into<String>) -> Self {
        self.passed = false;
        self.note = Some(why.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn witness(mut self, w: Option<&Element>) -> Self {
        self.witnesses.extend(w.map(coords));
        self
    }
}

/// Computed invariants and predicate outcomes of one ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub name: String,
    pub size: usize,
    pub characteristic: u64,
    pub center_size: usize,
    pub centrally_essential: bool,
    pub witness: Option<Vec<u32>>,
    pub idempotents: usize,
    pub radical_size: usize,
    pub predicates: PredicateRecord,
}

pub fn classify(ring: &Ring) -> Result<ClassificationReport> {
    let ce = is_centrally_essential(ring)?;
    Ok(ClassificationReport {
        name: ring.name().to_string(),
        size: ring.size()?,
        characteristic: ring.characteristic(),
        center_size: center(ring)?.len(),
        centrally_essential: ce.essential,
        witness: ce.witness.as_ref().map(coords),
        idempotents: idempotents(ring)?.len(),
        radical_size: jacobson_radical(ring)?.len(),
        predicates: structural_predicates(ring)?,
    })
}

//! Experimental probes of questions that are open for centrally essential
//! rings in general. Probes never assert; they only record what they find.

use serde::Serialize;

use crate::central::{center, center_plus, is_centrally_essential, socle_c_module};
use crate::error::{Result, RingError};
use crate::finring::{
    is_commutative, jacobson_radical, prime_radical, quotient_ring, socle_right, Ring,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientFinding {
    pub quotient_size: usize,
    pub commutative: bool,
}

/// For finite rings `N(R) = J(R)`, so the question about `R/N(R)` is the
/// question about `R/J(R)`. `prime_radical_is_jacobson` records that the
/// post-checked prime radical coincided with `J(R)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CollapseFinding {
    pub collapses_to: &'static str,
    pub prime_radical_is_jacobson: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum SocleFinding {
    Computed {
        socle_over_center: usize,
        socle_right: usize,
        equal: bool,
    },
    Skipped {
        reason: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverFinding {
    pub ring_size: usize,
    pub center_size: usize,
    pub radical_size: usize,
    pub intersection_size: usize,
    pub sum_size: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub ring: String,
    pub q1: QuotientFinding,
    pub q2: CollapseFinding,
    pub q3: SocleFinding,
    pub q4: CoverFinding,
}

/// Runs the probes on a centrally essential finite ring.
///
/// Q1: is `R/J` commutative. Q2: reported as collapsing into Q1. Q3: do the
/// socles of `R` over `C` and over `R` coincide (skipped above the socle
/// cap). Q4: is `R = C + J(R)`.
pub fn open_question_probe(ring: &Ring) -> Result<ProbeReport> {
    if !is_centrally_essential(ring)?.essential {
        return Err(RingError::PreconditionViolated(format!(
            "probes need a centrally essential ring; {} is not",
            ring.name()
        )));
    }
    let n = ring.size()?;
    let j = jacobson_radical(ring)?;
    let q = quotient_ring(ring, &j)?;
    let q1 = QuotientFinding {
        quotient_size: q.size()?,
        commutative: is_commutative(&q),
    };
    let q2 = CollapseFinding {
        collapses_to: "q1",
        prime_radical_is_jacobson: prime_radical(ring)? == j,
    };

    let cap = ring.limits().socle_cap;
    let q3 = if n as u64 > cap {
        SocleFinding::Skipped {
            reason: format!("ring size {n} exceeds socle cap {cap}"),
        }
    } else {
        let sc = socle_c_module(ring)?;
        let sr = socle_right(ring)?;
        SocleFinding::Computed {
            socle_over_center: sc.len(),
            socle_right: sr.len(),
            equal: sc.set() == sr.set(),
        }
    };

    let c = center(ring)?;
    let sum = center_plus(ring, &j)?;
    let q4 = CoverFinding {
        ring_size: n,
        center_size: c.len(),
        radical_size: j.len(),
        intersection_size: c.set().intersection_len(j.set()),
        sum_size: sum.len(),
        holds: sum.len() == n,
    };
    Ok(ProbeReport {
        ring: ring.name().to_string(),
        q1,
        q2,
        q3,
        q4,
    })
}

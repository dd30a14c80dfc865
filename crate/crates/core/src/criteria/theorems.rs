//! Executable forms of the structure theorems for centrally essential rings.
//!
//! The fast criteria only look at the base ring. Whenever a proved statement
//! fails on a concrete ring the result is [`RingError::TheoremViolated`],
//! which always points at a defect here rather than at the mathematics.

use serde::Serialize;

use crate::central::{center, is_centrally_essential, is_essential_c_submodule, Essentiality};
use crate::error::{Result, RingError};
use crate::finring::{
    annihilator_of_int, idempotents, jacobson_radical, quotient_ring, structural_predicates,
    subring, Element, PredicateRecord, Ring,
};

fn violated(theorem: &str, ring: &Ring, detail: impl Into<String>) -> RingError {
    RingError::TheoremViolated {
        theorem: theorem.into(),
        ring: ring.name().into(),
        detail: detail.into(),
    }
}

fn require_centrally_essential(ring: &Ring, what: &str) -> Result<()> {
    if is_centrally_essential(ring)?.essential {
        Ok(())
    } else {
        Err(RingError::PreconditionViolated(format!(
            "{what} needs a centrally essential ring; {} is not",
            ring.name()
        )))
    }
}

pub fn is_power_of_two(s: u64) -> bool {
    s.is_power_of_two()
}

/// Whether `Ann_A(2)` is an essential `C`-submodule of `A`.
pub fn ann2_essential(a: &Ring) -> Result<Essentiality> {
    is_essential_c_submodule(&annihilator_of_int(a, 2)?)
}

/// Both sides of the characteristic criterion: `Ann_A(2)` is essential over
/// the center iff the characteristic is a power of two.
pub fn lemma22_check(a: &Ring) -> Result<(bool, bool)> {
    Ok((
        ann2_essential(a)?.essential,
        is_power_of_two(a.characteristic()),
    ))
}

/// Predicts whether `Λ(A^n)` is centrally essential without building it:
/// `A` must be centrally essential, and either `n` is odd or `Ann_A(2)` is
/// essential over the center.
pub fn thm13_check(a: &Ring, n: u32) -> Result<bool> {
    if !is_centrally_essential(a)?.essential {
        return Ok(false);
    }
    Ok(n % 2 == 1 || ann2_essential(a)?.essential)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thm14Verdict {
    /// Centrally essential base and (characteristic a power of two or `n` odd).
    pub part1: bool,
    /// For bases without zero divisors: centrally essential base and
    /// (characteristic 2 or `n` odd).
    pub part2: Option<bool>,
}

/// The characteristic form of the exterior-algebra criterion. When `A` has
/// no zero divisors the sharper form is evaluated too and must agree.
pub fn thm14_check(a: &Ring, n: u32) -> Result<Thm14Verdict> {
    let ce = is_centrally_essential(a)?.essential;
    let s = a.characteristic();
    let part1 = ce && (is_power_of_two(s) || n % 2 == 1);
    let domain = crate::finring::zero_divisor_witness(a)?.is_none();
    let part2 = domain.then_some(ce && (s == 2 || n % 2 == 1));
    if let Some(p2) = part2 {
        if p2 != part1 {
            return Err(violated(
                "thm14",
                a,
                format!("domain form gives {p2}, characteristic form gives {part1} at n = {n}"),
            ));
        }
    }
    Ok(Thm14Verdict { part1, part2 })
}

/// Least idempotent that is not central, if any. Requires a centrally
/// essential ring, where none can exist.
pub fn prop24_check(a: &Ring) -> Result<Option<Element>> {
    require_centrally_essential(a, "the idempotent check")?;
    let c = center(a)?;
    Ok(idempotents(a)?.into_iter().find(|e| !c.contains(e)))
}

/// The five conditions that coincide on centrally essential rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prop28Report {
    pub ring: PredicateRecord,
    pub center: PredicateRecord,
    pub centrally_essential: bool,
    /// semiprime, center semiprime, reduced, right nonsingular, commutative
    /// and reduced.
    pub conditions: [bool; 5],
}

impl Prop28Report {
    pub fn agree(&self) -> bool {
        self.conditions.iter().all(|&c| c == self.conditions[0])
    }
}

/// Evaluates the five conditions independently; the center's predicates come
/// from a table ring built on the center. Disagreement on a centrally
/// essential ring is a violation.
pub fn prop28_report(a: &Ring) -> Result<Prop28Report> {
    let rec = structural_predicates(a)?;
    let c = center(a)?;
    let c_ring = subring(a, c.set(), format!("C({})", a.name()))?;
    let crec = structural_predicates(&c_ring)?;
    let ce = is_centrally_essential(a)?.essential;
    let report = Prop28Report {
        ring: rec,
        center: crec,
        centrally_essential: ce,
        conditions: [
            rec.semiprime,
            crec.semiprime,
            rec.reduced,
            rec.right_nonsingular,
            rec.commutative && rec.reduced,
        ],
    };
    if ce && !report.agree() {
        return Err(violated(
            "prop28",
            a,
            format!("conditions disagree: {:?}", report.conditions),
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thm15Report {
    pub radical_size: usize,
    pub quotient_size: usize,
    pub commutative: bool,
    pub regular: bool,
}

/// Builds `R/J(R)` for a centrally essential finite ring and checks that it
/// is commutative and regular.
pub fn thm15_part1_check(a: &Ring) -> Result<Thm15Report> {
    require_centrally_essential(a, "the R/J check")?;
    let j = jacobson_radical(a)?;
    let q = quotient_ring(a, &j)?;
    let rec = structural_predicates(&q)?;
    let report = Thm15Report {
        radical_size: j.len(),
        quotient_size: q.size()?,
        commutative: rec.commutative,
        regular: rec.regular,
    };
    if !(report.commutative && report.regular) {
        return Err(violated(
            "thm15",
            a,
            format!(
                "R/J has commutative = {}, regular = {}",
                report.commutative, report.regular
            ),
        ));
    }
    Ok(report)
}

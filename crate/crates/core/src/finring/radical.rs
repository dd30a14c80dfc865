//! Idempotents, units and the radicals of a finite ring.

use rayon::prelude::*;

use super::predicates;
use super::quotient::quotient_ring;
use super::ring::{Coords, Element, Ring};
use super::set::ElementSet;
use super::submodule::{close, Action, SubgroupBuilder, Submodule, SubmoduleKind};
use crate::error::{Result, RingError};

/// All `e` with `e*e = e`, in lexicographic order.
pub fn idempotents(ring: &Ring) -> Result<Vec<Element>> {
    let n = ring.scan_size("idempotent scan")?;
    let idx: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&i| {
            let x = ring.decode(i);
            ring.mul_c(&x, &x) == x
        })
        .collect();
    Ok(idx.into_iter().map(|i| ring.element_at(i)).collect())
}

/// True if `x` has a left inverse, which in a finite ring makes it a unit.
pub fn is_unit(ring: &Ring, x: &Element) -> Result<bool> {
    ring.check(x)?;
    let n = ring.scan_size("unit test")?;
    Ok(is_unit_c(ring, x.coords(), n))
}

fn is_unit_c(ring: &Ring, x: &[u32], n: usize) -> bool {
    let one = ring.one_coords();
    (0..n)
        .into_par_iter()
        .any(|i| ring.mul_c(&ring.decode(i), x).as_slice() == one)
}

/// The group of units as an element set.
pub fn units(ring: &Ring) -> Result<ElementSet> {
    let n = ring.scan_size("unit scan")?;
    let idx: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&i| {
            let x = ring.decode(i);
            let one = ring.one_coords();
            (0..n).any(|j| ring.mul_c(&ring.decode(j), &x).as_slice() == one)
        })
        .collect();
    Ok(ElementSet::from_sorted(n, idx))
}

/// Number of squarings after which every nilpotent element of a ring of this
/// order has vanished. The nilpotency index is at most the composition length,
/// which is at most `log2 |R|`.
fn squaring_rounds(order: u128) -> u32 {
    let len = 128 - order.leading_zeros();
    let mut rounds = 0;
    while (1u128 << rounds) < len as u128 {
        rounds += 1;
    }
    rounds
}

fn nilpotent_c(ring: &Ring, x: &[u32], rounds: u32) -> bool {
    let mut p: Coords = x.into();
    for _ in 0..rounds {
        if Ring::is_zero_c(&p) {
            return true;
        }
        p = ring.mul_c(&p, &p);
    }
    Ring::is_zero_c(&p)
}

pub fn is_nilpotent(ring: &Ring, x: &Element) -> Result<bool> {
    ring.check(x)?;
    Ok(nilpotent_c(ring, x.coords(), squaring_rounds(ring.order())))
}

/// The Jacobson radical `J(R)`.
///
/// In a finite ring `J(R)` is the set of `x` for which the left ideal `Rx`
/// is nil, which coincides with `{x : 1 - rx is a unit for every r}`. The
/// scan uses that `J(R)` is an additive subgroup: every confirmed member
/// grows the known subgroup, and every rejected `x` rules out its whole coset
/// of the known part, so only a handful of elements need the full `O(|R|)`
/// test.
pub fn jacobson_radical(ring: &Ring) -> Result<Submodule> {
    let n = ring.scan_size("Jacobson radical")?;
    if let Some(set) = ring.cache().jacobson.get() {
        return Ok(Submodule::from_set(
            ring,
            SubmoduleKind::TwoSidedIdeal,
            set.clone(),
        ));
    }
    let rounds = squaring_rounds(ring.order());
    let mut known = SubgroupBuilder::new(ring, n);
    let mut rejected = vec![false; n];
    for i in 0..n {
        if known.contains(i) || rejected[i] {
            continue;
        }
        let x = ring.decode(i);
        let in_radical = (0..n)
            .into_par_iter()
            .all(|r| nilpotent_c(ring, &ring.mul_c(&ring.decode(r), &x), rounds));
        if in_radical {
            known.insert(&x);
        } else {
            for j in 0..known.len() {
                let m = ring.add_c(&x, &ring.decode(known.member(j)));
                rejected[ring.encode(&m)] = true;
            }
        }
    }
    let set = known.finish();
    let _ = ring.cache().jacobson.set(set.clone());
    Ok(Submodule::from_set(ring, SubmoduleKind::TwoSidedIdeal, set))
}

/// Additive span of all products `a*b` with `a` in `left`, `b` in `right`.
pub fn ideal_product(left: &Submodule, right: &Submodule) -> Result<Submodule> {
    let ring = left.ring();
    ring.check(&right.ring().zero())?;
    let lg = left.generator_coords();
    let rg = right.generator_coords();
    let products = lg
        .iter()
        .flat_map(|a| rg.iter().map(move |b| ring.mul_c(a, b)))
        .collect::<Vec<_>>();
    let kind = match (left.kind(), right.kind()) {
        (SubmoduleKind::TwoSidedIdeal, SubmoduleKind::TwoSidedIdeal) => {
            SubmoduleKind::TwoSidedIdeal
        }
        _ => SubmoduleKind::AdditiveSubgroup,
    };
    let (set, _) = close(ring, products, Action::Nothing)?;
    Ok(Submodule::from_set(ring, kind, set))
}

/// Least `t >= 1` with `I^t = 0`, or `None` when the powers stabilise at a
/// nonzero ideal.
pub fn nilpotency_index(ideal: &Submodule) -> Result<Option<usize>> {
    let mut power = ideal.clone();
    let mut t = 1;
    loop {
        if power.is_zero() {
            return Ok(Some(t));
        }
        let next = ideal_product(&power, ideal)?;
        if next.len() == power.len() {
            return Ok(None);
        }
        power = next;
        t += 1;
    }
}

/// The prime radical `N(R)`.
///
/// A finite ring is Artinian, so `N(R) = J(R)`. The result is returned only
/// after checking that it is nilpotent and that the quotient is semiprime.
pub fn prime_radical(ring: &Ring) -> Result<Submodule> {
    let j = jacobson_radical(ring)?;
    match nilpotency_index(&j)? {
        Some(t) if t <= j.len() => {}
        _ => {
            return Err(RingError::PostcheckFailed(format!(
                "J({}) is not nilpotent",
                ring.name()
            )))
        }
    }
    let q = quotient_ring(ring, &j)?;
    if predicates::semiprime_witness(&q)?.is_some() {
        return Err(RingError::PostcheckFailed(format!(
            "{}/J is not semiprime",
            ring.name()
        )));
    }
    Ok(j)
}

/// True if `R/J(R)` is a division ring, i.e. `R` is local.
pub fn is_local(ring: &Ring) -> Result<bool> {
    let j = jacobson_radical(ring)?;
    let q = quotient_ring(ring, &j)?;
    let n = q.size()?;
    Ok((1..n).all(|i| is_unit_c(&q, &q.decode(i), n)))
}

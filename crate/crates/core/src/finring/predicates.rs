//! Structural predicates decided by exhaustive scans.
//!
//! Every witness-returning scan reports the lexicographically least witness,
//! independent of the number of worker threads.

use rayon::prelude::*;
use serde::Serialize;

use super::ring::{Element, Ring};
use super::set::ElementSet;
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PredicateRecord {
    pub commutative: bool,
    pub has_zero_divisors: bool,
    pub reduced: bool,
    pub semiprime: bool,
    pub regular: bool,
    pub right_nonsingular: bool,
}

/// Commutativity, checked on additive generators (enough by bilinearity).
pub fn is_commutative(ring: &Ring) -> bool {
    let gens = ring.additive_gen_coords();
    gens.iter()
        .all(|a| gens.iter().all(|b| ring.mul_c(a, b) == ring.mul_c(b, a)))
}

/// Least pair of nonzero `x, y` with `x*y = 0`.
pub fn zero_divisor_witness(ring: &Ring) -> Result<Option<(Element, Element)>> {
    let n = ring.scan_size("zero-divisor scan")?;
    let found = (1..n).into_par_iter().find_map_first(|i| {
        let x = ring.decode(i);
        (1..n)
            .find(|&j| Ring::is_zero_c(&ring.mul_c(&x, &ring.decode(j))))
            .map(|j| (i, j))
    });
    Ok(found.map(|(i, j)| (ring.element_at(i), ring.element_at(j))))
}

/// Least nonzero `x` with `x*x = 0`. A ring is reduced iff there is none:
/// if `x^n = 0` with `n >= 2` minimal then `x^ceil(n/2)` squares to zero.
pub fn square_zero_witness(ring: &Ring) -> Result<Option<Element>> {
    let n = ring.scan_size("nilpotent scan")?;
    let found = (1..n).into_par_iter().find_first(|&i| {
        let x = ring.decode(i);
        Ring::is_zero_c(&ring.mul_c(&x, &x))
    });
    Ok(found.map(|i| ring.element_at(i)))
}

/// Least nonzero `x` with `xRx = 0`.
pub fn semiprime_witness(ring: &Ring) -> Result<Option<Element>> {
    let n = ring.scan_size("semiprime scan")?;
    let found = (1..n).into_par_iter().find_first(|&i| {
        let x = ring.decode(i);
        (0..n).all(|r| Ring::is_zero_c(&ring.mul_c(&ring.mul_c(&x, &ring.decode(r)), &x)))
    });
    Ok(found.map(|i| ring.element_at(i)))
}

/// Least `a` with `a` not in `aRa`.
pub fn regular_witness(ring: &Ring) -> Result<Option<Element>> {
    let n = ring.scan_size("regularity scan")?;
    let found = (0..n).into_par_iter().find_first(|&i| {
        let a = ring.decode(i);
        !(0..n).any(|r| ring.mul_c(&ring.mul_c(&a, &ring.decode(r)), &a) == a)
    });
    Ok(found.map(|i| ring.element_at(i)))
}

/// Cyclic test: a right ideal `E` is essential iff every nonzero `y` has
/// some `r` with `yr` in `E \ {0}`.
pub(crate) fn is_essential_right_ideal(ring: &Ring, ideal: &ElementSet, n: usize) -> bool {
    (1..n).all(|y| {
        let yc = ring.decode(y);
        (0..n).any(|r| {
            let p = ring.encode(&ring.mul_c(&yc, &ring.decode(r)));
            p != 0 && ideal.contains(p)
        })
    })
}

/// Least nonzero `x` whose right annihilator is an essential right ideal.
pub fn singular_witness(ring: &Ring) -> Result<Option<Element>> {
    let n = ring.scan_size("nonsingularity scan")?;
    let found = (1..n).into_par_iter().find_first(|&i| {
        let x = ring.decode(i);
        let ann: Vec<usize> = (0..n)
            .filter(|&y| Ring::is_zero_c(&ring.mul_c(&x, &ring.decode(y))))
            .collect();
        if ann.len() == 1 {
            return false;
        }
        let ann = ElementSet::from_sorted(n, ann);
        is_essential_right_ideal(ring, &ann, n)
    });
    Ok(found.map(|i| ring.element_at(i)))
}

pub fn structural_predicates(ring: &Ring) -> Result<PredicateRecord> {
    Ok(PredicateRecord {
        commutative: is_commutative(ring),
        has_zero_divisors: zero_divisor_witness(ring)?.is_some(),
        reduced: square_zero_witness(ring)?.is_none(),
        semiprime: semiprime_witness(ring)?.is_none(),
        regular: regular_witness(ring)?.is_none(),
        right_nonsingular: singular_witness(ring)?.is_none(),
    })
}

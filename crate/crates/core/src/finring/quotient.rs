use rayon::prelude::*;

use super::ring::{Coords, Ring, MAX_TABLE_SIZE};
use super::set::ElementSet;
use super::submodule::{Submodule, SubmoduleKind};
use crate::error::{Result, RingError};

/// The quotient `R/I` by a two-sided ideal, in table encoding.
///
/// Each coset is represented by its lexicographically least member, and the
/// cosets are numbered in the order of their representatives, so the result
/// does not depend on scan order. Dividing by the zero ideal returns `R`.
pub fn quotient_ring(ring: &Ring, ideal: &Submodule) -> Result<Ring> {
    if ideal.kind() != SubmoduleKind::TwoSidedIdeal {
        return Err(RingError::NotTwoSided);
    }
    ring.check(&ideal.ring().zero())?;
    if ideal.is_zero() {
        return Ok(ring.clone());
    }
    let n = ring.scan_size("quotient")?;
    let q = n / ideal.len();
    if q > MAX_TABLE_SIZE {
        return Err(RingError::too_big(
            "quotient table",
            q as u128,
            MAX_TABLE_SIZE as u128,
        ));
    }

    let members: Vec<Coords> = ideal
        .set()
        .indices()
        .iter()
        .map(|&i| ring.decode(i))
        .collect();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps: Vec<Coords> = Vec::with_capacity(q);
    for x in 0..n {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        let xc = ring.decode(x);
        for m in &members {
            coset_of[ring.encode(&ring.add_c(&xc, m))] = id;
        }
        reps.push(xc);
    }
    debug_assert_eq!(reps.len(), q);

    let table = |op: &(dyn Fn(&[u32], &[u32]) -> Coords + Sync)| -> Vec<u32> {
        (0..q * q)
            .into_par_iter()
            .map(|ab| coset_of[ring.encode(&op(&reps[ab / q], &reps[ab % q]))])
            .collect()
    };
    let add = table(&|a, b| ring.add_c(a, b));
    let mul = table(&|a, b| ring.mul_c(a, b));
    let one = coset_of[ring.encode(ring.one_coords())];
    Ring::from_tables(
        format!("{}/I", ring.name()),
        add,
        mul,
        one,
        reps.into_iter().map(|c| c.to_vec()).collect(),
        ring.limits(),
    )
}

/// A subring given as an explicit element set, re-encoded as tables over its
/// members in lexicographic order.
pub fn subring(ring: &Ring, set: &ElementSet, name: impl Into<String>) -> Result<Ring> {
    let q = set.len();
    if q > MAX_TABLE_SIZE {
        return Err(RingError::too_big(
            "subring table",
            q as u128,
            MAX_TABLE_SIZE as u128,
        ));
    }
    let members: Vec<Coords> = set.indices().iter().map(|&i| ring.decode(i)).collect();
    let pos = |c: &[u32]| -> Result<u32> {
        set.indices()
            .binary_search(&ring.encode(c))
            .map(|p| p as u32)
            .map_err(|_| RingError::NotClosed("subring".into()))
    };
    let table = |op: &(dyn Fn(&[u32], &[u32]) -> Coords + Sync)| -> Result<Vec<u32>> {
        (0..q * q)
            .into_par_iter()
            .map(|ab| pos(&op(&members[ab / q], &members[ab % q])))
            .collect()
    };
    let add = table(&|a, b| ring.add_c(a, b))?;
    let mul = table(&|a, b| ring.mul_c(a, b))?;
    let one = pos(ring.one_coords())?;
    Ring::from_tables(
        name.into(),
        add,
        mul,
        one,
        members.into_iter().map(|c| c.to_vec()).collect(),
        ring.limits(),
    )
}

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::ring::{Coords, Ring};
use super::set::ElementSet;
use super::submodule::{close, Action, Submodule, SubmoduleKind};
use crate::error::{Result, RingError};

pub(crate) fn check_socle_cap(ring: &Ring) -> Result<usize> {
    let n = ring.scan_size("socle")?;
    let cap = ring.limits().socle_cap;
    if n as u64 > cap {
        return Err(RingError::too_big("socle", n as u128, cap as u128));
    }
    Ok(n)
}

/// Sum of the minimal cyclic submodules `xM`, where `cyclic(x)` produces the
/// submodule generated by `x`. A cyclic submodule is minimal iff each of its
/// nonzero members generates all of it, i.e. generates one of the same size.
pub(crate) fn socle_by_cyclic(
    ring: &Ring,
    n: usize,
    cyclic: impl Fn(&[u32]) -> Result<ElementSet> + Sync,
    action: Action<'_>,
) -> Result<(ElementSet, usize)> {
    let cyclics: Vec<ElementSet> = (0..n)
        .into_par_iter()
        .map(|i| cyclic(&ring.decode(i)))
        .collect::<Result<_>>()?;
    let mut minimal: BTreeSet<&[usize]> = BTreeSet::new();
    let mut seeds: Vec<Coords> = Vec::new();
    for (x, set) in cyclics.iter().enumerate().skip(1) {
        if minimal.contains(set.indices()) {
            continue;
        }
        let size = set.len();
        if set.indices()[1..].iter().all(|&y| cyclics[y].len() == size) {
            minimal.insert(set.indices());
            seeds.push(ring.decode(x));
        }
    }
    let count = minimal.len();
    let (sum, _) = close(ring, seeds, action)?;
    Ok((sum, count))
}

/// `Soc(R_R)`: the sum of all minimal right ideals.
pub fn socle_right(ring: &Ring) -> Result<Submodule> {
    let n = check_socle_cap(ring)?;
    let gens = ring.additive_gen_coords();
    let (set, _) = socle_by_cyclic(
        ring,
        n,
        |x| close(ring, [Coords::from(x)], Action::Right(gens)).map(|(s, _)| s),
        Action::Right(gens),
    )?;
    Ok(Submodule::from_set(ring, SubmoduleKind::RightIdeal, set))
}

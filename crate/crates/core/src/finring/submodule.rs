use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::ring::{Coords, Element, Ring};
use super::set::ElementSet;
use crate::error::{Result, RingError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubmoduleKind {
    RightIdeal,
    LeftIdeal,
    TwoSidedIdeal,
    CSubmodule,
    AdditiveSubgroup,
}

impl fmt::Display for SubmoduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubmoduleKind::RightIdeal => "right ideal",
            SubmoduleKind::LeftIdeal => "left ideal",
            SubmoduleKind::TwoSidedIdeal => "two-sided ideal",
            SubmoduleKind::CSubmodule => "C-submodule",
            SubmoduleKind::AdditiveSubgroup => "additive subgroup",
        })
    }
}

/// Grows an additive subgroup one generator at a time.
///
/// Adding `g` to `H` enumerates the cosets `H + t*g` for `t = 1, 2, ...`
/// until `t*g` falls back into `H`, so every insertion costs `O(|H'|)`.
pub(crate) struct SubgroupBuilder<'r> {
    ring: &'r Ring,
    bits: Vec<u64>,
    members: Vec<usize>,
}

impl<'r> SubgroupBuilder<'r> {
    pub(crate) fn new(ring: &'r Ring, universe: usize) -> Self {
        let mut bits = vec![0u64; universe.div_ceil(64)];
        bits[0] |= 1;
        SubgroupBuilder {
            ring,
            bits,
            members: vec![0],
        }
    }

    #[inline]
    pub(crate) fn contains(&self, idx: usize) -> bool {
        self.bits[idx / 64] & (1 << (idx % 64)) != 0
    }

    fn mark(&mut self, idx: usize) {
        self.bits[idx / 64] |= 1 << (idx % 64);
        self.members.push(idx);
    }

    pub(crate) fn len(&self) -> usize {
        self.members.len()
    }

    pub(crate) fn member(&self, i: usize) -> usize {
        self.members[i]
    }

    /// Adds `g` to the subgroup. Returns false if it was already a member.
    pub(crate) fn insert(&mut self, g: &[u32]) -> bool {
        let ring = self.ring;
        if self.contains(ring.encode(g)) {
            return false;
        }
        let old: Vec<Coords> = self.members.iter().map(|&i| ring.decode(i)).collect();
        let mut tg: Coords = g.into();
        while !self.contains(ring.encode(&tg)) {
            for h in &old {
                let m = ring.add_c(h, &tg);
                let idx = ring.encode(&m);
                self.mark(idx);
            }
            tg = ring.add_c(&tg, g);
        }
        true
    }

    pub(crate) fn finish(self) -> ElementSet {
        ElementSet::from_bits(self.bits)
    }
}

/// How a closure acts on newly found additive generators.
pub(crate) enum Action<'a> {
    Right(&'a [Coords]),
    Left(&'a [Coords]),
    Both(&'a [Coords]),
    Nothing,
}

/// Least additive subgroup containing `seeds` that is stable under `action`.
///
/// Only additive generators need to be acted on: by bilinearity the products
/// of the generators span the products of all members.
pub(crate) fn close(
    ring: &Ring,
    seeds: impl IntoIterator<Item = Coords>,
    action: Action<'_>,
) -> Result<(ElementSet, Vec<Coords>)> {
    let n = ring.scan_size("ideal closure")?;
    let mut b = SubgroupBuilder::new(ring, n);
    let mut gens = Vec::new();
    let mut queue: Vec<Coords> = seeds.into_iter().collect();
    queue.reverse();
    while let Some(x) = queue.pop() {
        if !b.insert(&x) {
            continue;
        }
        match action {
            Action::Right(acts) => queue.extend(acts.iter().map(|a| ring.mul_c(&x, a))),
            Action::Left(acts) => queue.extend(acts.iter().map(|a| ring.mul_c(a, &x))),
            Action::Both(acts) => {
                queue.extend(acts.iter().map(|a| ring.mul_c(&x, a)));
                queue.extend(acts.iter().map(|a| ring.mul_c(a, &x)));
            }
            Action::Nothing => {}
        }
        gens.push(x);
    }
    Ok((b.finish(), gens))
}

/// A subset of a ring closed under addition and the action named by its kind.
#[derive(Clone)]
pub struct Submodule {
    ring: Ring,
    kind: SubmoduleKind,
    set: ElementSet,
}

impl fmt::Debug for Submodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Submodule")
            .field("ring", &self.ring.name())
            .field("kind", &self.kind)
            .field("len", &self.set.len())
            .finish()
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring.zero()) && self.set == other.set
    }
}

impl Submodule {
    pub(crate) fn from_set(ring: &Ring, kind: SubmoduleKind, set: ElementSet) -> Self {
        debug_assert!(set.contains(0));
        Submodule {
            ring: ring.clone(),
            kind,
            set,
        }
    }

    pub fn zero(ring: &Ring, kind: SubmoduleKind) -> Self {
        let n = ring.order().min(usize::MAX as u128) as usize;
        Self::from_set(ring, kind, ElementSet::from_sorted(n, vec![0]))
    }

    /// Wraps an explicit set, verifying that it is closed as `kind`.
    pub fn from_elements(ring: &Ring, elems: &[Element], kind: SubmoduleKind) -> Result<Self> {
        for x in elems {
            ring.check(x)?;
        }
        let n = ring.scan_size("submodule")?;
        let given = ElementSet::from_unsorted(
            n,
            elems.iter().map(|x| ring.index_of(x)).chain([0]).collect(),
        );
        let closed = ideal_closure(ring, elems, kind)?;
        if closed.set != given {
            return Err(RingError::NotClosed(kind.to_string()));
        }
        Ok(closed)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> SubmoduleKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// True when the only member is zero.
    pub fn is_zero(&self) -> bool {
        self.set.len() == 1
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.ring.same_ring(x) && self.set.contains(self.ring.index_of(x))
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    /// Members in lexicographic order.
    pub fn members(&self) -> impl Iterator<Item = Element> + '_ {
        self.set.indices().iter().map(|&i| self.ring.element_at(i))
    }

    pub(crate) fn generator_coords(&self) -> Vec<Coords> {
        let mut b = SubgroupBuilder::new(&self.ring, self.ring.order() as usize);
        let mut gens = Vec::new();
        for &i in self.set.indices() {
            if !b.contains(i) {
                let c = self.ring.decode(i);
                b.insert(&c);
                gens.push(c);
            }
        }
        gens
    }

    /// A generating set of the additive group, lexicographically greedy.
    pub fn additive_generators(&self) -> Vec<Element> {
        self.generator_coords()
            .into_iter()
            .map(|c| self.ring.wrap(c))
            .collect()
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.set.is_subset(&other.set)
    }
}

/// Least submodule of the given kind containing `seed`.
pub fn ideal_closure(ring: &Ring, seed: &[Element], kind: SubmoduleKind) -> Result<Submodule> {
    for x in seed {
        ring.check(x)?;
    }
    let seeds = seed.iter().map(|x| Coords::from(x.coords()));
    let gens = ring.additive_gen_coords();
    let (set, _) = match kind {
        SubmoduleKind::RightIdeal => close(ring, seeds, Action::Right(gens))?,
        SubmoduleKind::LeftIdeal => close(ring, seeds, Action::Left(gens))?,
        SubmoduleKind::TwoSidedIdeal => close(ring, seeds, Action::Both(gens))?,
        SubmoduleKind::AdditiveSubgroup => close(ring, seeds, Action::Nothing)?,
        SubmoduleKind::CSubmodule => {
            let center = crate::central::center(ring)?;
            let cg = center.generator_coords();
            close(ring, seeds, Action::Right(&cg))?
        }
    };
    Ok(Submodule::from_set(ring, kind, set))
}

/// `Ann_R(n) = { x : n*x = 0 }`, a two-sided ideal.
pub fn annihilator_of_int(ring: &Ring, n: u64) -> Result<Submodule> {
    let size = ring.scan_size("annihilator")?;
    let n = n as i64;
    let idx: Vec<usize> = (0..size)
        .into_par_iter()
        .filter(|&i| Ring::is_zero_c(&ring.scale_c(n, &ring.decode(i))))
        .collect();
    Ok(Submodule::from_set(
        ring,
        SubmoduleKind::TwoSidedIdeal,
        ElementSet::from_sorted(size, idx),
    ))
}

//! The center `C` of a finite ring and `C`-module machinery: cyclic
//! submodules `xC`, essentiality over `C`, and the centrally essential test.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, RingError};
use crate::finring::{
    check_socle_cap, close, socle_by_cyclic, Action, Coords, Element, ElementSet, Encoding, Ring,
    Submodule, SubmoduleKind,
};
use crate::linalg;

/// The center of a ring, materialized as an explicit sorted element set.
#[derive(Clone)]
pub struct CenterData {
    ring: Ring,
    set: ElementSet,
}

impl fmt::Debug for CenterData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CenterData")
            .field("ring", &self.ring.name())
            .field("size", &self.set.len())
            .finish()
    }
}

impl CenterData {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn contains(&self, x: &Element) -> bool {
        self.ring.same_ring(x) && self.set.contains(self.ring.index_of(x))
    }

    pub fn members(&self) -> impl Iterator<Item = Element> + '_ {
        self.set.indices().iter().map(|&i| self.ring.element_at(i))
    }

    /// `C` as a `C`-submodule of `R`.
    pub fn as_submodule(&self) -> Submodule {
        Submodule::from_set(&self.ring, SubmoduleKind::CSubmodule, self.set.clone())
    }

    pub(crate) fn generator_coords(&self) -> Vec<Coords> {
        self.as_submodule().generator_coords()
    }

    fn member_coords(&self) -> Vec<Coords> {
        self.set
            .indices()
            .iter()
            .map(|&i| self.ring.decode(i))
            .collect()
    }
}

/// The prime `p` when the additive group is `(Z/p)^k` in struct-constant
/// encoding, which enables the elimination fast path.
pub fn prime_field_of(ring: &Ring) -> Option<u64> {
    if ring.encoding() != Encoding::StructConsts {
        return None;
    }
    let p = ring.moduli()[0] as u64;
    (linalg::is_prime(p) && ring.moduli().iter().all(|&m| m as u64 == p)).then_some(p)
}

/// The center, via elimination when the ring is an `F_p`-algebra and by an
/// exhaustive scan otherwise. Cached on the ring.
pub fn center(ring: &Ring) -> Result<CenterData> {
    let n = ring.scan_size("center")?;
    if let Some(set) = ring.cache().center.get() {
        return Ok(CenterData {
            ring: ring.clone(),
            set: set.clone(),
        });
    }
    let c = match center_by_elimination(ring)? {
        Some(c) => c,
        None => center_by_scan(ring)?,
    };
    debug_assert!(c.set.indices().iter().all(|&i| i < n));
    let _ = ring.cache().center.set(c.set.clone());
    Ok(c)
}

/// Elements commuting with every additive generator; by bilinearity these
/// are exactly the central elements.
pub fn center_by_scan(ring: &Ring) -> Result<CenterData> {
    let n = ring.scan_size("center")?;
    let gens = ring.additive_gen_coords();
    let idx: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&i| {
            let x = ring.decode(i);
            gens.iter().all(|g| ring.mul_c(&x, g) == ring.mul_c(g, &x))
        })
        .collect();
    Ok(CenterData {
        ring: ring.clone(),
        set: ElementSet::from_sorted(n, idx),
    })
}

/// The center as the null space of `x -> ([x, g_1], ..., [x, g_k])` over
/// `F_p`. `None` when the ring is not an `F_p`-algebra in struct-constant
/// form.
pub fn center_by_elimination(ring: &Ring) -> Result<Option<CenterData>> {
    let Some(p) = prime_field_of(ring) else {
        return Ok(None);
    };
    let n = ring.scan_size("center")?;
    let k = ring.generator_count();
    let gens = ring.additive_gen_coords();
    // rows indexed by (i, l), columns by a: coordinate l of [g_a, g_i]
    let mut rows = vec![vec![0u64; k]; k * k];
    for (a, ga) in gens.iter().enumerate() {
        for (i, gi) in gens.iter().enumerate() {
            let comm = ring.sub_c(&ring.mul_c(ga, gi), &ring.mul_c(gi, ga));
            for (l, &v) in comm.iter().enumerate() {
                rows[i * k + l][a] = v as u64;
            }
        }
    }
    let basis = linalg::nullspace(rows, k, p);
    let idx = linalg::enumerate_span(&basis, k, p)
        .iter()
        .map(|v| ring.encode(v))
        .collect();
    Ok(Some(CenterData {
        ring: ring.clone(),
        set: ElementSet::from_unsorted(n, idx),
    }))
}

/// `[x, y] = xy - yx`.
pub fn commutator(ring: &Ring, x: &Element, y: &Element) -> Result<Element> {
    let xy = ring.try_mul(x, y)?;
    let yx = ring.try_mul(y, x)?;
    Ok(ring.sub(&xy, &yx))
}

/// `xC = { x*c : c in C }`.
pub fn cyclic_c_submodule(ring: &Ring, x: &Element) -> Result<Submodule> {
    ring.check(x)?;
    let c = center(ring)?;
    let n = ring.order() as usize;
    let idx = c
        .member_coords()
        .iter()
        .map(|cc| ring.encode(&ring.mul_c(x.coords(), cc)))
        .collect();
    Ok(Submodule::from_set(
        ring,
        SubmoduleKind::CSubmodule,
        ElementSet::from_unsorted(n, idx),
    ))
}

/// `xC` as the span of `x*b` over an `F_p`-basis `b` of `C`.
pub fn cyclic_c_submodule_by_elimination(ring: &Ring, x: &Element) -> Result<Option<Submodule>> {
    ring.check(x)?;
    let Some(p) = prime_field_of(ring) else {
        return Ok(None);
    };
    let c = center(ring)?;
    let k = ring.generator_count();
    let images = c
        .generator_coords()
        .iter()
        .map(|b| {
            ring.mul_c(x.coords(), b)
                .iter()
                .map(|&v| v as u64)
                .collect()
        })
        .collect();
    let basis = linalg::span_basis(images, p);
    let n = ring.order() as usize;
    let idx = linalg::enumerate_span(&basis, k, p)
        .iter()
        .map(|v| ring.encode(v))
        .collect();
    Ok(Some(Submodule::from_set(
        ring,
        SubmoduleKind::CSubmodule,
        ElementSet::from_unsorted(n, idx),
    )))
}

/// Outcome of an essentiality test. `witness` is the least nonzero `x` whose
/// cyclic submodule `xC` misses the tested submodule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Essentiality {
    pub essential: bool,
    pub witness: Option<Element>,
}

impl Serialize for Essentiality {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Essentiality", 2)?;
        st.serialize_field("essential", &self.essential)?;
        st.serialize_field(
            "witness",
            &self.witness.as_ref().map(|w| w.coords().to_vec()),
        )?;
        st.end()
    }
}

/// Decides whether `M` is an essential `C`-submodule of `R_C`.
///
/// Every nonzero submodule contains a nonzero cyclic one and `x` lies in
/// `xC`, so `M` is essential iff `xC` meets `M \ {0}` for every `x != 0`.
pub fn is_essential_c_submodule(m: &Submodule) -> Result<Essentiality> {
    if !matches!(
        m.kind(),
        SubmoduleKind::CSubmodule | SubmoduleKind::TwoSidedIdeal
    ) {
        return Err(RingError::PreconditionViolated(format!(
            "essentiality over C needs a C-submodule, got a {}",
            m.kind()
        )));
    }
    let ring = m.ring();
    let n = ring.scan_size("essentiality scan")?;
    let c = center(ring)?.member_coords();
    let set = m.set();
    let witness = (1..n).into_par_iter().find_first(|&i| {
        let x = ring.decode(i);
        !c.iter().any(|cc| {
            let p = ring.encode(&ring.mul_c(&x, cc));
            p != 0 && set.contains(p)
        })
    });
    Ok(Essentiality {
        essential: witness.is_none(),
        witness: witness.map(|i| ring.element_at(i)),
    })
}

/// True iff `R_C` is an essential extension of `C_C`: every `x != 0` has a
/// central `c` with `xc` central and nonzero.
pub fn is_centrally_essential(ring: &Ring) -> Result<Essentiality> {
    let c = center(ring)?;
    is_essential_c_submodule(&c.as_submodule())
}

/// `Soc(R_C)`: the sum of the minimal `C`-submodules of `R`.
pub fn socle_c_module(ring: &Ring) -> Result<Submodule> {
    let n = check_socle_cap(ring)?;
    let c = center(ring)?;
    let members = c.member_coords();
    let gens = c.generator_coords();
    let (set, _) = socle_by_cyclic(
        ring,
        n,
        |x| {
            Ok(ElementSet::from_unsorted(
                n,
                members
                    .iter()
                    .map(|cc| ring.encode(&ring.mul_c(x, cc)))
                    .collect(),
            ))
        },
        Action::Right(&gens),
    )?;
    Ok(Submodule::from_set(ring, SubmoduleKind::CSubmodule, set))
}

/// The additive set `C + J` for a two-sided ideal `J`.
pub fn center_plus(ring: &Ring, ideal: &Submodule) -> Result<ElementSet> {
    let c = center(ring)?;
    let seeds = c
        .generator_coords()
        .into_iter()
        .chain(ideal.generator_coords());
    Ok(close(ring, seeds, Action::Nothing)?.0)
}

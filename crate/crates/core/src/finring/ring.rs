use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use smallvec::{smallvec, SmallVec};

use super::set::ElementSet;
use crate::error::{LawViolation, Result, RingError};

/// Coordinates of an element relative to a ring's additive generators.
pub type Coords = SmallVec<[u32; 16]>;

/// Largest modulus accepted in a presentation. Keeps every intermediate
/// product of two residues and a structure constant inside `u64`.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Largest ring that may be stored as explicit addition/multiplication tables.
pub const MAX_TABLE_SIZE: usize = 4096;

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// Resource caps for exhaustive scans. Exceeding one is always an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    pub enumeration_cap: u64,
    pub socle_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration_cap: 1_000_000,
            socle_cap: 4096,
        }
    }
}

/// A finite ring presented by additive moduli and structure constants, in the
/// shape of the ring-spec JSON document.
///
/// The additive group is `Z/m_1 + ... + Z/m_k`; `mul[i][j]` holds the
/// coordinates of `g_i * g_j`. Residues may be unreduced or negative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    #[serde(default)]
    pub name: String,
    pub moduli: Vec<u64>,
    pub one: Vec<i64>,
    pub mul: Vec<Vec<Vec<i64>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Encoding {
    StructConsts,
    Table,
}

/// An element of a finite ring. Only meaningful together with the ring that
/// produced it; mixing elements of different rings is rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring: u64,
    coords: Coords,
}

impl Element {
    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) struct StructConsts {
    /// `sparse[i * k + j]` lists the nonzero `(l, c)` of `g_i * g_j`.
    sparse: Vec<Vec<(u32, u32)>>,
}

pub(crate) struct Table {
    size: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    mul: Vec<u32>,
    /// Coordinates of a representative in the ring this table came from.
    reps: Vec<Vec<u32>>,
}

enum Repr {
    StructConsts(StructConsts),
    Table(Table),
}

#[derive(Default)]
pub(crate) struct Cache {
    pub(crate) additive_gens: OnceLock<Vec<Coords>>,
    pub(crate) center: OnceLock<ElementSet>,
    pub(crate) jacobson: OnceLock<ElementSet>,
}

struct Inner {
    id: u64,
    name: String,
    moduli: Vec<u32>,
    one: Coords,
    order: u128,
    strides: Vec<u64>,
    repr: Repr,
    cache: Cache,
}

/// A validated finite ring. Cheap to clone; all clones share one immutable
/// representation and the same element identity.
#[derive(Clone)]
pub struct Ring {
    inner: Arc<Inner>,
    limits: Limits,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring")
            .field("name", &self.inner.name)
            .field("order", &self.inner.order)
            .field("encoding", &self.encoding())
            .finish()
    }
}

fn reduce(v: i64, m: u64) -> u32 {
    v.rem_euclid(m as i64) as u32
}

impl RingSpec {
    /// Checks every ring law of the presentation and returns the ring, or all
    /// violations found.
    pub fn validate(&self) -> Result<Ring> {
        Ring::from_spec(self)
    }
}

impl Ring {
    pub fn from_spec(spec: &RingSpec) -> Result<Ring> {
        let k = spec.moduli.len();
        let mut shape = Vec::new();
        if k == 0 {
            shape.push(LawViolation::ShapeMismatch("no moduli".into()));
        }
        for (i, &m) in spec.moduli.iter().enumerate() {
            if !(2..MAX_MODULUS).contains(&m) {
                shape.push(LawViolation::ShapeMismatch(format!(
                    "modulus {i} is {m}, expected 2 <= m < 2^31"
                )));
            }
        }
        if spec.one.len() != k {
            shape.push(LawViolation::ShapeMismatch(format!(
                "one has {} coordinates, expected {k}",
                spec.one.len()
            )));
        }
        if spec.mul.len() != k {
            shape.push(LawViolation::ShapeMismatch(format!(
                "mul has {} rows, expected {k}",
                spec.mul.len()
            )));
        }
        for (i, row) in spec.mul.iter().enumerate() {
            if row.len() != k {
                shape.push(LawViolation::ShapeMismatch(format!(
                    "mul[{i}] has {} entries, expected {k}",
                    row.len()
                )));
                continue;
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != k {
                    shape.push(LawViolation::ShapeMismatch(format!(
                        "mul[{i}][{j}] has {} coordinates, expected {k}",
                        v.len()
                    )));
                }
            }
        }
        if !shape.is_empty() {
            return Err(RingError::Invalid(shape));
        }

        let moduli: Vec<u32> = spec.moduli.iter().map(|&m| m as u32).collect();
        let one: Coords = spec
            .one
            .iter()
            .zip(&spec.moduli)
            .map(|(&v, &m)| reduce(v, m))
            .collect();
        let mut sparse = vec![Vec::new(); k * k];
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let c = reduce(spec.mul[i][j][l], spec.moduli[l]);
                    if c != 0 {
                        sparse[i * k + j].push((l as u32, c));
                    }
                }
            }
        }
        let ring = Ring::assemble(
            spec.name.clone(),
            moduli,
            one,
            Repr::StructConsts(StructConsts { sparse }),
        );

        let violations = ring.law_violations();
        if violations.is_empty() {
            Ok(ring)
        } else {
            Err(RingError::Invalid(violations))
        }
    }

    fn assemble(name: String, moduli: Vec<u32>, one: Coords, repr: Repr) -> Ring {
        let order = moduli
            .iter()
            .try_fold(1u128, |acc, &m| acc.checked_mul(m as u128))
            .unwrap_or(u128::MAX);
        let mut strides = vec![0u64; moduli.len()];
        if order <= u64::MAX as u128 {
            let mut s = 1u64;
            for i in (0..moduli.len()).rev() {
                strides[i] = s;
                s = s.wrapping_mul(moduli[i] as u64);
            }
        }
        Ring {
            inner: Arc::new(Inner {
                id: NEXT_RING_ID.fetch_add(1, Ordering::Relaxed),
                name,
                moduli,
                one,
                order,
                strides,
                repr,
                cache: Cache::default(),
            }),
            limits: Limits::default(),
        }
    }

    /// Builds a ring from explicit tables over elements `0..size`. Element 0
    /// must be the zero. `reps` gives each element's coordinates in some
    /// ambient ring, used for display only.
    pub(crate) fn from_tables(
        name: String,
        add: Vec<u32>,
        mul: Vec<u32>,
        one: u32,
        reps: Vec<Vec<u32>>,
        limits: Limits,
    ) -> Result<Ring> {
        let size = reps.len();
        if size > MAX_TABLE_SIZE {
            return Err(RingError::too_big(
                "table encoding",
                size as u128,
                MAX_TABLE_SIZE as u128,
            ));
        }
        let mut neg = vec![0u32; size];
        for a in 0..size {
            for b in 0..size {
                if add[a * size + b] == 0 {
                    neg[a] = b as u32;
                    break;
                }
            }
        }
        let mut ring = Ring::assemble(
            name,
            vec![size as u32],
            smallvec![one],
            Repr::Table(Table {
                size,
                add,
                neg,
                mul,
                reps,
            }),
        );
        ring.limits = limits;
        Ok(ring)
    }

    fn law_violations(&self) -> Vec<LawViolation> {
        let k = self.generator_count();
        let mut out = Vec::new();
        let sc = match &self.inner.repr {
            Repr::StructConsts(sc) => sc,
            Repr::Table(_) => return out,
        };
        for i in 0..k {
            for j in 0..k {
                let mi = self.inner.moduli[i] as u64;
                let mj = self.inner.moduli[j] as u64;
                for &(l, c) in &sc.sparse[i * k + j] {
                    let ml = self.inner.moduli[l as usize] as u64;
                    if !(mi * c as u64).is_multiple_of(ml) || !(mj * c as u64).is_multiple_of(ml) {
                        out.push(LawViolation::IncompatibleModuli(i, j, l as usize));
                    }
                }
            }
        }
        let gens: Vec<Coords> = (0..k).map(|i| self.basis_coords(i)).collect();
        for i in 0..k {
            for j in 0..k {
                let ij = self.mul_c(&gens[i], &gens[j]);
                for l in 0..k {
                    let left = self.mul_c(&ij, &gens[l]);
                    let jl = self.mul_c(&gens[j], &gens[l]);
                    let right = self.mul_c(&gens[i], &jl);
                    if left != right {
                        out.push(LawViolation::NonAssociative(i, j, l));
                    }
                }
            }
        }
        for (i, g) in gens.iter().enumerate() {
            if self.mul_c(&self.inner.one, g) != *g || self.mul_c(g, &self.inner.one) != *g {
                out.push(LawViolation::BadUnit(i));
            }
        }
        out
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// Same ring and element identity under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Ring {
        // Elements keep working because the id is carried over.
        let inner = &self.inner;
        let repr = match &inner.repr {
            Repr::StructConsts(sc) => Repr::StructConsts(StructConsts {
                sparse: sc.sparse.clone(),
            }),
            Repr::Table(t) => Repr::Table(Table {
                size: t.size,
                add: t.add.clone(),
                neg: t.neg.clone(),
                mul: t.mul.clone(),
                reps: t.reps.clone(),
            }),
        };
        Ring {
            inner: Arc::new(Inner {
                id: inner.id,
                name: name.into(),
                moduli: inner.moduli.clone(),
                one: inner.one.clone(),
                order: inner.order,
                strides: inner.strides.clone(),
                repr,
                cache: Cache::default(),
            }),
            limits: self.limits,
        }
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn with_limits(&self, limits: Limits) -> Ring {
        Ring {
            inner: Arc::clone(&self.inner),
            limits,
        }
    }

    pub fn encoding(&self) -> Encoding {
        match self.inner.repr {
            Repr::StructConsts(_) => Encoding::StructConsts,
            Repr::Table(_) => Encoding::Table,
        }
    }

    /// Number of elements.
    pub fn order(&self) -> u128 {
        self.inner.order
    }

    /// Number of elements, provided an exhaustive scan is within the
    /// enumeration cap.
    pub fn size(&self) -> Result<usize> {
        self.scan_size("enumeration")
    }

    pub(crate) fn scan_size(&self, what: &str) -> Result<usize> {
        let cap = self.limits.enumeration_cap as u128;
        if self.inner.order > cap {
            Err(RingError::too_big(what, self.inner.order, cap))
        } else {
            Ok(self.inner.order as usize)
        }
    }

    /// Additive moduli. For table-encoded rings this is `[|R|]` and the single
    /// coordinate is an element number, not a residue.
    pub fn moduli(&self) -> &[u32] {
        &self.inner.moduli
    }

    pub fn generator_count(&self) -> usize {
        self.inner.moduli.len()
    }

    pub(crate) fn cache(&self) -> &Cache {
        &self.inner.cache
    }

    pub fn same_ring(&self, x: &Element) -> bool {
        x.ring == self.inner.id
    }

    pub(crate) fn wrap(&self, coords: Coords) -> Element {
        Element {
            ring: self.inner.id,
            coords,
        }
    }

    pub(crate) fn check(&self, x: &Element) -> Result<()> {
        if self.same_ring(x) {
            Ok(())
        } else {
            Err(RingError::RingMismatch)
        }
    }

    fn expect_own(&self, x: &Element) {
        assert!(
            self.same_ring(x),
            "element does not belong to ring `{}`",
            self.name()
        );
    }

    /// Builds an element from (possibly unreduced) residues.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.generator_count() {
            return Err(RingError::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                self.generator_count(),
                coords.len()
            )));
        }
        if let Repr::Table(t) = &self.inner.repr {
            if coords[0] < 0 || coords[0] as usize >= t.size {
                return Err(RingError::InvalidArgument(format!(
                    "no element numbered {}",
                    coords[0]
                )));
            }
        }
        Ok(self.wrap(
            coords
                .iter()
                .zip(&self.inner.moduli)
                .map(|(&v, &m)| reduce(v, m as u64))
                .collect(),
        ))
    }

    pub fn zero(&self) -> Element {
        self.wrap(smallvec![0; self.generator_count()])
    }

    pub fn one(&self) -> Element {
        self.wrap(self.inner.one.clone())
    }

    pub(crate) fn one_coords(&self) -> &[u32] {
        &self.inner.one
    }

    fn basis_coords(&self, i: usize) -> Coords {
        let mut c: Coords = smallvec![0; self.generator_count()];
        c[i] = 1;
        c
    }

    /// Elements generating `(R, +)`. For structure-constant rings these are
    /// the basis vectors; for table rings a generating set is computed.
    pub fn additive_generators(&self) -> Vec<Element> {
        self.additive_gen_coords()
            .iter()
            .map(|c| self.wrap(c.clone()))
            .collect()
    }

    pub(crate) fn additive_gen_coords(&self) -> &[Coords] {
        self.inner
            .cache
            .additive_gens
            .get_or_init(|| match &self.inner.repr {
                Repr::StructConsts(_) => (0..self.generator_count())
                    .map(|i| self.basis_coords(i))
                    .collect(),
                Repr::Table(t) => {
                    let mut b = super::submodule::SubgroupBuilder::new(self, t.size);
                    let mut gens = Vec::new();
                    for x in 0..t.size {
                        let c: Coords = smallvec![x as u32];
                        if b.insert(&c) {
                            gens.push(c);
                        }
                    }
                    gens
                }
            })
    }

    /// The element with position `idx` in lexicographic coordinate order.
    pub fn element_at(&self, idx: usize) -> Element {
        self.wrap(self.decode(idx))
    }

    pub fn index_of(&self, x: &Element) -> usize {
        self.expect_own(x);
        self.encode(&x.coords)
    }

    pub(crate) fn decode(&self, idx: usize) -> Coords {
        let mut idx = idx as u64;
        let k = self.generator_count();
        let mut out: Coords = smallvec![0; k];
        for i in 0..k {
            let s = self.inner.strides[i];
            out[i] = (idx / s) as u32;
            idx %= s;
        }
        out
    }

    pub(crate) fn encode(&self, c: &[u32]) -> usize {
        c.iter()
            .zip(&self.inner.strides)
            .map(|(&v, &s)| v as u64 * s)
            .sum::<u64>() as usize
    }

    /// Coordinates of the representative behind a table-encoded element.
    pub fn representative(&self, x: &Element) -> Option<&[u32]> {
        match &self.inner.repr {
            Repr::Table(t) if self.same_ring(x) => Some(&t.reps[x.coords[0] as usize]),
            _ => None,
        }
    }

    pub(crate) fn add_c(&self, a: &[u32], b: &[u32]) -> Coords {
        match &self.inner.repr {
            Repr::StructConsts(_) => a
                .iter()
                .zip(b)
                .zip(&self.inner.moduli)
                .map(|((&x, &y), &m)| ((x as u64 + y as u64) % m as u64) as u32)
                .collect(),
            Repr::Table(t) => smallvec![t.add[a[0] as usize * t.size + b[0] as usize]],
        }
    }

    pub(crate) fn neg_c(&self, a: &[u32]) -> Coords {
        match &self.inner.repr {
            Repr::StructConsts(_) => a
                .iter()
                .zip(&self.inner.moduli)
                .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
                .collect(),
            Repr::Table(t) => smallvec![t.neg[a[0] as usize]],
        }
    }

    pub(crate) fn sub_c(&self, a: &[u32], b: &[u32]) -> Coords {
        self.add_c(a, &self.neg_c(b))
    }

    pub(crate) fn mul_c(&self, a: &[u32], b: &[u32]) -> Coords {
        match &self.inner.repr {
            Repr::StructConsts(sc) => {
                let k = a.len();
                let mut acc: SmallVec<[u64; 16]> = smallvec![0; k];
                for (i, &ai) in a.iter().enumerate() {
                    if ai == 0 {
                        continue;
                    }
                    let row = &sc.sparse[i * k..(i + 1) * k];
                    for (j, &bj) in b.iter().enumerate() {
                        if bj == 0 || row[j].is_empty() {
                            continue;
                        }
                        let ab = ai as u64 * bj as u64;
                        for &(l, c) in &row[j] {
                            let m = self.inner.moduli[l as usize] as u64;
                            let slot = &mut acc[l as usize];
                            *slot = (*slot + (ab % m) * c as u64) % m;
                        }
                    }
                }
                acc.into_iter().map(|v| v as u32).collect()
            }
            Repr::Table(t) => smallvec![t.mul[a[0] as usize * t.size + b[0] as usize]],
        }
    }

    pub(crate) fn is_zero_c(a: &[u32]) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub(crate) fn scale_c(&self, n: i64, a: &[u32]) -> Coords {
        match &self.inner.repr {
            Repr::StructConsts(_) => a
                .iter()
                .zip(&self.inner.moduli)
                .map(|(&x, &m)| {
                    let m = m as i128;
                    ((x as i128 * n as i128).rem_euclid(m)) as u32
                })
                .collect(),
            Repr::Table(_) => {
                let mut base: Coords = if n < 0 { self.neg_c(a) } else { a.into() };
                let mut e = n.unsigned_abs();
                let mut acc: Coords = smallvec![0];
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.add_c(&acc, &base);
                    }
                    base = self.add_c(&base, &base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.expect_own(x);
        self.expect_own(y);
        self.wrap(self.add_c(&x.coords, &y.coords))
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.expect_own(x);
        self.expect_own(y);
        self.wrap(self.sub_c(&x.coords, &y.coords))
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.expect_own(x);
        self.wrap(self.neg_c(&x.coords))
    }

    /// Product of two elements.
    ///
    /// # Panics
    ///
    /// If either element belongs to another ring; see [`Ring::try_mul`].
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.expect_own(x);
        self.expect_own(y);
        self.wrap(self.mul_c(&x.coords, &y.coords))
    }

    pub fn try_mul(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.wrap(self.mul_c(&x.coords, &y.coords)))
    }

    pub fn try_add(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.wrap(self.add_c(&x.coords, &y.coords)))
    }

    /// `n * x` in the additive group.
    pub fn int_scale(&self, n: i64, x: &Element) -> Element {
        self.expect_own(x);
        self.wrap(self.scale_c(n, &x.coords))
    }

    pub(crate) fn additive_order_c(&self, a: &[u32]) -> u64 {
        match &self.inner.repr {
            Repr::StructConsts(_) => a
                .iter()
                .zip(&self.inner.moduli)
                .map(|(&x, &m)| m as u64 / gcd(m as u64, x as u64))
                .fold(1, lcm),
            Repr::Table(_) => {
                let mut n = 1;
                let mut acc: Coords = a.into();
                while acc[0] != 0 {
                    acc = self.add_c(&acc, a);
                    n += 1;
                }
                n
            }
        }
    }

    /// Least `n >= 1` with `n * x = 0`.
    pub fn additive_order(&self, x: &Element) -> u64 {
        self.expect_own(x);
        self.additive_order_c(&x.coords)
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> u64 {
        self.additive_order_c(&self.inner.one)
    }

    /// All elements in lexicographic order, subject to the enumeration cap.
    pub fn elements(&self) -> Result<impl Iterator<Item = Element> + '_> {
        let n = self.size()?;
        Ok((0..n).map(move |i| self.element_at(i)))
    }

    /// The presentation of a structure-constant ring; `None` for table rings.
    pub fn to_spec(&self) -> Option<RingSpec> {
        let sc = match &self.inner.repr {
            Repr::StructConsts(sc) => sc,
            Repr::Table(_) => return None,
        };
        let k = self.generator_count();
        let mut mul = vec![vec![vec![0i64; k]; k]; k];
        for i in 0..k {
            for j in 0..k {
                for &(l, c) in &sc.sparse[i * k + j] {
                    mul[i][j][l as usize] = c as i64;
                }
            }
        }
        Some(RingSpec {
            name: self.inner.name.clone(),
            moduli: self.inner.moduli.iter().map(|&m| m as u64).collect(),
            one: self.inner.one.iter().map(|&c| c as i64).collect(),
            mul,
        })
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

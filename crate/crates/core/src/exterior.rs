//! Exterior algebras `Λ(A^n) = A ⊗_C Λ(C^n)` over a finite base ring `A`.
//!
//! The `A`-basis is indexed by subsets of `{1..n}` stored as bitmasks: bit
//! `i - 1` stands for `e_i`, and the empty mask is the identity. Coefficients
//! from `A` commute with every `e_i`, so
//! `(a e_S)(b e_T) = sign(S, T) (ab) e_{S ∪ T}`.

use std::fmt;

use crate::error::{Result, RingError};
use crate::finring::{Coords, Element, Encoding, Ring, RingSpec};

/// Largest supported number of exterior generators.
pub const MAX_GENERATORS: u32 = 16;

/// A basis monomial `e_{i_1} ∧ ... ∧ e_{i_s}` with `i_1 < ... < i_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetIndex(u32);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    pub fn from_mask(mask: u32) -> Self {
        SubsetIndex(mask)
    }

    /// From one-based generator positions, in any order.
    pub fn from_positions(positions: &[u32]) -> Self {
        SubsetIndex(positions.iter().fold(0, |m, &p| m | 1 << (p - 1)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    /// One-based positions in increasing order.
    pub fn positions(self) -> Vec<u32> {
        (0..32)
            .filter(|b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
            .collect()
    }

    pub fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.positions().iter().map(|p| format!("e{p}")).collect();
        f.write_str(&parts.join("^"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    /// The index sets meet, so the product of the monomials is zero.
    Overlap,
}

impl Sign {
    fn times(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Overlap, _) | (_, Sign::Overlap) => Sign::Overlap,
            (a, b) if a == b => Sign::Plus,
            _ => Sign::Minus,
        }
    }
}

/// Sign of `e_S ∧ e_T` relative to `e_{S ∪ T}`: `(-1)^inv` with
/// `inv = #{(s, t) in S × T : s > t}`.
pub fn sign(s: SubsetIndex, t: SubsetIndex) -> Sign {
    if s.0 & t.0 != 0 {
        return Sign::Overlap;
    }
    let mut inv = 0;
    let mut rest = t.0;
    while rest != 0 {
        let b = rest.trailing_zeros();
        // members of S above position b
        inv += (s.0 >> b >> 1).count_ones();
        rest &= rest - 1;
    }
    if inv % 2 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Sign of a product of three pairwise disjoint monomials, evaluated
/// left-to-right.
pub fn sign3(s: SubsetIndex, t: SubsetIndex, u: SubsetIndex) -> Sign {
    sign(s, t).times(sign(s.union(t), u))
}

/// `Λ(A^n)` together with the data needed to move between the built ring and
/// coefficient views.
#[derive(Debug, Clone)]
pub struct ExteriorAlgebra {
    base: Ring,
    n: u32,
    ring: Ring,
}

/// Number of elements of `Λ(A^n)`, saturating at `u128::MAX`.
pub fn exterior_order(base: &Ring, n: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..(1u64 << n.min(MAX_GENERATORS)) {
        acc = match acc.checked_mul(base.order()) {
            Some(v) => v,
            None => return u128::MAX,
        };
    }
    acc
}

impl ExteriorAlgebra {
    /// Builds `Λ(A^n)` in struct-constant encoding. Additive generators are
    /// ordered by `(subset mask, base generator)`.
    pub fn build(base: &Ring, n: u32) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(RingError::InvalidArgument(format!(
                "n = {n} exceeds the limit of {MAX_GENERATORS} generators"
            )));
        }
        if base.encoding() != Encoding::StructConsts {
            return Err(RingError::InvalidArgument(
                "exterior algebras need a struct-constant base ring".into(),
            ));
        }
        let size = exterior_order(base, n);
        let cap = base.limits().enumeration_cap as u128;
        if size > cap {
            return Err(RingError::too_big(
                format!("Λ({}^{n})", base.name()),
                size,
                cap,
            ));
        }
        if n == 0 {
            return Ok(ExteriorAlgebra {
                base: base.clone(),
                n,
                ring: base.clone(),
            });
        }

        let ka = base.generator_count();
        let masks = 1usize << n;
        let k = ka * masks;
        let base_moduli = base.moduli();
        let gens = base.additive_gen_coords();
        let base_products: Vec<Coords> = (0..ka * ka)
            .map(|ij| base.mul_c(&gens[ij / ka], &gens[ij % ka]))
            .collect();

        let moduli: Vec<u64> = (0..k).map(|g| base_moduli[g % ka] as u64).collect();
        let mut one = vec![0i64; k];
        for (i, &c) in base.one_coords().iter().enumerate() {
            one[i] = c as i64;
        }
        let mut mul = vec![vec![vec![0i64; k]; k]; k];
        for s in 0..masks {
            for t in 0..masks {
                let sg = sign(SubsetIndex(s as u32), SubsetIndex(t as u32));
                if sg == Sign::Overlap {
                    continue;
                }
                let u = s | t;
                for i in 0..ka {
                    for j in 0..ka {
                        let prod = &base_products[i * ka + j];
                        let entry = &mut mul[s * ka + i][t * ka + j];
                        for (l, &c) in prod.iter().enumerate() {
                            entry[u * ka + l] = match sg {
                                Sign::Plus => c as i64,
                                _ => -(c as i64),
                            };
                        }
                    }
                }
            }
        }
        let spec = RingSpec {
            name: format!("lambda({},{n})", base.name()),
            moduli,
            one,
            mul,
        };
        let ring = Ring::from_spec(&spec)?.with_limits(base.limits());
        Ok(ExteriorAlgebra {
            base: base.clone(),
            n,
            ring,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> &Ring {
        &self.base
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Basis monomials in mask order.
    pub fn basis(&self) -> Vec<SubsetIndex> {
        (0..1u32 << self.n).map(SubsetIndex).collect()
    }

    /// Number of basis monomials of each degree `0..=n`.
    pub fn grading_dimensions(&self) -> Vec<u64> {
        let mut dims = vec![0u64; self.n as usize + 1];
        for s in self.basis() {
            dims[s.degree() as usize] += 1;
        }
        dims
    }

    /// `a · e_S` as an element of the built ring.
    pub fn monomial(&self, coeff: &Element, s: SubsetIndex) -> Result<Element> {
        self.base.check(coeff)?;
        let mut v = self.empty_view();
        v.coeffs[s.0 as usize] = coeff.clone();
        Ok(self.embed(&v))
    }

    /// The generator `e_i`, one-based.
    pub fn generator(&self, i: u32) -> Element {
        self.monomial(&self.base.one(), SubsetIndex::from_positions(&[i]))
            .expect("own identity")
    }

    fn empty_view(&self) -> ExteriorElement {
        ExteriorElement {
            n: self.n,
            coeffs: vec![self.base.zero(); 1 << self.n],
        }
    }

    /// Coefficient view of an element of the built ring.
    pub fn view(&self, x: &Element) -> Result<ExteriorElement> {
        self.ring.check(x)?;
        let ka = self.base.generator_count();
        let coeffs = x
            .coords()
            .chunks(ka)
            .map(|chunk| {
                let c: Vec<i64> = chunk.iter().map(|&v| v as i64).collect();
                self.base.element(&c)
            })
            .collect::<Result<_>>()?;
        Ok(ExteriorElement { n: self.n, coeffs })
    }

    /// Inverse of [`ExteriorAlgebra::view`].
    pub fn embed(&self, v: &ExteriorElement) -> Element {
        let c: Vec<i64> = v
            .coeffs
            .iter()
            .flat_map(|a| a.coords().iter().map(|&x| x as i64))
            .collect();
        self.ring
            .element(&c)
            .expect("view has the built ring's shape")
    }

    /// The degree-0 embedding `a -> a · 1`.
    pub fn scalar(&self, a: &Element) -> Result<Element> {
        self.monomial(a, SubsetIndex::EMPTY)
    }
}

/// `Λ(A^n)` as a ring; `n = 0` returns `A` itself.
pub fn build_exterior(base: &Ring, n: u32) -> Result<Ring> {
    Ok(ExteriorAlgebra::build(base, n)?.ring)
}

/// An element of `Λ(A^n)` as its `2^n` coefficients in `A`, indexed by mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExteriorElement {
    n: u32,
    coeffs: Vec<Element>,
}

impl ExteriorElement {
    pub fn coefficient(&self, s: SubsetIndex) -> &Element {
        &self.coeffs[s.0 as usize]
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Keeps only the degree-`s` coefficients.
    pub fn grade_project(&self, base: &Ring, s: u32) -> ExteriorElement {
        ExteriorElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(m, a)| {
                    if (m as u32).count_ones() == s {
                        a.clone()
                    } else {
                        base.zero()
                    }
                })
                .collect(),
        }
    }

    /// Degrees carrying a nonzero coefficient.
    pub fn support_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(m, _)| (m as u32).count_ones())
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }
}

/// Product in `Λ(A^n)` computed directly on coefficient views.
pub fn exterior_mul(
    base: &Ring,
    x: &ExteriorElement,
    y: &ExteriorElement,
) -> Result<ExteriorElement> {
    if x.n != y.n {
        return Err(RingError::RingMismatch);
    }
    let mut out = vec![base.zero(); x.coeffs.len()];
    for (s, a) in x.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (t, b) in y.coeffs.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            let ab = base.try_mul(a, b)?;
            let u = s | t;
            out[u] = match sign(SubsetIndex(s as u32), SubsetIndex(t as u32)) {
                Sign::Overlap => continue,
                Sign::Plus => base.add(&out[u], &ab),
                Sign::Minus => base.sub(&out[u], &ab),
            };
        }
    }
    Ok(ExteriorElement {
        n: x.n,
        coeffs: out,
    })
}

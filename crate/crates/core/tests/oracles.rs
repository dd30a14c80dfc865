//! Independent brute-force oracles compared with the library's algorithms.
//! Oracles here work from the definitions on full operation tables and share
//! no code with the scans they check.

#![allow(clippy::needless_range_loop)]

use ringlab_core::central::{
    center, center_by_elimination, center_by_scan, cyclic_c_submodule,
    cyclic_c_submodule_by_elimination, is_centrally_essential, prime_field_of,
};
use ringlab_core::corpus::{make_zmod, Corpus};
use ringlab_core::criteria::ann2_essential;
use ringlab_core::finring::*;

/// Full operation tables over element indices.
struct Tab {
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    one: usize,
}

impl Tab {
    fn new(r: &Ring) -> Self {
        let els: Vec<Element> = r.elements().unwrap().collect();
        let n = els.len();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                add[i * n + j] = r.index_of(&r.add(x, y));
                mul[i * n + j] = r.index_of(&r.mul(x, y));
            }
        }
        Tab {
            n,
            add,
            mul,
            one: r.index_of(&r.one()),
        }
    }
    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }
    fn a(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }
    fn neg(&self, a: usize) -> usize {
        (0..self.n).find(|&b| self.a(a, b) == 0).unwrap()
    }
    fn is_unit(&self, x: usize) -> bool {
        (0..self.n).any(|y| self.m(y, x) == self.one && self.m(x, y) == self.one)
    }
    fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&c| (0..self.n).all(|x| self.m(c, x) == self.m(x, c)))
            .collect()
    }
    /// Closure of `seed` under addition and right multiplication by `acts`.
    fn span(&self, seed: &[usize], acts: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut stack: Vec<usize> = seed.to_vec();
        while let Some(x) = stack.pop() {
            if inside[x] {
                continue;
            }
            inside[x] = true;
            for y in 0..self.n {
                if inside[y] {
                    stack.push(self.a(x, y));
                }
            }
            for &c in acts {
                stack.push(self.m(x, c));
            }
        }
        inside
    }
    /// Every submodule (additive subgroup closed under right multiplication
    /// by `acts`), found by enumerating subsets. Only for tiny rings.
    fn all_submodules(&self, acts: &[usize]) -> Vec<Vec<bool>> {
        assert!(self.n <= 16);
        let mut out = Vec::new();
        for bits in 0u32..1 << (self.n - 1) {
            let set: Vec<bool> = (0..self.n)
                .map(|i| i == 0 || bits >> (i - 1) & 1 == 1)
                .collect();
            let closed = (0..self.n).filter(|&x| set[x]).all(|x| {
                (0..self.n).filter(|&y| set[y]).all(|y| set[self.a(x, y)])
                    && acts.iter().all(|&c| set[self.m(x, c)])
            });
            if closed {
                out.push(set);
            }
        }
        out
    }
}

fn small_rings(max: u128) -> Vec<Ring> {
    let c = Corpus::builtin();
    c.names(false)
        .iter()
        .map(|n| c.ring(n).unwrap())
        .filter(|r| r.order() <= max)
        .collect()
}

#[test]
fn jacobson_radical_by_units() {
    for r in small_rings(256) {
        let t = Tab::new(&r);
        let unit: Vec<bool> = (0..t.n).map(|x| t.is_unit(x)).collect();
        let want: Vec<usize> = (0..t.n)
            .filter(|&x| (0..t.n).all(|y| unit[t.a(t.one, t.neg(t.m(y, x)))]))
            .collect();
        let got = jacobson_radical(&r).unwrap();
        assert_eq!(got.set().indices(), want.as_slice(), "{}", r.name());
    }
}

#[test]
fn center_by_full_commutation() {
    for r in small_rings(4096) {
        let c = center(&r).unwrap();
        let full: Vec<usize> = if r.order() <= 512 {
            Tab::new(&r).center()
        } else {
            let els: Vec<Element> = r.elements().unwrap().collect();
            (0..els.len())
                .filter(|&i| els.iter().all(|y| r.mul(&els[i], y) == r.mul(y, &els[i])))
                .collect()
        };
        assert_eq!(c.set().indices(), full.as_slice(), "{}", r.name());
        assert!(c.contains(&r.zero()) && c.contains(&r.one()));
        let m: Vec<Element> = c.members().collect();
        for x in &m {
            for y in &m {
                assert!(c.contains(&r.add(x, y)) && c.contains(&r.mul(x, y)));
            }
        }
    }
}

#[test]
fn elimination_matches_scan() {
    let c = Corpus::builtin();
    let mut seen = 0;
    for name in c.names(false) {
        let r = c.ring(&name).unwrap();
        if r.order() > 6561 || prime_field_of(&r).is_none() {
            continue;
        }
        seen += 1;
        let fast = center_by_elimination(&r).unwrap().unwrap();
        let slow = center_by_scan(&r).unwrap();
        assert_eq!(fast.set(), slow.set(), "{name}");
        let step = (r.order() as usize / 300).max(1);
        for i in (0..r.order() as usize).step_by(step) {
            let x = r.element_at(i);
            let a = cyclic_c_submodule(&r, &x).unwrap();
            let b = cyclic_c_submodule_by_elimination(&r, &x).unwrap().unwrap();
            assert_eq!(a.set(), b.set(), "{name} at {x}");
        }
    }
    assert!(seen >= 8);
    assert!(center_by_elimination(&make_zmod(4).unwrap())
        .unwrap()
        .is_none());
}

/// `R_C` is an essential extension of `C_C` iff every nonzero `C`-submodule
/// of `R` meets `C` nontrivially, checked over the whole submodule lattice.
#[test]
fn central_essentiality_over_all_submodules() {
    let rings = small_rings(16);
    assert!(rings.len() >= 15);
    for r in rings {
        let t = Tab::new(&r);
        let c = t.center();
        let subs = t.all_submodules(&c);
        let meets = |s: &Vec<bool>, m: &[bool]| (1..t.n).any(|x| s[x] && m[x]);
        let nonzero = |s: &Vec<bool>| s.iter().skip(1).any(|&b| b);
        let in_c: Vec<bool> = (0..t.n).map(|x| c.contains(&x)).collect();
        let want = subs.iter().filter(|s| nonzero(s)).all(|s| meets(s, &in_c));
        assert_eq!(
            is_centrally_essential(&r).unwrap().essential,
            want,
            "{}",
            r.name()
        );

        let two: Vec<bool> = (0..t.n).map(|x| t.a(x, x) == 0).collect();
        let want = subs.iter().filter(|s| nonzero(s)).all(|s| meets(s, &two));
        assert_eq!(ann2_essential(&r).unwrap().essential, want, "{}", r.name());
    }
}

/// Socles as sums of minimal submodules, from the full lattice.
#[test]
fn socles_from_the_lattice() {
    for r in small_rings(16) {
        let t = Tab::new(&r);
        let all: Vec<usize> = (0..t.n).collect();
        for (acts, got) in [
            (all.clone(), socle_right(&r).unwrap()),
            (
                t.center(),
                ringlab_core::central::socle_c_module(&r).unwrap(),
            ),
        ] {
            let subs = t.all_submodules(&acts);
            let size = |s: &Vec<bool>| s.iter().filter(|&&b| b).count();
            let minimal: Vec<&Vec<bool>> = subs
                .iter()
                .filter(|s| size(s) > 1)
                .filter(|s| {
                    !subs.iter().any(|o| {
                        size(o) > 1 && size(o) < size(s) && (0..t.n).all(|x| !o[x] || s[x])
                    })
                })
                .collect();
            let seed: Vec<usize> = minimal
                .iter()
                .flat_map(|s| (0..t.n).filter(move |&x| s[x]))
                .collect();
            let sum = t.span(&seed, &acts);
            let want: Vec<usize> = (0..t.n).filter(|&x| sum[x]).collect();
            assert_eq!(got.set().indices(), want.as_slice(), "{}", r.name());
        }
    }
}

fn prime_factors(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        let mut e = 0;
        while m.is_multiple_of(p) {
            m /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

#[test]
fn residue_rings_match_number_theory() {
    for m in 2..=30 {
        let r = make_zmod(m).unwrap();
        let f = prime_factors(m);
        let squarefree = f.iter().all(|&(_, e)| e == 1);
        assert_eq!(
            structural_predicates(&r).unwrap().reduced,
            squarefree,
            "Z/{m}"
        );
        assert_eq!(idempotents(&r).unwrap().len(), 1 << f.len(), "Z/{m}");
    }
}

//! Verification suites driven by the corpus manifest.
//!
//! Reports list their checks in manifest order and carry no timings unless
//! asked, so a suite's JSON is byte-identical for any worker count.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::report::{coords, TheoremReport};
use super::theorems::*;
use crate::central::{center, is_centrally_essential};
use crate::corpus::{make_gf, Corpus, Tier};
use crate::error::{Result, RingError};
use crate::exterior::{
    build_exterior, exterior_mul, exterior_order, sign, ExteriorAlgebra, Sign, SubsetIndex,
};
use crate::finring::{jacobson_radical, quotient_ring, Limits, Ring};

pub const SCHEMA: u32 = 1;

/// Largest ring on which the ring axioms are checked on every triple.
pub const EXHAUSTIVE_LAW_LIMIT: usize = 512;
/// Largest exterior rank for the exhaustive sign checks.
pub const SIGN_CHECK_RANK: u32 = 5;
pub const GRADING_PAIRS: usize = 1000;
pub const GRADING_SEED: u64 = 0x5eed_1a3b_da00_0003;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Laws,
    Thm13,
    Thm14,
    Lemma22,
    Prop24,
    Prop28,
    Thm15,
    Remark12,
    Corpus,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Laws,
        Suite::Thm13,
        Suite::Thm14,
        Suite::Lemma22,
        Suite::Prop24,
        Suite::Prop28,
        Suite::Thm15,
        Suite::Remark12,
        Suite::Corpus,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Laws => "laws",
            Suite::Thm13 => "thm13",
            Suite::Thm14 => "thm14",
            Suite::Lemma22 => "lemma22",
            Suite::Prop24 => "prop24",
            Suite::Prop28 => "prop28",
            Suite::Thm15 => "thm15",
            Suite::Remark12 => "remark12",
            Suite::Corpus => "corpus",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.id() == s)
            .ok_or_else(|| RingError::InvalidArgument(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Include slow-tier corpus entries and grid points.
    pub include_slow: bool,
    /// Record wall-clock time per check (makes reports nondeterministic).
    pub timings: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub schema: u32,
    pub suite: String,
    pub passed: bool,
    pub checks: usize,
    pub skipped: usize,
    pub failures: usize,
    pub reports: Vec<TheoremReport>,
}

impl SuiteReport {
    fn new(suite: Suite, reports: Vec<TheoremReport>) -> Self {
        let failures = reports.iter().filter(|r| !r.passed).count();
        SuiteReport {
            schema: SCHEMA,
            suite: suite.id().to_string(),
            passed: failures == 0,
            checks: reports.iter().filter(|r| !r.skipped).count(),
            skipped: reports.iter().filter(|r| r.skipped).count(),
            failures,
            reports,
        }
    }

    pub fn first_failure(&self) -> Option<&TheoremReport> {
        self.reports.iter().find(|r| !r.passed)
    }
}

pub fn run_suite(suite: Suite, corpus: &Corpus, opts: SuiteOptions) -> Result<SuiteReport> {
    let reports = match suite {
        Suite::Laws => laws(corpus, opts),
        Suite::Thm13 => thm13(corpus, opts),
        Suite::Thm14 => thm14(corpus, opts),
        Suite::Lemma22 => lemma22(corpus, opts),
        Suite::Prop24 => prop24(corpus, opts),
        Suite::Prop28 => prop28(corpus, opts),
        Suite::Thm15 => thm15(corpus, opts),
        Suite::Remark12 => remark12(corpus, opts),
        Suite::Corpus => corpus_expectations(corpus, opts),
    }?;
    Ok(SuiteReport::new(suite, reports))
}

/// Order-preserving parallel map; the first error in input order wins.
fn par_map<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(&T) -> Result<U> + Sync + Send,
) -> Result<Vec<U>> {
    let out: Vec<Result<U>> = items.par_iter().map(f).collect();
    out.into_iter().collect()
}

fn timed(opts: SuiteOptions, f: impl FnOnce() -> Result<TheoremReport>) -> Result<TheoremReport> {
    let start = Instant::now();
    let mut r = f()?;
    if opts.timings {
        r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(r)
}

/// A violated theorem becomes a failing report instead of aborting the suite.
fn catch(r: TheoremReport, res: Result<TheoremReport>) -> Result<TheoremReport> {
    match res {
        Err(e @ RingError::TheoremViolated { .. }) => Ok(r.fail(e.to_string())),
        other => other,
    }
}

fn corpus_rings(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<Ring>> {
    corpus
        .names(opts.include_slow)
        .iter()
        .map(|n| corpus.ring(n))
        .collect()
}

/// `Λ(A^n)` over the exterior grid, skipping points above the grid's size
/// bound. Returns `(base, n, built ring or skip reason)`.
fn exterior_points(corpus: &Corpus) -> Result<Vec<(Ring, u32, Option<u128>)>> {
    let grid = &corpus.manifest().exterior_grid;
    let mut out = Vec::new();
    for b in &grid.bases {
        let base = corpus.ring(b)?;
        for &n in &grid.n {
            let size = exterior_order(&base, n);
            out.push((base.clone(), n, (size > grid.max_size).then_some(size)));
        }
    }
    Ok(out)
}

fn thm13(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let points = exterior_points(corpus)?;
    par_map(&points, |(base, n, over)| {
        let r = TheoremReport::new("thm13", base.name(), Some(*n));
        if let Some(size) = over {
            return Ok(r.skip(format!("|Λ| = {size} is above the grid bound")));
        }
        timed(opts, || {
            let fast = thm13_check(base, *n)?;
            let built = build_exterior(base, *n)?;
            let oracle = is_centrally_essential(&built)?;
            Ok(r.compare(fast, oracle.essential)
                .witness(oracle.witness.as_ref()))
        })
    })
}

fn thm14(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let rings = corpus_rings(corpus, opts)?;
    let pairs: Vec<(Ring, u32)> = rings
        .iter()
        .flat_map(|r| (1..=3).map(move |n| (r.clone(), n)))
        .collect();
    par_map(&pairs, |(a, n)| {
        let r = TheoremReport::new("thm14", a.name(), Some(*n));
        timed(opts, || {
            let res = (|| {
                let v = thm14_check(a, *n)?;
                let oracle = thm13_check(a, *n)?;
                let r = r.clone().compare(v.part1, oracle);
                Ok(match v.part2 {
                    Some(p2) => r.note(format!("no zero divisors; domain form {p2}")),
                    None => r,
                })
            })();
            catch(r, res)
        })
    })
}

fn lemma22(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let rings = corpus_rings(corpus, opts)?;
    par_map(&rings, |a| {
        timed(opts, || {
            let ess = ann2_essential(a)?;
            let pow2 = is_power_of_two(a.characteristic());
            Ok(TheoremReport::new("lemma22", a.name(), None)
                .compare(ess.essential, pow2)
                .witness(ess.witness.as_ref())
                .note(format!("characteristic {}", a.characteristic())))
        })
    })
}

fn prop24(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let mut rings = corpus_rings(corpus, opts)?;
    for (base, n, over) in exterior_points(corpus)? {
        if over.is_none() {
            rings.push(build_exterior(&base, n)?);
        }
    }
    par_map(&rings, |a| {
        let r = TheoremReport::new("prop24", a.name(), None);
        timed(opts, || {
            if !is_centrally_essential(a)?.essential {
                return Ok(r.skip("not centrally essential"));
            }
            let bad = prop24_check(a)?;
            Ok(r.verdict(bad.is_none()).witness(bad.as_ref()))
        })
    })
}

fn prop28(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let rings = corpus_rings(corpus, opts)?;
    let mut reports = par_map(&rings, |a| {
        let r = TheoremReport::new("prop28", a.name(), None);
        timed(opts, || {
            let res = prop28_report(a).map(|p| {
                let flags = format!("conditions {:?}", p.conditions);
                if p.centrally_essential {
                    r.clone().verdict(p.agree()).note(flags)
                } else {
                    r.clone().skip(format!("not centrally essential; {flags}"))
                }
            });
            catch(r, res)
        })
    })?;
    // Upper triangular 2x2 matrices over F_2: not semiprime, yet its center
    // (the scalars) is.
    let t2 = corpus.ring("t2-f2")?;
    let p = prop28_report(&t2)?;
    reports.push(
        TheoremReport::new("t2-center-semiprime", t2.name(), None)
            .verdict(!p.ring.semiprime && p.center.semiprime)
            .note(format!(
                "semiprime {}, center semiprime {}",
                p.ring.semiprime, p.center.semiprime
            )),
    );
    Ok(reports)
}

fn thm15(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let rings = corpus_rings(corpus, opts)?;
    par_map(&rings, |a| {
        let r = TheoremReport::new("thm15", a.name(), None);
        timed(opts, || {
            if !is_centrally_essential(a)?.essential {
                return Ok(r.skip("not centrally essential"));
            }
            let res = thm15_part1_check(a).map(|t| {
                r.clone().verdict(t.commutative && t.regular).note(format!(
                    "|J| = {}, |R/J| = {}",
                    t.radical_size, t.quotient_size
                ))
            });
            catch(r, res)
        })
    })
}

fn remark12(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let grid = &corpus.manifest().parity_grid;
    let mut points = Vec::new();
    for &p in &grid.primes {
        let field = make_gf(p, 1, &[])?.with_limits(corpus.limits());
        for &n in &grid.n {
            points.push((field.clone(), n));
        }
    }
    par_map(&points, |(field, n)| {
        let p = field.characteristic();
        let r = TheoremReport::new("remark12", field.name(), Some(*n));
        let size = exterior_order(field, *n);
        if size > grid.max_size {
            return Ok(r.skip(format!("|Λ| = {size} is above the grid bound")));
        }
        if size > grid.slow_above && !opts.include_slow {
            return Ok(r.skip(format!("|Λ| = {size} is in the slow tier")));
        }
        timed(opts, || {
            let oracle = is_centrally_essential(&build_exterior(field, *n)?)?;
            Ok(r.compare(p == 2 || n % 2 == 1, oracle.essential)
                .witness(oracle.witness.as_ref()))
        })
    })
}

fn corpus_expectations(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let names = corpus.names(opts.include_slow);
    par_map(&names, |name| {
        let e = corpus.entry(name)?;
        let a = corpus.ring(name)?;
        let r = TheoremReport::new("corpus", name, None);
        timed(opts, || {
            let x = &e.expect;
            let mut bad = Vec::new();
            let mut check = |what: &str, want: Option<String>, got: String| {
                if let Some(w) = want {
                    if w != got {
                        bad.push(format!("{what}: expected {w}, got {got}"));
                    }
                }
            };
            check("size", x.size.map(|v| v.to_string()), a.order().to_string());
            check(
                "characteristic",
                x.characteristic.map(|v| v.to_string()),
                a.characteristic().to_string(),
            );
            check(
                "commutative",
                x.commutative.map(|v| v.to_string()),
                crate::finring::is_commutative(&a).to_string(),
            );
            if x.center_size.is_some() || x.centrally_essential.is_some() {
                check(
                    "center size",
                    x.center_size.map(|v| v.to_string()),
                    center(&a)?.len().to_string(),
                );
                check(
                    "centrally essential",
                    x.centrally_essential.map(|v| v.to_string()),
                    is_centrally_essential(&a)?.essential.to_string(),
                );
            }
            let slow = if e.tier == Tier::Slow {
                " (slow tier)"
            } else {
                ""
            };
            Ok(if bad.is_empty() {
                r.verdict(true).note(format!("all expectations met{slow}"))
            } else {
                r.fail(bad.join("; "))
            })
        })
    })
}

// ---- laws -------------------------------------------------------------

/// Addition and multiplication tables indexed by element index.
struct Tables {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    one: usize,
}

impl Tables {
    fn of(ring: &Ring) -> Result<Self> {
        let n = ring.scan_size("law tables")?;
        let elems: Vec<_> = (0..n).map(|i| ring.decode(i)).collect();
        let build = |op: &(dyn Fn(&[u32], &[u32]) -> crate::finring::Coords + Sync)| {
            (0..n * n)
                .into_par_iter()
                .map(|ab| ring.encode(&op(&elems[ab / n], &elems[ab % n])) as u32)
                .collect::<Vec<u32>>()
        };
        Ok(Tables {
            n,
            add: build(&|a, b| ring.add_c(a, b)),
            mul: build(&|a, b| ring.mul_c(a, b)),
            one: ring.encode(ring.one_coords()),
        })
    }

    fn m(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    fn a(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b] as usize
    }

    /// Least `(x, y, z)` breaking associativity or a distributive law, or
    /// `(x, x, x)` when `x` breaks the unit law.
    fn violation(&self) -> Option<(usize, usize, usize, &'static str)> {
        let n = self.n;
        (0..n).into_par_iter().find_map_first(|x| {
            if self.m(self.one, x) != x || self.m(x, self.one) != x {
                return Some((x, x, x, "unit"));
            }
            for y in 0..n {
                let xy = self.m(x, y);
                for z in 0..n {
                    if self.m(xy, z) != self.m(x, self.m(y, z)) {
                        return Some((x, y, z, "associativity"));
                    }
                    if self.m(x, self.a(y, z)) != self.a(xy, self.m(x, z)) {
                        return Some((x, y, z, "left distributivity"));
                    }
                    if self.m(self.a(y, z), x) != self.a(self.m(y, x), self.m(z, x)) {
                        return Some((x, y, z, "right distributivity"));
                    }
                }
            }
            None
        })
    }
}

fn ring_laws(ring: &Ring, opts: SuiteOptions) -> Result<TheoremReport> {
    let r = TheoremReport::new("ring-laws", ring.name(), None);
    timed(opts, || {
        if let Some(spec) = ring.to_spec() {
            if let Err(e) = Ring::from_spec(&spec) {
                return Ok(r.fail(format!("presentation no longer validates: {e}")));
            }
        }
        let t = Tables::of(ring)?;
        Ok(match t.violation() {
            None => r.verdict(true),
            Some((x, y, z, law)) => {
                let mut r = r.fail(format!("{law} fails"));
                r.witnesses = [x, y, z]
                    .iter()
                    .map(|&i| coords(&ring.element_at(i)))
                    .collect();
                r
            }
        })
    })
}

fn law_rings(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<Ring>> {
    let mut rings = Vec::new();
    for a in corpus_rings(corpus, opts)? {
        if a.order() > EXHAUSTIVE_LAW_LIMIT as u128 {
            continue;
        }
        let j = jacobson_radical(&a)?;
        if !j.is_zero() {
            rings.push(quotient_ring(&a, &j)?.renamed(format!("{}/J", a.name())));
        }
        rings.push(a);
    }
    Ok(rings)
}

fn sign_checks(n: u32) -> (TheoremReport, TheoremReport) {
    let masks = 1u32 << n;
    let s = SubsetIndex::from_mask;
    let mut cocycle = None;
    let mut anti = None;
    for a in 0..masks {
        for b in 0..masks {
            if a & b != 0 {
                continue;
            }
            let (sa, sb) = (s(a), s(b));
            let flip = if (sa.degree() * sb.degree()) % 2 == 1 {
                -1
            } else {
                1
            };
            if anti.is_none() && to_int(sign(sa, sb)) != flip * to_int(sign(sb, sa)) {
                anti = Some((a, b));
            }
            for c in 0..masks {
                if (a | b) & c != 0 {
                    continue;
                }
                let sc = s(c);
                let lhs = to_int(sign(sa, sb)) * to_int(sign(sa.union(sb), sc));
                let rhs = to_int(sign(sb, sc)) * to_int(sign(sa, sb.union(sc)));
                if cocycle.is_none() && lhs != rhs {
                    cocycle = Some((a, b, c));
                }
            }
        }
    }
    let rep = |name: &str, bad: Option<String>| {
        let r = TheoremReport::new(name, "-", Some(n));
        match bad {
            None => r.verdict(true),
            Some(w) => r.fail(w),
        }
    };
    (
        rep(
            "sign-cocycle",
            cocycle.map(|(a, b, c)| format!("fails at {} {} {}", s(a), s(b), s(c))),
        ),
        rep(
            "anticommutativity",
            anti.map(|(a, b)| format!("fails at {} {}", s(a), s(b))),
        ),
    )
}

fn to_int(s: Sign) -> i32 {
    match s {
        Sign::Plus => 1,
        Sign::Minus => -1,
        Sign::Overlap => 0,
    }
}

/// Homogeneous parts multiply into the sum of their degrees, and the built
/// ring's product agrees with the coefficient-level product.
fn grading(opts: SuiteOptions) -> Result<TheoremReport> {
    let f3 = make_gf(3, 1, &[])?;
    let lam = ExteriorAlgebra::build(&f3, 3)?;
    let ring = lam.ring();
    let r = TheoremReport::new("grading", ring.name(), Some(3));
    timed(opts, || {
        let size = ring.size()?;
        let mut rng = ChaCha8Rng::seed_from_u64(GRADING_SEED);
        for _ in 0..GRADING_PAIRS {
            let x = lam.view(&ring.element_at(rng.random_range(0..size)))?;
            let y = lam.view(&ring.element_at(rng.random_range(0..size)))?;
            let s = rng.random_range(0..=3u32);
            let t = rng.random_range(0..=3u32);
            let xs = x.grade_project(&f3, s);
            let yt = y.grade_project(&f3, t);
            let prod = ring.mul(&lam.embed(&xs), &lam.embed(&yt));
            let view = lam.view(&prod)?;
            let expected: Vec<u32> = if view.support_degrees().is_empty() {
                vec![]
            } else {
                vec![s + t]
            };
            let direct = exterior_mul(&f3, &xs, &yt)?;
            if view.support_degrees() != expected || direct != view {
                let mut r = r.fail(format!("degrees {s} and {t}"));
                r.witnesses = vec![coords(&lam.embed(&xs)), coords(&lam.embed(&yt))];
                return Ok(r);
            }
        }
        Ok(r.verdict(true)
            .note(format!("{GRADING_PAIRS} seeded random pairs")))
    })
}

/// Every exterior algebra over a grid base with rank up to 3 validates.
/// Validation only touches generator triples, so the enumeration cap is
/// lifted for the build.
fn exterior_validation(corpus: &Corpus) -> Result<Vec<TheoremReport>> {
    let grid = &corpus.manifest().exterior_grid;
    let mut out = Vec::new();
    for b in &grid.bases {
        let base = corpus.ring(b)?;
        let unbounded = base.with_limits(Limits {
            enumeration_cap: u64::MAX,
            ..base.limits()
        });
        for n in 1..=3 {
            let r = TheoremReport::new("exterior-validates", base.name(), Some(n));
            out.push(match build_exterior(&unbounded, n) {
                Ok(_) => r.verdict(true),
                Err(e @ RingError::Invalid(_)) => r.fail(e.to_string()),
                Err(e) => return Err(e),
            });
        }
    }
    Ok(out)
}

fn laws(corpus: &Corpus, opts: SuiteOptions) -> Result<Vec<TheoremReport>> {
    let rings = law_rings(corpus, opts)?;
    let mut reports = par_map(&rings, |r| ring_laws(r, opts))?;
    reports.extend(exterior_validation(corpus)?);
    for n in 1..=SIGN_CHECK_RANK {
        let (c, a) = sign_checks(n);
        reports.push(c);
        reports.push(a);
    }
    reports.push(grading(opts)?);
    Ok(reports)
}

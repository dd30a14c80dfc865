//! Constructors for the standard small rings.

use crate::error::{Result, RingError};
use crate::finring::{Encoding, Ring, RingSpec};
use crate::linalg::is_prime;

fn check_cap(name: &str, order: Option<u128>, limits_of: &Ring) -> Result<()> {
    let cap = limits_of.limits().enumeration_cap as u128;
    match order {
        Some(o) if o <= cap => Ok(()),
        Some(o) => Err(RingError::too_big(name, o, cap)),
        None => Err(RingError::too_big(name, u128::MAX, cap)),
    }
}

fn struct_spec(ring: &Ring) -> Result<RingSpec> {
    ring.to_spec().ok_or_else(|| {
        RingError::InvalidArgument(format!(
            "`{}` is not in struct-constant encoding",
            ring.name()
        ))
    })
}

/// `Z/m`.
pub fn make_zmod(m: u64) -> Result<Ring> {
    if m < 2 {
        return Err(RingError::InvalidArgument(format!("Z/{m} needs m >= 2")));
    }
    RingSpec {
        name: format!("z{m}"),
        moduli: vec![m],
        one: vec![1],
        mul: vec![vec![vec![1]]],
    }
    .validate()
}

/// Polynomial remainder of `a` modulo the monic `f` over `F_p`, with
/// coefficients listed from the constant term up.
fn poly_rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let df = f.len() - 1;
    while r.len() > df {
        let lead = r.pop().unwrap() % p;
        let shift = r.len() - df;
        for (i, &c) in f[..df].iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
        }
    }
    r
}

/// Monic `f` of degree `d` is reducible iff some monic polynomial of degree
/// `1..=d/2` divides it.
fn find_factor(f: &[u64], p: u64) -> Option<Vec<u64>> {
    let d = f.len() - 1;
    for deg in 1..=d / 2 {
        let count = p.pow(deg as u32);
        for code in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut c = code;
            for _ in 0..deg {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&v| v == 0) {
                return Some(g);
            }
        }
    }
    None
}

/// `GF(p^k) = F_p[x]/(f)` for a monic irreducible `f` of degree `k`, given by
/// its non-leading coefficients `c_0, ..., c_{k-1}`. For `k = 1` the list may
/// be empty.
pub fn make_gf(p: u64, k: u32, irreducible: &[u64]) -> Result<Ring> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    if k == 0 {
        return Err(RingError::InvalidArgument("GF(p^0) is not a field".into()));
    }
    let k = k as usize;
    let mut f: Vec<u64> = match irreducible.len() {
        0 if k == 1 => vec![0],
        n if n == k => irreducible.iter().map(|c| c % p).collect(),
        n => {
            return Err(RingError::InvalidArgument(format!(
                "degree {k} polynomial needs {k} coefficients, got {n}"
            )))
        }
    };
    f.push(1);
    if let Some(g) = find_factor(&f, p) {
        return Err(RingError::NotIrreducible {
            p,
            detail: format!("divisible by {}", show_poly(&g)),
        });
    }
    let mut mul = vec![vec![vec![0i64; k]; k]; k];
    for (i, row) in mul.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut mono = vec![0u64; i + j + 1];
            mono[i + j] = 1;
            for (l, c) in poly_rem(&mono, &f, p).into_iter().enumerate() {
                entry[l] = c as i64;
            }
        }
    }
    let mut one = vec![0i64; k];
    one[0] = 1;
    let name = if k == 1 {
        format!("f{p}")
    } else {
        format!("gf{}", p.pow(k as u32))
    };
    RingSpec {
        name,
        moduli: vec![p; k],
        one,
        mul,
    }
    .validate()
}

fn show_poly(g: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in g.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && i > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match i {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        });
    }
    terms.join("+")
}

pub fn gf4() -> Ring {
    make_gf(2, 2, &[1, 1]).expect("x^2+x+1 is irreducible over F_2")
}

pub fn gf8() -> Ring {
    make_gf(2, 3, &[1, 1, 0]).expect("x^3+x+1 is irreducible over F_2")
}

pub fn gf9() -> Ring {
    make_gf(3, 2, &[1, 0]).expect("x^2+1 is irreducible over F_3")
}

/// Matrix units `E_ij` with `i <= j` (triangular) or all `i, j`, tensored with
/// the base generators. Generators are ordered by position (row-major), then
/// by base generator.
fn matrix_like(base: &Ring, d: usize, upper: bool, name: String) -> Result<Ring> {
    if d == 0 {
        return Err(RingError::InvalidArgument(
            "matrix size must be >= 1".into(),
        ));
    }
    if base.encoding() != Encoding::StructConsts {
        return Err(RingError::InvalidArgument(
            "matrix rings need a struct-constant base ring".into(),
        ));
    }
    let spec = struct_spec(base)?;
    let positions: Vec<(usize, usize)> = (0..d)
        .flat_map(|i| (0..d).map(move |j| (i, j)))
        .filter(|&(i, j)| !upper || i <= j)
        .collect();
    let order = base.order().checked_pow(positions.len() as u32);
    check_cap(&name, order, base)?;

    let kb = spec.moduli.len();
    let pos_of = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j));
    let k = positions.len() * kb;
    let moduli: Vec<u64> = (0..k).map(|g| spec.moduli[g % kb]).collect();
    let mut one = vec![0i64; k];
    for i in 0..d {
        let p = pos_of(i, i).expect("diagonal is present");
        for (u, &c) in spec.one.iter().enumerate() {
            one[p * kb + u] = c;
        }
    }
    let mut mul = vec![vec![vec![0i64; k]; k]; k];
    for (a, &(i, j)) in positions.iter().enumerate() {
        for (b, &(l, m)) in positions.iter().enumerate() {
            if j != l {
                continue;
            }
            let Some(c) = pos_of(i, m) else { continue };
            for u in 0..kb {
                for v in 0..kb {
                    for w in 0..kb {
                        mul[a * kb + u][b * kb + v][c * kb + w] = spec.mul[u][v][w];
                    }
                }
            }
        }
    }
    let ring = RingSpec {
        name,
        moduli,
        one,
        mul,
    }
    .validate()?;
    Ok(ring.with_limits(base.limits()))
}

/// `M_d(A)`.
pub fn make_matrix_ring(base: &Ring, d: usize) -> Result<Ring> {
    if d == 1 {
        return Ok(base.clone());
    }
    matrix_like(base, d, false, format!("m{d}({})", base.name()))
}

/// Upper triangular `d × d` matrices over `A`.
pub fn make_upper_triangular(base: &Ring, d: usize) -> Result<Ring> {
    if d == 1 {
        return Ok(base.clone());
    }
    matrix_like(base, d, true, format!("t{d}({})", base.name()))
}

/// `A × B` with componentwise operations.
pub fn make_direct_product(a: &Ring, b: &Ring) -> Result<Ring> {
    let name = format!("{}x{}", a.name(), b.name());
    let sa = struct_spec(a)?;
    let sb = struct_spec(b)?;
    check_cap(&name, a.order().checked_mul(b.order()), a)?;
    let (ka, kb) = (sa.moduli.len(), sb.moduli.len());
    let k = ka + kb;
    let mut mul = vec![vec![vec![0i64; k]; k]; k];
    for i in 0..ka {
        for j in 0..ka {
            mul[i][j][..ka].copy_from_slice(&sa.mul[i][j]);
        }
    }
    for i in 0..kb {
        for j in 0..kb {
            mul[ka + i][ka + j][ka..].copy_from_slice(&sb.mul[i][j]);
        }
    }
    let ring = RingSpec {
        name,
        moduli: sa.moduli.iter().chain(&sb.moduli).copied().collect(),
        one: sa.one.iter().chain(&sb.one).copied().collect(),
        mul,
    }
    .validate()?;
    Ok(ring.with_limits(a.limits()))
}

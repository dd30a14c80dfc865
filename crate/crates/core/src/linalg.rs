//! Gaussian elimination over a prime field `F_p`.
//!
//! Used as the fast path for rings whose additive group is `(Z/p)^k`: there
//! the center is a null space and cyclic submodules are spans.

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = inv_mod(rows[r][c], p);
        for v in rows[r].iter_mut() {
            *v = *v * inv % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    rows[i][j] = (rows[i][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{ v : M v = 0 }` for `M` given by rows over `ncols` columns.
pub fn nullspace(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    rows.retain(|r| r.iter().any(|&v| v % p != 0));
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        rref(&mut rows, p)
    };
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = (p - row[f]) % p;
            }
            v
        })
        .collect()
}

/// Echelon basis of the span of `vectors`.
pub fn span_basis(vectors: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let mut rows: Vec<Vec<u64>> = vectors
        .into_iter()
        .filter(|r| r.iter().any(|&v| v % p != 0))
        .collect();
    if rows.is_empty() {
        return rows;
    }
    rref(&mut rows, p);
    rows
}

/// Every vector of the span of `basis`, as coordinate vectors.
pub fn enumerate_span(basis: &[Vec<u64>], dim: usize, p: u64) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0u32; dim]];
    for b in basis {
        let prev = out.len();
        for t in 1..p {
            for i in 0..prev {
                let v: Vec<u32> = out[i]
                    .iter()
                    .zip(b)
                    .map(|(&x, &y)| ((x as u64 + t * y) % p) as u32)
                    .collect();
                out.push(v);
            }
        }
    }
    out
}

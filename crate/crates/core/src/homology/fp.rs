//! Linear algebra over prime fields on `u64` residues.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::snf::IntMatrix;

pub fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue below p")
}

pub fn inverse(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a is nonzero mod p
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

pub fn reduce_matrix(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    m.entries
        .iter()
        .map(|row| row.iter().map(|x| residue(x, p)).collect())
        .collect()
}

/// Row-reduces in place to reduced row echelon form; returns pivot columns.
pub fn rref(a: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(src) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, src);
        let inv = inverse(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let (pivot, target) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in target.iter_mut().zip(pivot.iter()) {
                    if *y != 0 {
                        *x = (*x + p - mul(f, *y, p)) % p;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<u64>], p: u64) -> usize {
    let mut a = m.to_vec();
    rref(&mut a, p).len()
}

/// Basis of `{x : A x = 0}` for `A` with `cols` columns.
pub fn kernel(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, p);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - a[row][free]) % p;
        }
        out.push(v);
    }
    out
}

/// Incrementally built echelon basis; each stored row is reduced against the
/// earlier rows, so sequential elimination gives unique coordinates.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Echelon {
    pub fn new(p: u64) -> Self {
        Echelon {
            p,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `v` in place, returning the coefficient used for each row.
    pub fn reduce(&self, v: &mut [u64]) -> Vec<u64> {
        let p = self.p;
        let mut coeffs = Vec::with_capacity(self.rows.len());
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    if *y != 0 {
                        *x = (*x + p - mul(c, *y, p)) % p;
                    }
                }
            }
            coeffs.push(c);
        }
        coeffs
    }

    /// Adds `v` if it is independent; returns whether it was added. The
    /// stored row is `v` reduced and scaled to a unit pivot.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inverse(v[pc], self.p);
        for x in v.iter_mut() {
            *x = mul(*x, inv, self.p);
        }
        self.rows.push((pc, v));
        true
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.rows[i].1
    }
}

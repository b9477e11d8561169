use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense matrix with arbitrary-precision entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    /// `self · other`, skipping zero entries.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (c, b) in other.entries[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.entries[r][c] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Diagonal of the Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// `d_1 | d_2 | … | d_r`, all positive, units included.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

impl Snf {
    /// Invariant factors other than 1.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().filter(|d| !num_traits::One::is_one(*d))
    }
}

fn min_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((br, bc)) => x.magnitude() < a[br][bc].magnitude(),
            };
            if better {
                best = Some((r, c));
                if x.magnitude() == BigInt::from(1).magnitude() {
                    return best;
                }
            }
        }
    }
    best
}

/// Smith normal form by pivoting on entries of least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut a = m.entries.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((r, c)) = min_nonzero(&a, t) else {
            break;
        };
        a.swap(t, r);
        for row in a.iter_mut() {
            row.swap(t, c);
        }
        loop {
            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                let (head, tail) = a.split_at_mut(r);
                let pivot = &head[t];
                for (x, p) in tail[0].iter_mut().zip(pivot).skip(t) {
                    if !p.is_zero() {
                        *x -= &q * p;
                    }
                }
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    if !row[t].is_zero() {
                        let delta = &q * &row[t];
                        row[c] -= delta;
                    }
                }
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
            // move the smallest remainder in row or column t onto the pivot
            let mut best = (t, t);
            for r in t + 1..rows {
                if !a[r][t].is_zero() && a[r][t].magnitude() < a[best.0][best.1].magnitude() {
                    best = (r, t);
                }
            }
            for c in t + 1..cols {
                if !a[t][c].is_zero() && a[t][c].magnitude() < a[best.0][best.1].magnitude() {
                    best = (t, c);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
            } else if best.1 != t {
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                let l = &diag[i] / &g * &diag[j];
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    Snf {
        rank: diag.len(),
        factors: diag,
    }
}

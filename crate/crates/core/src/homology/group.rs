use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::bidegree::Bidegree;
use crate::ring::Ring;

/// A finitely generated abelian group `Z^r ⊕ Z/d_1 ⊕ … ⊕ Z/d_k` with
/// `1 < d_1 | d_2 | … | d_k`. Over a field only `free_rank` is used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    pub free_rank: u64,
    pub torsion: Vec<u64>,
}

fn factorize(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut q = 1;
            while n.is_multiple_of(d) {
                n /= d;
                q *= d;
            }
            out.push((d, q));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: u64) -> Self {
        AbelianGroup::from_cyclic(0, [order])
    }

    /// Normalizes a direct sum of `Z^free` and cyclic groups of the given
    /// orders into invariant factor form. Orders 0 and 1 are ignored.
    pub fn from_cyclic(free: u64, orders: impl IntoIterator<Item = u64>) -> Self {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for n in orders {
            if n > 1 {
                for (p, q) in factorize(n) {
                    by_prime.entry(p).or_default().push(q);
                }
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable();
            let offset = len - powers.len();
            for (i, q) in powers.iter().enumerate() {
                torsion[offset + i] *= q;
            }
        }
        AbelianGroup {
            free_rank: free,
            torsion,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup::from_cyclic(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).copied(),
        )
    }

    /// Prime-power cyclic summands, as `(p, p^k)`.
    pub fn primary_summands(&self) -> Vec<(u64, u64)> {
        let mut out: Vec<_> = self.torsion.iter().flat_map(|&d| factorize(d)).collect();
        out.sort_unstable();
        out
    }

    /// The `p`-power torsion, without the free part.
    pub fn p_part(&self, p: u64) -> AbelianGroup {
        AbelianGroup::from_cyclic(
            0,
            self.primary_summands()
                .into_iter()
                .filter(|&(q, _)| q == p)
                .map(|(_, n)| n),
        )
    }

    /// Number of cyclic summands of order divisible by `p`.
    pub fn p_rank(&self, p: u64) -> u64 {
        self.torsion.iter().filter(|&&d| d % p == 0).count() as u64
    }

    pub fn tensor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = Vec::new();
        for _ in 0..other.free_rank {
            orders.extend_from_slice(&self.torsion);
        }
        for _ in 0..self.free_rank {
            orders.extend_from_slice(&other.torsion);
        }
        for &a in &self.torsion {
            for &b in &other.torsion {
                orders.push(a.gcd(&b));
            }
        }
        AbelianGroup::from_cyclic(self.free_rank * other.free_rank, orders)
    }

    pub fn tor(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut orders = Vec::new();
        for &a in &self.torsion {
            for &b in &other.torsion {
                orders.push(a.gcd(&b));
            }
        }
        AbelianGroup::from_cyclic(0, orders)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Homology of a weighted complex: one abelian group per bidegree. Zero
/// groups are not stored. Over `F_p`, `free_rank` holds the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub ring: Ring,
    pub groups: BTreeMap<Bidegree, AbelianGroup>,
}

impl HomologyGroup {
    pub fn new(ring: Ring) -> Self {
        HomologyGroup {
            ring,
            groups: BTreeMap::new(),
        }
    }

    /// `Z` (or the field) in bidegree `(0, 0)`.
    pub fn unit(ring: Ring) -> Self {
        let mut h = HomologyGroup::new(ring);
        h.add(Bidegree::ZERO, &AbelianGroup::free(1));
        h
    }

    pub fn get(&self, b: Bidegree) -> AbelianGroup {
        self.groups.get(&b).cloned().unwrap_or_default()
    }

    /// Adds `g` as a direct summand in bidegree `b`.
    pub fn add(&mut self, b: Bidegree, g: &AbelianGroup) {
        if g.is_zero() {
            return;
        }
        let entry = self.groups.entry(b).or_default();
        *entry = entry.direct_sum(g);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Bidegree, &AbelianGroup)> {
        self.groups.iter()
    }

    pub fn weight_part(&self, w: u32) -> HomologyGroup {
        HomologyGroup {
            ring: self.ring,
            groups: self
                .groups
                .iter()
                .filter(|(b, _)| b.weight == w)
                .map(|(b, g)| (*b, g.clone()))
                .collect(),
        }
    }

    pub fn truncated(&self, max_weight: u32) -> HomologyGroup {
        HomologyGroup {
            ring: self.ring,
            groups: self
                .groups
                .iter()
                .filter(|(b, _)| b.weight <= max_weight)
                .map(|(b, g)| (*b, g.clone()))
                .collect(),
        }
    }

    /// Moves `(i, d)` to `(i - αd, d)`.
    pub fn regraded(&self, alpha: i64) -> HomologyGroup {
        HomologyGroup {
            ring: self.ring,
            groups: self
                .groups
                .iter()
                .map(|(b, g)| {
                    (
                        Bidegree::new(b.degree - alpha * i64::from(b.weight), b.weight),
                        g.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn merge(&mut self, other: &HomologyGroup) {
        for (b, g) in other.iter() {
            self.add(*b, g);
        }
    }

    /// `F_p`-dimensions obtained by universal coefficients from integral data:
    /// `dim H_i(C; F_p) = rank H_i + #p-torsion(H_i) + #p-torsion(H_{i-1})`.
    pub fn universal_coefficients(&self, p: u64) -> BTreeMap<Bidegree, u64> {
        let mut out = BTreeMap::new();
        for (b, g) in self.iter() {
            *out.entry(*b).or_insert(0) += g.free_rank + g.p_rank(p);
            let up = Bidegree::new(b.degree + 1, b.weight);
            *out.entry(up).or_insert(0) += g.p_rank(p);
        }
        out.retain(|_, v| *v > 0);
        out
    }

    /// Dimensions per bidegree, reading `free_rank` only.
    pub fn dims(&self) -> BTreeMap<Bidegree, u64> {
        self.groups
            .iter()
            .filter(|(_, g)| g.free_rank > 0)
            .map(|(b, g)| (*b, g.free_rank))
            .collect()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (b, g) in &self.groups {
            writeln!(f, "{b}: {g}")?;
        }
        Ok(())
    }
}

/// Künneth formula for homology of `Z`-free complexes:
/// `⊕ H_i ⊗ H_j` in degree `i + j` and `⊕ Tor(H_i, H_j)` in `i + j + 1`.
pub fn kunneth(h1: &HomologyGroup, h2: &HomologyGroup) -> HomologyGroup {
    kunneth_truncated(h1, h2, u32::MAX)
}

/// [`kunneth`], dropping everything of weight above `max_weight`.
pub fn kunneth_truncated(h1: &HomologyGroup, h2: &HomologyGroup, max_weight: u32) -> HomologyGroup {
    let mut out = HomologyGroup::new(h1.ring);
    for (a, g) in h1.iter() {
        for (b, h) in h2.iter() {
            let Some(w) = a.weight.checked_add(b.weight) else {
                continue;
            };
            if w > max_weight {
                continue;
            }
            let deg = a.degree + b.degree;
            out.add(Bidegree::new(deg, w), &g.tensor(h));
            out.add(Bidegree::new(deg + 1, w), &g.tor(h));
        }
    }
    out
}

/// Keeps the `p`-power torsion outside bidegree `(0, 0)` and puts `Z` there.
pub fn p_primary_unitalize(h: &HomologyGroup, p: u64) -> HomologyGroup {
    let mut out = HomologyGroup::unit(h.ring);
    for (b, g) in h.iter() {
        if *b != Bidegree::ZERO {
            out.add(*b, &g.p_part(p));
        }
    }
    out
}

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;

use super::fp::{self, Echelon};
use super::ComplexSlice;
use crate::algebra::{mul_elements, Alg, Element, Monomial};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::ring::Ring;

struct ClassSlice {
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Boundary rows first, then one row per class.
    echelon: Echelon,
    boundary_rank: usize,
}

impl ClassSlice {
    fn classes(&self) -> usize {
        self.echelon.len() - self.boundary_rank
    }
}

/// Homology classes of an algebra over `F_p` up to a weight cap, with their
/// products.
///
/// Class representatives: the boundaries are put in echelon form first, then
/// the kernel basis vectors (in the order produced by row reduction of the
/// outgoing boundary matrix) are reduced against everything so far; each one
/// that survives is scaled to a unit leading coefficient and becomes the
/// representative of the next basis class.
pub struct HomologyRing {
    alg: Alg,
    p: u64,
    max_weight: u32,
    slices: BTreeMap<Bidegree, ClassSlice>,
}

pub fn homology_ring_over_fp(alg: Alg, max_weight: u32, p: u64) -> Result<HomologyRing> {
    let ring = Ring::fp(p)?;
    if alg.ring() != ring {
        return Err(Error::Unsupported(format!(
            "product table over F_{p} for an algebra over {}",
            alg.ring()
        )));
    }
    let mut slices = BTreeMap::new();
    for w in 0..=max_weight {
        let cx = ComplexSlice::from_algebra(alg.as_ref(), w)?;
        for (&deg, basis) in &cx.bases {
            let mut echelon = Echelon::new(p);
            if let Some(m) = cx.boundaries.get(&(deg + 1)) {
                let m = fp::reduce_matrix(m, p);
                for c in 0..m.first().map_or(0, Vec::len) {
                    echelon.insert(m.iter().map(|row| row[c]).collect());
                }
            }
            let boundary_rank = echelon.len();
            let cycles = match cx.boundaries.get(&deg) {
                Some(m) => fp::kernel(&fp::reduce_matrix(m, p), basis.len(), p),
                None => (0..basis.len())
                    .map(|i| {
                        let mut v = vec![0; basis.len()];
                        v[i] = 1;
                        v
                    })
                    .collect(),
            };
            for z in cycles {
                echelon.insert(z);
            }
            let index = basis
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i))
                .collect();
            let cs = ClassSlice {
                basis: basis.clone(),
                index,
                echelon,
                boundary_rank,
            };
            if cs.classes() > 0 {
                slices.insert(Bidegree::new(deg, w), cs);
            }
        }
    }
    Ok(HomologyRing {
        alg,
        p,
        max_weight,
        slices,
    })
}

impl HomologyRing {
    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    /// Dimension of homology in each bidegree.
    pub fn dims(&self) -> BTreeMap<Bidegree, usize> {
        self.slices.iter().map(|(b, s)| (*b, s.classes())).collect()
    }

    pub fn classes(&self, b: Bidegree) -> usize {
        self.slices.get(&b).map_or(0, ClassSlice::classes)
    }

    /// Representative cycle of class `i` in bidegree `b`.
    pub fn representative(&self, b: Bidegree, i: usize) -> Element {
        let s = &self.slices[&b];
        let row = s.echelon.row(s.boundary_rank + i);
        let ring = self.alg.ring();
        let mut e = Element::zero();
        for (m, &c) in s.basis.iter().zip(row) {
            if c != 0 {
                e.add_term(m.clone(), BigInt::from(c), ring);
            }
        }
        e
    }

    /// Coordinates of the class of a cycle in bidegree `b`.
    pub fn coordinates(&self, b: Bidegree, z: &Element) -> Vec<u64> {
        let Some(s) = self.slices.get(&b) else {
            return Vec::new();
        };
        let mut v = vec![0u64; s.basis.len()];
        for (m, c) in z.terms() {
            v[s.index[m]] = fp::residue(c, self.p);
        }
        let coeffs = s.echelon.reduce(&mut v);
        debug_assert!(v.iter().all(|&x| x == 0), "not a cycle");
        coeffs[s.boundary_rank..].to_vec()
    }

    /// Product of class `i` in `b1` with class `j` in `b2`, as coordinates
    /// in `b1 + b2`.
    pub fn product(&self, b1: Bidegree, i: usize, b2: Bidegree, j: usize) -> Result<Vec<u64>> {
        let target = b1 + b2;
        if target.weight > self.max_weight {
            return Err(Error::WeightOutOfRange {
                bidegree: target,
                cap: self.max_weight,
            });
        }
        let x = self.representative(b1, i);
        let y = self.representative(b2, j);
        let xy = mul_elements(self.alg.as_ref(), &x, &y);
        Ok(self.coordinates(target, &xy))
    }

    /// Dimension of the span of products of two positive-weight classes.
    pub fn decomposable_dims(&self) -> Result<BTreeMap<Bidegree, usize>> {
        let mut spans: BTreeMap<Bidegree, Echelon> = BTreeMap::new();
        let keys: Vec<Bidegree> = self.slices.keys().copied().collect();
        for &b1 in &keys {
            for &b2 in &keys {
                if b1.weight == 0 || b2.weight == 0 {
                    continue;
                }
                let target = b1 + b2;
                if target.weight > self.max_weight || self.classes(target) == 0 {
                    continue;
                }
                for i in 0..self.classes(b1) {
                    for j in 0..self.classes(b2) {
                        let v = self.product(b1, i, b2, j)?;
                        spans
                            .entry(target)
                            .or_insert_with(|| Echelon::new(self.p))
                            .insert(v);
                    }
                }
            }
        }
        Ok(spans
            .into_iter()
            .map(|(b, e)| (b, e.len()))
            .filter(|(_, n)| *n > 0)
            .collect())
    }
}

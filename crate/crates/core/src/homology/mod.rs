//! Homology of finite weight slices over `Z` and `F_p`.

pub mod fp;
mod group;
mod products;
mod snf;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::algebra::{Monomial, WdgAlgebra};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub use group::{kunneth, kunneth_truncated, p_primary_unitalize, AbelianGroup, HomologyGroup};
pub use products::{homology_ring_over_fp, HomologyRing};
pub use snf::{smith_normal_form, IntMatrix, Snf};

/// The weight-`w` part of an algebra as a chain complex.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    pub ring: Ring,
    pub weight: u32,
    pub bases: BTreeMap<i64, Vec<Monomial>>,
    /// `boundaries[i]` maps degree `i` to degree `i - 1`; columns follow
    /// `bases[i]`, rows follow `bases[i - 1]`.
    pub boundaries: BTreeMap<i64, IntMatrix>,
}

impl ComplexSlice {
    /// Builds the slice and checks `∂² = 0`.
    pub fn from_algebra(alg: &dyn WdgAlgebra, weight: u32) -> Result<Self> {
        let ring = alg.ring();
        let mut bases: BTreeMap<i64, Vec<Monomial>> = BTreeMap::new();
        for m in alg.weight_basis(weight).iter() {
            bases
                .entry(alg.bidegree(m).degree)
                .or_default()
                .push(m.clone());
        }
        let mut boundaries = BTreeMap::new();
        for (&deg, basis) in &bases {
            let Some(target) = bases.get(&(deg - 1)) else {
                continue;
            };
            let index: HashMap<&Monomial, usize> =
                target.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let mut mat = IntMatrix::zeros(target.len(), basis.len());
            for (col, m) in basis.iter().enumerate() {
                for (t, c) in alg.diff(m).terms() {
                    let row = index[t];
                    mat.entries[row][col] = c.clone();
                }
            }
            boundaries.insert(deg, mat);
        }
        let slice = ComplexSlice {
            ring,
            weight,
            bases,
            boundaries,
        };
        slice.check(ring)?;
        Ok(slice)
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.bases.get(&degree).map_or(0, Vec::len)
    }

    fn check(&self, ring: Ring) -> Result<()> {
        for (&deg, m) in &self.boundaries {
            if let Some(prev) = self.boundaries.get(&(deg - 1)) {
                let mut sq = prev.mul(m);
                for x in sq.entries.iter_mut().flatten() {
                    *x = ring.reduce(x.clone());
                }
                if !sq.is_zero() {
                    return Err(Error::NotAComplex {
                        weight: self.weight,
                        degree: deg,
                    });
                }
            }
        }
        Ok(())
    }

    /// Euler characteristic `Σ (-1)^i dim C_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .map(|(d, b)| if d.rem_euclid(2) == 0 { 1 } else { -1 } * b.len() as i64)
            .sum()
    }
}

fn to_u64(d: &BigInt) -> Result<u64> {
    d.to_u64().ok_or_else(|| Error::FactorOverflow(d.to_string()))
}

/// Integral homology of a slice through Smith normal forms.
pub fn homology_over_z(slice: &ComplexSlice) -> Result<HomologyGroup> {
    if slice.ring != Ring::Integers {
        return Err(Error::Unsupported(format!(
            "integral homology of a complex over {}",
            slice.ring
        )));
    }
    let snfs: BTreeMap<i64, Snf> = slice
        .boundaries
        .iter()
        .map(|(d, m)| (*d, smith_normal_form(m)))
        .collect();
    let mut out = HomologyGroup::new(Ring::Integers);
    for (&deg, basis) in &slice.bases {
        let out_rank = snfs.get(&deg).map_or(0, |s| s.rank);
        let incoming = snfs.get(&(deg + 1));
        let in_rank = incoming.map_or(0, |s| s.rank);
        let mut torsion = Vec::new();
        if let Some(s) = incoming {
            for d in s.torsion() {
                torsion.push(to_u64(d)?);
            }
        }
        let free = (basis.len() - out_rank - in_rank) as u64;
        out.add(
            Bidegree::new(deg, slice.weight),
            &AbelianGroup::from_cyclic(free, torsion),
        );
    }
    Ok(out)
}

/// Homology with `F_p` coefficients; an integral slice is reduced mod `p`.
pub fn homology_over_fp(slice: &ComplexSlice, p: u64) -> Result<HomologyGroup> {
    let ring = Ring::fp(p)?;
    if slice.ring != Ring::Integers && slice.ring != ring {
        return Err(Error::Unsupported(format!(
            "F_{p} homology of a complex over {}",
            slice.ring
        )));
    }
    if slice.ring == Ring::Integers {
        slice.check(ring)?;
    }
    let ranks: BTreeMap<i64, usize> = slice
        .boundaries
        .iter()
        .map(|(d, m)| (*d, fp::rank(&fp::reduce_matrix(m, p), p)))
        .collect();
    let mut out = HomologyGroup::new(ring);
    for (&deg, basis) in &slice.bases {
        let r_out = ranks.get(&deg).copied().unwrap_or(0);
        let r_in = ranks.get(&(deg + 1)).copied().unwrap_or(0);
        out.add(
            Bidegree::new(deg, slice.weight),
            &AbelianGroup::free((basis.len() - r_out - r_in) as u64),
        );
    }
    Ok(out)
}

/// Homology of one weight slice over the algebra's own ring.
pub fn slice_homology(alg: &dyn WdgAlgebra, weight: u32) -> Result<HomologyGroup> {
    let slice = ComplexSlice::from_algebra(alg, weight)?;
    match alg.ring() {
        Ring::Integers => homology_over_z(&slice),
        Ring::Fp(p) => homology_over_fp(&slice, p.get()),
    }
}

/// Homology of all weights in `weights`, slices computed in parallel and
/// merged in weight order.
pub fn homology_up_to(
    alg: &dyn WdgAlgebra,
    weights: std::ops::RangeInclusive<u32>,
) -> Result<HomologyGroup> {
    let parts: Vec<Result<HomologyGroup>> = weights
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|w| slice_homology(alg, w))
        .collect();
    let mut out = HomologyGroup::new(alg.ring());
    for part in parts {
        out.merge(&part?);
    }
    Ok(out)
}

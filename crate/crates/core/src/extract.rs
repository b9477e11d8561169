//! Ext tables from bar homology through the regrading dictionary, with
//! dispatch to the predictors for the remaining pairs.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::{make_free_algebra, regrade, weight_twist, Alg, Flavor};
use crate::bar::{bar, iterate_bar};
use crate::error::{Error, Result};
use crate::homology::{homology_up_to, AbelianGroup, HomologyGroup};
use crate::predict::{
    ext_field_predict, ext_integral_predict, ext_twisted_predict, poincare_dims, PoincareTable,
};
use crate::ring::Ring;

/// `E(X^{(source_twist)}, Y^{(target_twist)})` evaluated on a rank-`m` free
/// module, keyed by `(cohomological degree, weight)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtTable {
    pub source: Flavor,
    pub target: Flavor,
    pub source_twist: u32,
    pub target_twist: u32,
    pub ring: Ring,
    pub m: u32,
    pub max_weight: u32,
    pub entries: BTreeMap<(i64, u32), AbelianGroup>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Homology of regraded bar constructions.
    Bar,
    /// Closed-form predictions.
    Predict,
}

impl ExtTable {
    fn empty(source: Flavor, target: Flavor, ring: Ring, m: u32, max_weight: u32) -> Self {
        ExtTable {
            source,
            target,
            source_twist: 0,
            target_twist: 0,
            ring,
            m,
            max_weight,
            entries: BTreeMap::new(),
        }
    }

    fn fill_from_homology(&mut self, h: &HomologyGroup) {
        for (b, g) in h.iter() {
            if b.weight <= self.max_weight && !g.is_zero() {
                self.entries.insert((b.cohom_degree(), b.weight), g.clone());
            }
        }
    }

    fn fill_from_dims(&mut self, t: &PoincareTable) {
        for ((i, w), d) in t.entries() {
            if d > 0 && w <= self.max_weight {
                self.entries.insert((i, w), AbelianGroup::free(d));
            }
        }
    }

    pub fn get(&self, cohom_degree: i64, weight: u32) -> AbelianGroup {
        self.entries
            .get(&(cohom_degree, weight))
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero entries of one weight, by degree.
    pub fn column(&self, weight: u32) -> Vec<(i64, AbelianGroup)> {
        self.entries
            .iter()
            .filter(|((_, w), _)| *w == weight)
            .map(|((i, _), g)| (*i, g.clone()))
            .collect()
    }

    /// Dimensions over a field (the free ranks).
    pub fn dims(&self) -> BTreeMap<(i64, u32), u64> {
        self.entries
            .iter()
            .filter(|(_, g)| g.free_rank > 0)
            .map(|(k, g)| (*k, g.free_rank))
            .collect()
    }
}

fn gamma2(ring: Ring, m: u32) -> Result<Alg> {
    Ok(Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, m)], ring)?))
}

/// `^tR_3 B̄(Γ[2])` for `Y = Λ`, `R_4 B̄²(Γ[2])` for `Y = Γ`.
pub fn ext_algebra_via_bar(y: Flavor, ring: Ring, m: u32) -> Result<Alg> {
    let base = gamma2(ring, m)?;
    match y {
        Flavor::Lambda => Ok(weight_twist(regrade(bar(base), 3))),
        Flavor::Gamma => Ok(regrade(iterate_bar(base, 2), 4)),
        Flavor::Sym => Err(Error::Unsupported("E(S, S) through bar constructions".into())),
    }
}

/// `E(S, Y)` for `Y ∈ {Λ, Γ}` from the homology of the regraded bar
/// constructions, one weight slice per task.
pub fn ext_table_via_bar(y: Flavor, ring: Ring, max_weight: u32, m: u32) -> Result<ExtTable> {
    let alg = ext_algebra_via_bar(y, ring, m)?;
    let h = homology_up_to(alg.as_ref(), 0..=max_weight)?;
    let mut table = ExtTable::empty(Flavor::Sym, y, ring, m, max_weight);
    table.fill_from_homology(&h);
    Ok(table)
}

/// Ext table for any pair. `s` twists the target, `t + s` the source.
///
/// Over `Z` only untwisted pairs are answered: `E(S, Λ)`, `E(S, Γ)` and
/// (by duality) `E(Λ, Γ)` by bar homology or the integral predictor, the
/// other pairs are free and read off the field predictions.
#[allow(clippy::too_many_arguments)]
pub fn ext_table(
    x: Flavor,
    y: Flavor,
    ring: Ring,
    s: u32,
    t: u32,
    m: u32,
    max_weight: u32,
    method: Method,
) -> Result<ExtTable> {
    let bar_pair = x == Flavor::Sym && matches!(y, Flavor::Lambda | Flavor::Gamma);
    let mut table = ExtTable::empty(x, y, ring, m, max_weight);
    table.source_twist = t + s;
    table.target_twist = s;
    match ring {
        Ring::Integers => {
            if s + t > 0 {
                return Err(Error::Unsupported("twisted pairs over Z".into()));
            }
            let (dx, dy) = if (x, y) == (Flavor::Lambda, Flavor::Gamma) {
                (Flavor::Sym, Flavor::Lambda)
            } else {
                (x, y)
            };
            if dx == Flavor::Sym && matches!(dy, Flavor::Lambda | Flavor::Gamma) {
                let h = match method {
                    Method::Bar => ext_table_via_bar(dy, ring, max_weight, m)?.entries,
                    Method::Predict => {
                        let mut tb = ExtTable::empty(x, y, ring, m, max_weight);
                        tb.fill_from_homology(&ext_integral_predict(dy, m, max_weight)?);
                        tb.entries
                    }
                };
                table.entries = h;
            } else {
                table.fill_from_dims(&poincare_dims(&ext_field_predict(x, y, 2, m, max_weight)?, max_weight));
            }
        }
        Ring::Fp(p) => {
            let p = p.get();
            if bar_pair && s + t == 0 && method == Method::Bar {
                table.entries = ext_table_via_bar(y, ring, max_weight, m)?.entries;
            } else {
                let spec = if s + t == 0 {
                    ext_field_predict(x, y, p, m, max_weight)?
                } else {
                    ext_twisted_predict(x, y, p, s, t, m, max_weight)?
                };
                table.fill_from_dims(&poincare_dims(&spec, max_weight));
            }
        }
    }
    Ok(table)
}

/// `dim Hom(X^d, Y^d)` over `F_p` on `k^m`.
pub fn hom_dimension(x: Flavor, y: Flavor, p: u64, weight: u32, m: u32) -> Result<u64> {
    let table = ext_table(x, y, Ring::fp(p)?, 0, 0, m, weight, Method::Bar)?;
    Ok(table.get(0, weight).free_rank)
}

//! Weighted differential graded algebras with enumerable bases.

mod element;
mod free;
mod structure;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::ring::Ring;

pub use element::{Element, Monomial};
pub use free::{make_free_algebra, Flavor, FreeAlgebra, Generator};
pub use structure::{
    check_one_eps_commutative, regrade, tensor_signed, weight_twist, Regrade, TensorSigned,
    WeightTwist,
};

/// A weighted dg-algebra whose weight-`w` part is finite for every `w`.
///
/// Implementations only describe structure constants on basis monomials;
/// extension to elements is done by [`mul_elements`] and [`diff_element`].
pub trait WdgAlgebra: Send + Sync + fmt::Debug {
    fn ring(&self) -> Ring;

    /// All basis monomials of weight `w`, sorted.
    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>>;

    fn bidegree(&self, m: &Monomial) -> Bidegree;

    fn mul(&self, a: &Monomial, b: &Monomial) -> Element;

    fn diff(&self, a: &Monomial) -> Element;

    fn unit(&self) -> Monomial;

    /// Projection onto the unit line.
    fn epsilon(&self, m: &Monomial) -> BigInt {
        if *m == self.unit() {
            self.ring().one()
        } else {
            BigInt::zero()
        }
    }

    /// Basis monomials in a single bidegree, in basis order.
    fn basis(&self, b: Bidegree) -> Vec<Monomial> {
        self.weight_basis(b.weight)
            .iter()
            .filter(|m| self.bidegree(m).degree == b.degree)
            .cloned()
            .collect()
    }
}

/// Shared handle to an algebra.
pub type Alg = Arc<dyn WdgAlgebra>;

pub fn mul_elements(alg: &dyn WdgAlgebra, x: &Element, y: &Element) -> Element {
    let ring = alg.ring();
    let mut out = Element::zero();
    for (a, c) in x.terms() {
        for (b, e) in y.terms() {
            out.add_scaled(&alg.mul(a, b), &(c * e), ring);
        }
    }
    out
}

pub fn diff_element(alg: &dyn WdgAlgebra, x: &Element) -> Element {
    let ring = alg.ring();
    let mut out = Element::zero();
    for (a, c) in x.terms() {
        out.add_scaled(&alg.diff(a), c, ring);
    }
    out
}

/// The common bidegree of all terms, or `None` for zero.
pub fn element_bidegree(alg: &dyn WdgAlgebra, x: &Element) -> Result<Option<Bidegree>> {
    let mut found = None;
    for (m, _) in x.terms() {
        let b = alg.bidegree(m);
        match found {
            None => found = Some(b),
            Some(prev) if prev != b => return Err(Error::NotHomogeneous),
            _ => {}
        }
    }
    Ok(found)
}

/// Sizes of the weight-`w` part, keyed by degree.
pub fn slice_dims(alg: &dyn WdgAlgebra, w: u32) -> std::collections::BTreeMap<i64, usize> {
    let mut out = std::collections::BTreeMap::new();
    for m in alg.weight_basis(w).iter() {
        *out.entry(alg.bidegree(m).degree).or_insert(0) += 1;
    }
    out
}

/// Per-weight basis memo. Two threads racing on the same weight both compute
/// the same sorted list; whichever lands first is kept.
#[derive(Default)]
pub(crate) struct BasisCache {
    slices: Mutex<HashMap<u32, Arc<Vec<Monomial>>>>,
}

impl BasisCache {
    pub(crate) fn get_or_fill(
        &self,
        w: u32,
        fill: impl FnOnce() -> Vec<Monomial>,
    ) -> Arc<Vec<Monomial>> {
        if let Some(hit) = self.slices.lock().unwrap().get(&w) {
            return hit.clone();
        }
        let mut fresh = fill();
        fresh.sort();
        let fresh = Arc::new(fresh);
        self.slices
            .lock()
            .unwrap()
            .entry(w)
            .or_insert(fresh)
            .clone()
    }
}

impl fmt::Debug for BasisCache {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.slices.lock().map(|s| s.len()).unwrap_or(0);
        write!(f, "BasisCache({n} weights)")
    }
}

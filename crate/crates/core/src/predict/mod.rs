//! Closed-form descriptions of Ext-algebras as free algebras on generator
//! families, and their bigraded dimensions.

mod field;
mod integral;
mod twisted;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::algebra::{
    tensor_signed, weight_twist, Alg, Flavor, FreeAlgebra, Generator,
};
use crate::bidegree::Bidegree;
use crate::error::Result;
use crate::ring::Ring;

pub use field::{cartan_field_generators, cartan_field_spec, ext_field_predict};
pub use integral::ext_integral_predict;
pub use twisted::{ext_twisted_predict, parametrize_by_es, twist_shift, twisted_via_composite};

/// A generator `I^{(twist)}⟨cohom_degree⟩` of the given weight, repeated
/// `multiplicity` times (the rank of the evaluated module).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorFamily {
    pub flavor: Flavor,
    pub cohom_degree: i64,
    pub weight: u32,
    pub twist: u32,
    pub multiplicity: u32,
}

/// One free factor of a prediction, possibly weight twisted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub flavor: Flavor,
    pub families: Vec<GeneratorFamily>,
    pub weight_twisted: bool,
}

impl Factor {
    pub fn new(flavor: Flavor, families: Vec<GeneratorFamily>) -> Self {
        debug_assert!(families.iter().all(|f| f.flavor == flavor));
        Factor {
            flavor,
            families,
            weight_twisted: false,
        }
    }

    pub fn twisted(mut self) -> Self {
        self.weight_twisted = true;
        self
    }
}

/// A tensor product of free factors; `junction_eps[i]` is the sign parameter
/// of the tensor product between factor `i` and everything after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebraSpec {
    pub factors: Vec<Factor>,
    pub junction_eps: Vec<u8>,
}

impl FreeAlgebraSpec {
    pub fn single(factor: Factor) -> Self {
        FreeAlgebraSpec {
            factors: vec![factor],
            junction_eps: Vec::new(),
        }
    }

    pub fn then(mut self, eps: u8, factor: Factor) -> Self {
        self.junction_eps.push(eps);
        self.factors.push(factor);
        self
    }

    pub fn families(&self) -> impl Iterator<Item = &GeneratorFamily> {
        self.factors.iter().flat_map(|f| f.families.iter())
    }

    /// Applies `f` to every family, keeping factors and sign data.
    pub fn map_families(&self, mut f: impl FnMut(&GeneratorFamily) -> Vec<GeneratorFamily>) -> Self {
        FreeAlgebraSpec {
            factors: self
                .factors
                .iter()
                .map(|fac| Factor {
                    flavor: fac.flavor,
                    families: fac.families.iter().flat_map(&mut f).collect(),
                    weight_twisted: fac.weight_twisted,
                })
                .collect(),
            junction_eps: self.junction_eps.clone(),
        }
    }

    /// Drops families above the weight cap and sorts the rest.
    pub fn truncated(&self, max_weight: u32) -> Self {
        let mut out = self.map_families(|f| {
            if f.weight <= max_weight {
                vec![*f]
            } else {
                Vec::new()
            }
        });
        for fac in &mut out.factors {
            fac.families.sort();
        }
        out
    }
}

impl fmt::Display for FreeAlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                let eps = self.junction_eps[i - 1];
                write!(f, " {} ", if eps == 1 { "⊗^1" } else { "⊗" })?;
            }
            if fac.weight_twisted {
                write!(f, "^t")?;
            }
            write!(f, "{}(", fac.flavor)?;
            for (j, g) in fac.families.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "I^({})<{}>", g.twist, g.cohom_degree)?;
                if g.multiplicity > 1 {
                    write!(f, "^{}", g.multiplicity)?;
                }
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Bigraded dimensions, keyed by bidegree with cohomological degree `i`
/// stored as degree `-i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PoincareTable {
    pub dims: BTreeMap<Bidegree, u64>,
}

impl PoincareTable {
    pub fn get(&self, cohom_degree: i64, weight: u32) -> u64 {
        self.dims
            .get(&Bidegree::cohomological(cohom_degree, weight))
            .copied()
            .unwrap_or(0)
    }

    /// Entries as `((cohom degree, weight), dim)`.
    pub fn entries(&self) -> impl Iterator<Item = ((i64, u32), u64)> + '_ {
        self.dims
            .iter()
            .map(|(b, d)| ((b.cohom_degree(), b.weight), *d))
    }

    fn multiply_series(&mut self, gen: Bidegree, lambda: bool, max_weight: u32) {
        let mut next: BTreeMap<Bidegree, u64> = BTreeMap::new();
        for (&b, &d) in &self.dims {
            let mut k = 0u32;
            loop {
                let w = b.weight + k * gen.weight;
                if w > max_weight || (lambda && k > 1) {
                    break;
                }
                let key = Bidegree::new(b.degree + i64::from(k) * gen.degree, w);
                *next.entry(key).or_insert(0) += d;
                k += 1;
                if gen.weight == 0 {
                    break;
                }
            }
        }
        self.dims = next;
    }
}

/// Dimensions of a predicted free algebra up to `max_weight`. Λ generators
/// contribute `(1 + z)`, Γ and S generators `1/(1 - z)`; sign data is
/// irrelevant here.
pub fn poincare_dims(spec: &FreeAlgebraSpec, max_weight: u32) -> PoincareTable {
    let mut t = PoincareTable::default();
    t.dims.insert(Bidegree::ZERO, 1);
    for g in spec.families() {
        if g.weight > max_weight {
            continue;
        }
        let b = Bidegree::cohomological(g.cohom_degree, g.weight);
        for _ in 0..g.multiplicity {
            t.multiply_series(b, g.flavor == Flavor::Lambda, max_weight);
        }
    }
    t
}

/// `(X, Y) ↦ (Y^♯, X^♯)`.
pub fn duality_flip(x: Flavor, y: Flavor) -> (Flavor, Flavor) {
    (y.sharp(), x.sharp())
}

/// Builds the predicted algebra over `ring`, generators in homological degree
/// minus their cohomological degree, families above `max_weight` dropped.
pub fn instantiate(spec: &FreeAlgebraSpec, ring: Ring, max_weight: u32) -> Result<Alg> {
    let mut parts: Vec<Alg> = Vec::new();
    for fac in &spec.factors {
        let mut gens = Vec::new();
        for g in fac.families.iter().filter(|g| g.weight <= max_weight) {
            for _ in 0..g.multiplicity {
                gens.push(Generator::new(fac.flavor, -g.cohom_degree, g.weight));
            }
        }
        let free: Alg = Arc::new(FreeAlgebra::new(ring, gens)?);
        parts.push(if fac.weight_twisted {
            weight_twist(free)
        } else {
            free
        });
    }
    let mut acc = parts.pop().expect("prediction with no factors");
    for (i, part) in parts.into_iter().enumerate().rev() {
        acc = tensor_signed(part, acc, spec.junction_eps[i]);
    }
    Ok(acc)
}

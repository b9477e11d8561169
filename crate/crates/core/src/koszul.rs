//! Dual Koszul and dual De Rham algebras, Koszul kernels, and the complexes
//! `X_p` assembling the integral homology of iterated bar constructions.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{slice_dims, Element, Flavor, FreeAlgebra, Generator};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::homology::{
    fp, kunneth_truncated, p_primary_unitalize, AbelianGroup, ComplexSlice, HomologyGroup,
};
use crate::ring::{primes_up_to, Ring};
use crate::words::{enumerate_p_pairs_with, WordBounds};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `Γ(V[1]) ⊗ Λ(V)` on odd-degree `V`.
    Koszul,
    /// `Γ(V) ⊗ Λ(V[1])` on even-degree `V`.
    DeRham,
}

/// Generators `(degree, weight, multiplicity)` of `V`, a parameter `h`, and
/// the variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulSpec {
    pub generators: Vec<(i64, u32, u32)>,
    pub h: i64,
    pub variant: Variant,
}

impl KoszulSpec {
    pub fn new(variant: Variant, generators: Vec<(i64, u32, u32)>, h: i64) -> Self {
        KoszulSpec {
            generators,
            h,
            variant,
        }
    }
}

/// Appends one block per copy of each generator of `spec`, with the
/// differential `h` from the upper generator to the lower one.
fn push_blocks(spec: &KoszulSpec, gens: &mut Vec<Generator>, links: &mut Vec<(usize, usize, i64)>) -> Result<()> {
    let want_odd = spec.variant == Variant::Koszul;
    for &(deg, w, mult) in &spec.generators {
        if (deg.rem_euclid(2) == 1) != want_odd {
            return Err(Error::InvalidGenerators(format!(
                "{:?} algebra on a generator of degree {deg}",
                spec.variant
            )));
        }
        let (lower, upper) = match spec.variant {
            Variant::Koszul => (Flavor::Lambda, Flavor::Gamma),
            Variant::DeRham => (Flavor::Gamma, Flavor::Lambda),
        };
        for _ in 0..mult {
            let i = gens.len();
            gens.push(Generator::new(lower, deg, w));
            gens.push(Generator::new(upper, deg + 1, w));
            links.push((i + 1, i, spec.h));
        }
    }
    Ok(())
}

fn assemble(ring: Ring, gens: Vec<Generator>, links: Vec<(usize, usize, i64)>) -> Result<FreeAlgebra> {
    let n = gens.len();
    let alg = FreeAlgebra::new(ring, gens)?;
    let mut images = vec![Element::zero(); n];
    for (from, to, h) in links {
        images[from] = Element::term(alg.generator(to), BigInt::from(h), ring);
    }
    alg.with_differential(images)
}

/// `K^h(V)` or `Ω^h(V)` as a free algebra with differential.
pub fn build_koszul(spec: &KoszulSpec, ring: Ring) -> Result<FreeAlgebra> {
    let (mut gens, mut links) = (Vec::new(), Vec::new());
    push_blocks(spec, &mut gens, &mut links)?;
    assemble(ring, gens, links)
}

/// Integral homology of `K^h` (odd `degree`) or `Ω^h` (even `degree`) on a
/// single generator of the given weight, up to `weight_max`.
pub fn koszul_homology_closed_form(degree: i64, weight: u32, h: u64, weight_max: u32) -> HomologyGroup {
    let mut out = HomologyGroup::unit(Ring::Integers);
    let mut d = 1u32;
    while d * weight <= weight_max {
        let dd = i64::from(d);
        let (deg, order) = if degree.rem_euclid(2) == 1 {
            (dd * (degree + 1) - 1, h)
        } else {
            (dd * degree, u64::from(d) * h)
        };
        out.add(Bidegree::new(deg, d * weight), &AbelianGroup::cyclic(order));
        d += 1;
    }
    out
}

/// `F_p`-dimensions of the Koszul kernels on odd generators `W`: the unit in
/// bidegree `(0, 0)` and the cycles of `K^1(W)` over `F_p` elsewhere.
pub fn koszul_kernels_dims(
    generators: &[(i64, u32, u32)],
    p: u64,
    weight_max: u32,
) -> Result<BTreeMap<Bidegree, u64>> {
    let spec = KoszulSpec::new(Variant::Koszul, generators.to_vec(), 1);
    let alg = build_koszul(&spec, Ring::fp(p)?)?;
    let mut out = BTreeMap::new();
    out.insert(Bidegree::ZERO, 1);
    for w in 1..=weight_max {
        let cx = ComplexSlice::from_algebra(&alg, w)?;
        for (&deg, basis) in &cx.bases {
            let r = cx
                .boundaries
                .get(&deg)
                .map_or(0, |m| fp::rank(&fp::reduce_matrix(m, p), p));
            let z = (basis.len() - r) as u64;
            if z > 0 {
                out.insert(Bidegree::new(deg, w), z);
            }
        }
    }
    Ok(out)
}

/// Pair generators of height `height` with weight at most `weight_max`, as
/// `(degree, weight)`.
pub fn pair_generators(p: u64, height: usize, weight_max: u32) -> Vec<(i64, u32)> {
    let mut t = 0;
    while p.pow(t + 1) <= u64::from(weight_max) {
        t += 1;
    }
    if p > u64::from(weight_max) {
        return Vec::new();
    }
    enumerate_p_pairs_with(p, height, WordBounds::twisting(t))
        .into_iter()
        .map(|pp| (pp.degree as i64, pp.weight as u32))
        .collect()
}

/// `X_p` for words of height `height`: `K^p` on the odd-degree pairs tensor
/// `Ω^p` on the even-degree pairs, each pair generator with multiplicity `m`.
pub fn build_xp(p: u64, height: usize, weight_max: u32, m: u32) -> Result<FreeAlgebra> {
    let (mut gens, mut links) = (Vec::new(), Vec::new());
    for (deg, w) in pair_generators(p, height, weight_max) {
        let variant = if deg.rem_euclid(2) == 1 {
            Variant::Koszul
        } else {
            Variant::DeRham
        };
        let spec = KoszulSpec::new(variant, vec![(deg, w, m)], p as i64);
        push_blocks(&spec, &mut gens, &mut links)?;
    }
    assemble(Ring::Integers, gens, links)
}

/// Homology of `X_p` from the rank-one closed forms and Künneth.
pub fn xp_homology_closed_form(p: u64, height: usize, weight_max: u32, m: u32) -> HomologyGroup {
    let mut h = HomologyGroup::unit(Ring::Integers);
    for (deg, w) in pair_generators(p, height, weight_max) {
        let block = koszul_homology_closed_form(deg, w, p, weight_max);
        for _ in 0..m {
            h = kunneth_truncated(&h, &block, weight_max);
        }
    }
    h
}

/// `X_0`: Λ on generators of degree `height` and weight 1 for odd `height`,
/// Γ for even `height`.
pub fn build_x0(height: usize, m: u32) -> Result<FreeAlgebra> {
    let flavor = if height % 2 == 1 {
        Flavor::Lambda
    } else {
        Flavor::Gamma
    };
    crate::algebra::make_free_algebra(flavor, &[(height as i64, 1, m)], Ring::Integers)
}

/// Integral homology of `B̄^n Γ(Z^m[2])` up to `weight_max`, assembled as
/// `X_0 ⊗ ⊗_p (p-primary part of H(X_p))` with words of height `n + 2`.
pub fn predicted_bar_homology_over_z(n: usize, m: u32, weight_max: u32) -> Result<HomologyGroup> {
    let height = n + 2;
    let x0 = build_x0(height, m)?;
    let mut h = HomologyGroup::new(Ring::Integers);
    for w in 0..=weight_max {
        for (deg, k) in slice_dims(&x0, w) {
            h.add(Bidegree::new(deg, w), &AbelianGroup::free(k as u64));
        }
    }
    for p in primes_up_to(u64::from(weight_max)) {
        let xp = xp_homology_closed_form(p, height, weight_max, m);
        h = kunneth_truncated(&h, &p_primary_unitalize(&xp, p), weight_max);
    }
    Ok(h)
}

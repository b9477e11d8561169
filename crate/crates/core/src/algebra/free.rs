use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use super::{mul_elements, BasisCache, Element, Monomial, WdgAlgebra};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Free algebra flavors: divided powers, exterior, symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Flavor {
    Gamma,
    Lambda,
    Sym,
}

impl Flavor {
    /// Kuhn dual flavor: S and Γ swap, Λ is fixed.
    pub fn sharp(self) -> Flavor {
        match self {
            Flavor::Gamma => Flavor::Sym,
            Flavor::Sym => Flavor::Gamma,
            Flavor::Lambda => Flavor::Lambda,
        }
    }

    /// Weight sign parameter of the functor: 1 for Λ, 0 otherwise.
    pub fn eps(self) -> u8 {
        u8::from(self == Flavor::Lambda)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Flavor::Gamma => "Gamma",
            Flavor::Lambda => "Lambda",
            Flavor::Sym => "S",
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "Sym" | "s" | "sym" => Ok(Flavor::Sym),
            "Lambda" | "L" | "lambda" | "Λ" => Ok(Flavor::Lambda),
            "Gamma" | "G" | "gamma" | "Γ" => Ok(Flavor::Gamma),
            other => Err(Error::Unsupported(format!("unknown functor `{other}`"))),
        }
    }
}

/// One free generator with its flavor and bidegree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generator {
    pub flavor: Flavor,
    pub degree: i64,
    pub weight: u32,
}

impl Generator {
    pub fn new(flavor: Flavor, degree: i64, weight: u32) -> Self {
        Generator {
            flavor,
            degree,
            weight,
        }
    }
}

/// Tensor product of free Γ, Λ and S algebras on single generators, with an
/// optional derivation differential given on generators.
///
/// Monomials are exponent vectors in generator order. Swapping two distinct
/// generators of the same flavor costs `-1` for Λ and nothing for Γ or S;
/// generators of different flavors follow the Koszul rule on degrees.
pub struct FreeAlgebra {
    ring: Ring,
    gens: Vec<Generator>,
    gen_diff: Vec<Element>,
    cache: BasisCache,
}

impl fmt::Debug for FreeAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FreeAlgebra")
            .field("ring", &self.ring)
            .field("gens", &self.gens)
            .finish()
    }
}

/// Free algebra of one flavor on `(degree, weight, multiplicity)` generator
/// families, with zero differential.
pub fn make_free_algebra(
    flavor: Flavor,
    generators: &[(i64, u32, u32)],
    ring: Ring,
) -> Result<FreeAlgebra> {
    let mut gens = Vec::new();
    for &(degree, weight, mult) in generators {
        for _ in 0..mult {
            gens.push(Generator::new(flavor, degree, weight));
        }
    }
    FreeAlgebra::new(ring, gens)
}

impl FreeAlgebra {
    pub fn new(ring: Ring, gens: Vec<Generator>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.weight == 0) {
            return Err(Error::InvalidGenerators(format!(
                "generator of degree {} has weight 0",
                g.degree
            )));
        }
        let gen_diff = vec![Element::zero(); gens.len()];
        Ok(FreeAlgebra {
            ring,
            gens,
            gen_diff,
            cache: BasisCache::default(),
        })
    }

    /// Sets `d(x_i) = images[i]`, extended as a derivation. Each image must be
    /// homogeneous of bidegree `(deg x_i - 1, w(x_i))`.
    pub fn with_differential(mut self, images: Vec<Element>) -> Result<Self> {
        if images.len() != self.gens.len() {
            return Err(Error::InvalidGenerators(format!(
                "{} differential images for {} generators",
                images.len(),
                self.gens.len()
            )));
        }
        for (g, img) in self.gens.iter().zip(&images) {
            for (m, _) in img.terms() {
                let b = self.bidegree(m);
                if b != Bidegree::new(g.degree - 1, g.weight) {
                    return Err(Error::InvalidGenerators(format!(
                        "differential of a generator at ({}, {}) lands in {b}",
                        g.degree, g.weight
                    )));
                }
            }
        }
        self.gen_diff = images;
        Ok(self)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    /// Monomial of a single generator to the first power.
    pub fn generator(&self, i: usize) -> Monomial {
        let mut e = vec![0; self.gens.len()];
        e[i] = 1;
        Monomial::Free(e)
    }

    /// `γ_a`, `x^a` or (for `a ≤ 1`) the exterior power of generator `i`.
    pub fn power(&self, i: usize, a: u32) -> Monomial {
        let mut e = vec![0; self.gens.len()];
        e[i] = a;
        Monomial::Free(e)
    }

    fn swap_odd(&self, i: usize, j: usize) -> bool {
        let (gi, gj) = (&self.gens[i], &self.gens[j]);
        if gi.flavor == gj.flavor {
            gi.flavor == Flavor::Lambda
        } else {
            (gi.degree * gj.degree).rem_euclid(2) == 1
        }
    }

    fn exps<'a>(&self, m: &'a Monomial) -> &'a [u32] {
        match m {
            Monomial::Free(e) if e.len() == self.gens.len() => e,
            other => panic!("{other:?} is not a monomial of this free algebra"),
        }
    }

    fn fill(&self, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == self.gens.len() {
            if left == 0 {
                out.push(Monomial::Free(cur.clone()));
            }
            return;
        }
        let g = &self.gens[i];
        let cap = if g.flavor == Flavor::Lambda {
            1
        } else {
            u32::MAX
        };
        let mut a = 0;
        while a <= cap && a * g.weight <= left {
            cur.push(a);
            self.fill(i + 1, left - a * g.weight, cur, out);
            cur.pop();
            a += 1;
        }
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl WdgAlgebra for FreeAlgebra {
    fn ring(&self) -> Ring {
        self.ring
    }

    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>> {
        self.cache.get_or_fill(w, || {
            let mut out = Vec::new();
            self.fill(0, w, &mut Vec::with_capacity(self.gens.len()), &mut out);
            out
        })
    }

    fn bidegree(&self, m: &Monomial) -> Bidegree {
        let mut b = Bidegree::ZERO;
        for (g, &a) in self.gens.iter().zip(self.exps(m)) {
            b.degree += g.degree * i64::from(a);
            b.weight += g.weight * a;
        }
        b
    }

    fn mul(&self, a: &Monomial, b: &Monomial) -> Element {
        let (ea, eb) = (self.exps(a), self.exps(b));
        let mut coeff = BigInt::one();
        let mut out = Vec::with_capacity(ea.len());
        for (i, (&x, &y)) in ea.iter().zip(eb).enumerate() {
            match self.gens[i].flavor {
                Flavor::Lambda if x + y > 1 => return Element::zero(),
                Flavor::Gamma => coeff *= binomial(x + y, x),
                _ => {}
            }
            out.push(x + y);
        }
        let mut odd = 0u64;
        for (j, &bj) in eb.iter().enumerate() {
            if bj == 0 {
                continue;
            }
            for (i, &ai) in ea.iter().enumerate().skip(j + 1) {
                if ai != 0 && self.swap_odd(i, j) {
                    odd += u64::from(ai) * u64::from(bj);
                }
            }
        }
        if odd % 2 == 1 {
            coeff = -coeff;
        }
        Element::term(Monomial::Free(out), coeff, self.ring)
    }

    fn diff(&self, a: &Monomial) -> Element {
        let e = self.exps(a);
        let ring = self.ring;
        let n = e.len();
        let mut out = Element::zero();
        let mut left_degree = 0i64;
        for i in 0..n {
            if e[i] > 0 && !self.gen_diff[i].is_zero() {
                let mut left = vec![0; n];
                left[..i].copy_from_slice(&e[..i]);
                let mut right = vec![0; n];
                right[i + 1..].copy_from_slice(&e[i + 1..]);
                let lower = Element::monomial(self.power(i, e[i] - 1), ring);
                let mut dpow = mul_elements(self, &self.gen_diff[i], &lower);
                if self.gens[i].flavor == Flavor::Sym {
                    dpow = dpow.scaled(&BigInt::from(e[i]), ring);
                }
                let l = Element::monomial(Monomial::Free(left), ring);
                let r = Element::monomial(Monomial::Free(right), ring);
                let term = mul_elements(self, &mul_elements(self, &l, &dpow), &r);
                out.add_scaled(&term, &ring.sign(left_degree), ring);
            }
            left_degree += self.gens[i].degree * i64::from(e[i]);
        }
        out
    }

    fn unit(&self) -> Monomial {
        Monomial::Free(vec![0; self.gens.len()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::slice_dims;

    #[test]
    fn gamma_square() {
        let a = make_free_algebra(Flavor::Gamma, &[(2, 1, 1)], Ring::Integers).unwrap();
        let g1 = a.power(0, 1);
        let prod = a.mul(&g1, &g1);
        assert_eq!(prod, Element::term(a.power(0, 2), BigInt::from(2), Ring::Integers));
        for d in 0..6 {
            assert_eq!(a.weight_basis(d).as_slice(), &[a.power(0, d)]);
            assert_eq!(a.bidegree(&a.power(0, d)), Bidegree::new(2 * i64::from(d), d));
        }
    }

    #[test]
    fn exterior_on_two_generators() {
        let a = make_free_algebra(Flavor::Lambda, &[(3, 1, 2)], Ring::Integers).unwrap();
        let dims: Vec<usize> = (0..4).map(|d| a.weight_basis(d).len()).collect();
        assert_eq!(dims, vec![1, 2, 1, 0]);
        assert_eq!(slice_dims(&a, 2).into_iter().collect::<Vec<_>>(), vec![(6, 1)]);
        let (x, y) = (a.generator(0), a.generator(1));
        let xy = a.mul(&x, &y);
        let yx = a.mul(&y, &x);
        assert_eq!(xy.scaled(&BigInt::from(-1), Ring::Integers), yx);
        assert!(a.mul(&x, &x).is_zero());
    }

    #[test]
    fn rejects_weight_zero() {
        assert!(make_free_algebra(Flavor::Sym, &[(0, 0, 1)], Ring::Integers).is_err());
    }
}

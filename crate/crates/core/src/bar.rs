//! Reduced normalized bar constructions.

use std::sync::Arc;

use crate::algebra::{element_bidegree, Alg, BasisCache, Element, Monomial, WdgAlgebra};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// `B̄A` with basis the words `[a_1|…|a_n]` on positive-weight basis
/// monomials of `A`, and the shuffle product.
#[derive(Debug)]
pub struct BarAlgebra {
    under: Alg,
    cache: BasisCache,
}

pub fn bar(a: Alg) -> Alg {
    Arc::new(BarAlgebra::new(a))
}

/// `B̄^n A`, as nested words. `n = 0` returns `A` itself.
pub fn iterate_bar(a: Alg, n: usize) -> Alg {
    (0..n).fold(a, |acc, _| bar(acc))
}

/// The chain-level suspension `c ↦ [c]`.
pub fn suspension_chain(a: &dyn WdgAlgebra, x: &Element) -> Result<Element> {
    match element_bidegree(a, x)? {
        None => Ok(Element::zero()),
        Some(b) if b.weight == 0 => Err(Error::NotAugmentationIdeal),
        Some(_) => Ok(x.map_monomials(a.ring(), |m| Monomial::Word(vec![m.clone()]))),
    }
}

impl BarAlgebra {
    pub fn new(under: Alg) -> Self {
        BarAlgebra {
            under,
            cache: BasisCache::default(),
        }
    }

    pub fn underlying(&self) -> &Alg {
        &self.under
    }

    fn letters<'a>(&self, m: &'a Monomial) -> &'a [Monomial] {
        match m {
            Monomial::Word(w) => w,
            other => panic!("{other:?} is not a bar word"),
        }
    }

    fn fill(&self, left: u32, cur: &mut Vec<Monomial>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::Word(cur.clone()));
            return;
        }
        for c in 1..=left {
            for letter in self.under.weight_basis(c).iter() {
                cur.push(letter.clone());
                self.fill(left - c, cur, out);
                cur.pop();
            }
        }
    }

    /// Bar degrees `|a|+1` of the letters.
    fn shifted(&self, w: &[Monomial]) -> Vec<i64> {
        w.iter()
            .map(|a| self.under.bidegree(a).degree + 1)
            .collect()
    }
}

/// All shuffles of `a` and `b` with their Koszul parities, for letters of
/// degrees `da`, `db`.
fn shuffles(
    a: &[Monomial],
    da: &[i64],
    b: &[Monomial],
    db: &[i64],
) -> Vec<(Vec<Monomial>, i64)> {
    if a.is_empty() {
        return vec![(b.to_vec(), 0)];
    }
    if b.is_empty() {
        return vec![(a.to_vec(), 0)];
    }
    let mut out = Vec::new();
    for (mut rest, s) in shuffles(&a[1..], &da[1..], b, db) {
        rest.insert(0, a[0].clone());
        out.push((rest, s));
    }
    let past: i64 = da.iter().sum();
    for (mut rest, s) in shuffles(a, da, &b[1..], &db[1..]) {
        rest.insert(0, b[0].clone());
        out.push((rest, s + db[0] * past));
    }
    out
}

impl WdgAlgebra for BarAlgebra {
    fn ring(&self) -> Ring {
        self.under.ring()
    }

    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>> {
        self.cache.get_or_fill(w, || {
            let mut out = Vec::new();
            self.fill(w, &mut Vec::new(), &mut out);
            out
        })
    }

    fn bidegree(&self, m: &Monomial) -> Bidegree {
        let w = self.letters(m);
        let mut b = Bidegree::new(w.len() as i64, 0);
        for a in w {
            b = b + self.under.bidegree(a);
        }
        b
    }

    fn mul(&self, x: &Monomial, y: &Monomial) -> Element {
        let ring = self.ring();
        let (a, b) = (self.letters(x), self.letters(y));
        let mut out = Element::zero();
        for (w, s) in shuffles(a, &self.shifted(a), b, &self.shifted(b)) {
            out.add_term(Monomial::Word(w), ring.sign(s), ring);
        }
        out
    }

    fn diff(&self, x: &Monomial) -> Element {
        let ring = self.ring();
        let w = self.letters(x);
        let n = w.len();
        let shifted = self.shifted(w);
        // e[i] = i + Σ_{j≤i} |a_j|, with e[0] = 0
        let mut e = vec![0i64; n + 1];
        for i in 1..=n {
            e[i] = e[i - 1] + shifted[i - 1];
        }
        let mut out = Element::zero();
        for i in 1..n {
            let prod = self.under.mul(&w[i - 1], &w[i]);
            let s = ring.sign(e[i]);
            for (m, c) in prod.terms() {
                let mut letters = Vec::with_capacity(n - 1);
                letters.extend_from_slice(&w[..i - 1]);
                letters.push(m.clone());
                letters.extend_from_slice(&w[i + 1..]);
                out.add_term(Monomial::Word(letters), c * &s, ring);
            }
        }
        for i in 1..=n {
            let d = self.under.diff(&w[i - 1]);
            let s = ring.sign(e[i - 1] + 1);
            for (m, c) in d.terms() {
                let mut letters = w.to_vec();
                letters[i - 1] = m.clone();
                out.add_term(Monomial::Word(letters), c * &s, ring);
            }
        }
        out
    }

    fn unit(&self) -> Monomial {
        Monomial::Word(Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{make_free_algebra, slice_dims, Flavor};
    use num_bigint::BigInt;

    fn gamma2(ring: Ring) -> Alg {
        Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, 1)], ring).unwrap())
    }

    #[test]
    fn weight_four_sizes() {
        let b = bar(gamma2(Ring::Integers));
        let dims: Vec<_> = slice_dims(b.as_ref(), 4).into_iter().collect();
        assert_eq!(dims, vec![(9, 1), (10, 3), (11, 3), (12, 1)]);
    }

    #[test]
    fn fold_term_of_two_gammas() {
        let a = gamma2(Ring::Integers);
        let b = bar(a.clone());
        let g1 = a.weight_basis(1)[0].clone();
        let g2 = a.weight_basis(2)[0].clone();
        let d = b.diff(&Monomial::Word(vec![g1.clone(), g1]));
        let c = d.coefficient(&Monomial::Word(vec![g2]));
        assert_eq!(c.magnitude(), BigInt::from(2).magnitude());
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn suspension_rejects_unit() {
        let a = gamma2(Ring::Integers);
        let one = Element::monomial(a.unit(), Ring::Integers);
        assert_eq!(suspension_chain(a.as_ref(), &one), Err(Error::NotAugmentationIdeal));
    }
}

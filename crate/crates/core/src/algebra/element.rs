use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ring::Ring;

/// A basis monomial of some weighted dg-algebra.
///
/// Monomials carry no degree information; the algebra they belong to assigns
/// bidegrees. The derived ordering (lexicographic on exponent vectors, then on
/// word components) fixes the basis order of every slice.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monomial {
    /// Exponent per generator of a free algebra. For divided powers the
    /// exponent `a` means `γ_a(v)`; exterior generators only take 0 or 1.
    Free(Vec<u32>),
    /// `a ⊗ b` in a tensor product.
    Pair(Box<Monomial>, Box<Monomial>),
    /// A bar word `[a_1|…|a_n]`; the empty word is the unit.
    Word(Vec<Monomial>),
}

impl Monomial {
    pub fn pair(a: Monomial, b: Monomial) -> Monomial {
        Monomial::Pair(Box::new(a), Box::new(b))
    }

    pub fn word(letters: Vec<Monomial>) -> Monomial {
        Monomial::Word(letters)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Free(e) => write!(f, "{e:?}"),
            Monomial::Pair(a, b) => write!(f, "{a:?}⊗{b:?}"),
            Monomial::Word(w) => {
                write!(f, "[")?;
                for (i, l) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, "|")?;
                    }
                    write!(f, "{l:?}")?;
                }
                write!(f, "]")
            }
        }
    }
}

/// Sparse linear combination of monomials. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Element {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn monomial(m: Monomial, ring: Ring) -> Self {
        Element::term(m, ring.one(), ring)
    }

    pub fn term(m: Monomial, c: BigInt, ring: Ring) -> Self {
        let mut e = Element::zero();
        e.add_term(m, c, ring);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt, ring: Ring) {
        let c = ring.reduce(c);
        if ring.is_zero(&c) {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = ring.reduce(o.get() + c);
                if ring.is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &BigInt, ring: Ring) {
        for (m, x) in other.terms() {
            self.add_term(m.clone(), x * c, ring);
        }
    }

    pub fn add(&mut self, other: &Element, ring: Ring) {
        for (m, x) in other.terms() {
            self.add_term(m.clone(), x.clone(), ring);
        }
    }

    pub fn scaled(&self, c: &BigInt, ring: Ring) -> Element {
        let mut out = Element::zero();
        out.add_scaled(self, c, ring);
        out
    }

    /// Applies `f` to every monomial, keeping coefficients.
    pub fn map_monomials(&self, ring: Ring, mut f: impl FnMut(&Monomial) -> Monomial) -> Element {
        let mut out = Element::zero();
        for (m, c) in self.terms() {
            out.add_term(f(m), c.clone(), ring);
        }
        out
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·{m:?}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancelling_terms_are_removed() {
        let r = Ring::Integers;
        let m = Monomial::Free(vec![1]);
        let mut e = Element::monomial(m.clone(), r);
        e.add_term(m.clone(), BigInt::from(-1), r);
        assert!(e.is_zero());

        let f3 = Ring::fp(3).unwrap();
        let mut e = Element::term(m.clone(), BigInt::from(2), f3);
        e.add_term(m, BigInt::from(1), f3);
        assert!(e.is_zero());
    }
}

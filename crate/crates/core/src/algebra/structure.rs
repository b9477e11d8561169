use std::sync::Arc;

use super::{Alg, BasisCache, Element, Monomial, WdgAlgebra};
use crate::bidegree::Bidegree;
use crate::ring::Ring;

/// `R_α A`: the part of `A` in `(i + αd, d)` placed in `(i, d)`.
#[derive(Debug)]
pub struct Regrade {
    inner: Alg,
    alpha: i64,
}

pub fn regrade(a: Alg, alpha: i64) -> Alg {
    Arc::new(Regrade { inner: a, alpha })
}

impl WdgAlgebra for Regrade {
    fn ring(&self) -> Ring {
        self.inner.ring()
    }

    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>> {
        self.inner.weight_basis(w)
    }

    fn bidegree(&self, m: &Monomial) -> Bidegree {
        let b = self.inner.bidegree(m);
        Bidegree::new(b.degree - self.alpha * i64::from(b.weight), b.weight)
    }

    fn mul(&self, a: &Monomial, b: &Monomial) -> Element {
        let x = self.bidegree(a);
        let e = i64::from(self.inner.bidegree(b).weight);
        let sign = self.alpha * (x.degree + i64::from(x.weight)) * e;
        let ring = self.ring();
        self.inner.mul(a, b).scaled(&ring.sign(sign), ring)
    }

    fn diff(&self, a: &Monomial) -> Element {
        let d = i64::from(self.inner.bidegree(a).weight);
        let ring = self.ring();
        self.inner.diff(a).scaled(&ring.sign(self.alpha * d), ring)
    }

    fn unit(&self) -> Monomial {
        self.inner.unit()
    }
}

/// `^tA`: same basis, product scaled by `(-1)^{w(x)w(y)}`.
#[derive(Debug)]
pub struct WeightTwist {
    inner: Alg,
}

pub fn weight_twist(a: Alg) -> Alg {
    Arc::new(WeightTwist { inner: a })
}

impl WdgAlgebra for WeightTwist {
    fn ring(&self) -> Ring {
        self.inner.ring()
    }

    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>> {
        self.inner.weight_basis(w)
    }

    fn bidegree(&self, m: &Monomial) -> Bidegree {
        self.inner.bidegree(m)
    }

    fn mul(&self, a: &Monomial, b: &Monomial) -> Element {
        let d = i64::from(self.inner.bidegree(a).weight);
        let e = i64::from(self.inner.bidegree(b).weight);
        let ring = self.ring();
        self.inner.mul(a, b).scaled(&ring.sign(d * e), ring)
    }

    fn diff(&self, a: &Monomial) -> Element {
        self.inner.diff(a)
    }

    fn unit(&self) -> Monomial {
        self.inner.unit()
    }
}

/// `A ⊗^ε B` on pair monomials.
#[derive(Debug)]
pub struct TensorSigned {
    left: Alg,
    right: Alg,
    eps: u8,
    cache: BasisCache,
}

/// # Panics
///
/// If the two factors live over different rings.
pub fn tensor_signed(a: Alg, b: Alg, eps: u8) -> Alg {
    assert_eq!(a.ring(), b.ring(), "tensor factors over different rings");
    Arc::new(TensorSigned {
        left: a,
        right: b,
        eps: eps % 2,
        cache: BasisCache::default(),
    })
}

impl TensorSigned {
    fn split(m: &Monomial) -> (&Monomial, &Monomial) {
        match m {
            Monomial::Pair(a, b) => (a, b),
            other => panic!("{other:?} is not a tensor monomial"),
        }
    }
}

impl WdgAlgebra for TensorSigned {
    fn ring(&self) -> Ring {
        self.left.ring()
    }

    fn weight_basis(&self, w: u32) -> Arc<Vec<Monomial>> {
        self.cache.get_or_fill(w, || {
            let mut out = Vec::new();
            for u in 0..=w {
                let right = self.right.weight_basis(w - u);
                if right.is_empty() {
                    continue;
                }
                for a in self.left.weight_basis(u).iter() {
                    for b in right.iter() {
                        out.push(Monomial::pair(a.clone(), b.clone()));
                    }
                }
            }
            out
        })
    }

    fn bidegree(&self, m: &Monomial) -> Bidegree {
        let (a, b) = Self::split(m);
        self.left.bidegree(a) + self.right.bidegree(b)
    }

    fn mul(&self, x: &Monomial, y: &Monomial) -> Element {
        let ring = self.ring();
        let (a, b) = Self::split(x);
        let (a2, b2) = Self::split(y);
        let da2 = self.left.bidegree(a2);
        let db = self.right.bidegree(b);
        let exp = da2.degree * db.degree
            + i64::from(self.eps) * i64::from(da2.weight) * i64::from(db.weight);
        let left = self.left.mul(a, a2);
        if left.is_zero() {
            return Element::zero();
        }
        let right = self.right.mul(b, b2);
        let mut out = Element::zero();
        let s = ring.sign(exp);
        for (l, c) in left.terms() {
            for (r, e) in right.terms() {
                out.add_term(Monomial::pair(l.clone(), r.clone()), c * e * &s, ring);
            }
        }
        out
    }

    fn diff(&self, x: &Monomial) -> Element {
        let ring = self.ring();
        let (a, b) = Self::split(x);
        let mut out = self
            .left
            .diff(a)
            .map_monomials(ring, |l| Monomial::pair(l.clone(), b.clone()));
        let s = ring.sign(self.left.bidegree(a).degree);
        let rd = self
            .right
            .diff(b)
            .map_monomials(ring, |r| Monomial::pair(a.clone(), r.clone()));
        out.add_scaled(&rd, &s, ring);
        out
    }

    fn unit(&self) -> Monomial {
        Monomial::pair(self.left.unit(), self.right.unit())
    }
}

/// Checks `xy = (-1)^{|x||y| + ε w(x) w(y)} yx` on all pairs of basis
/// monomials whose weights add up to at most `max_weight`. Returns the first
/// failing pair.
pub fn check_one_eps_commutative(
    alg: &dyn WdgAlgebra,
    eps: u8,
    max_weight: u32,
) -> Option<(Monomial, Monomial)> {
    let ring = alg.ring();
    for w1 in 0..=max_weight {
        let left = alg.weight_basis(w1);
        for w2 in 0..=max_weight - w1 {
            let right = alg.weight_basis(w2);
            for x in left.iter() {
                let bx = alg.bidegree(x);
                for y in right.iter() {
                    let by = alg.bidegree(y);
                    let exp = bx.degree * by.degree
                        + i64::from(eps) * i64::from(bx.weight) * i64::from(by.weight);
                    let xy = alg.mul(x, y);
                    let yx = alg.mul(y, x).scaled(&ring.sign(exp), ring);
                    if xy != yx {
                        return Some((x.clone(), y.clone()));
                    }
                }
            }
        }
    }
    None
}

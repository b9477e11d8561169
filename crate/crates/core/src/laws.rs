//! Bounded checks of the algebra axioms on basis monomials. Each returns a
//! description of the first failure.

use crate::algebra::{diff_element, mul_elements, Element, Monomial, WdgAlgebra};

fn basis_up_to(alg: &dyn WdgAlgebra, max_weight: u32) -> Vec<Monomial> {
    (0..=max_weight)
        .flat_map(|w| alg.weight_basis(w).as_ref().clone())
        .collect()
}

fn mono(alg: &dyn WdgAlgebra, m: &Monomial) -> Element {
    Element::monomial(m.clone(), alg.ring())
}

pub fn check_d_squared(alg: &dyn WdgAlgebra, max_weight: u32) -> Option<String> {
    basis_up_to(alg, max_weight).into_iter().find_map(|m| {
        let dd = diff_element(alg, &alg.diff(&m));
        (!dd.is_zero()).then(|| format!("d^2 {m:?} = {dd:?}"))
    })
}

/// `d(xy) = dx·y + (-1)^{|x|} x·dy`.
pub fn check_leibniz(alg: &dyn WdgAlgebra, max_weight: u32) -> Option<String> {
    let ring = alg.ring();
    for w1 in 0..=max_weight {
        for w2 in 0..=max_weight - w1 {
            for x in alg.weight_basis(w1).iter() {
                for y in alg.weight_basis(w2).iter() {
                    let lhs = diff_element(alg, &alg.mul(x, y));
                    let mut rhs = mul_elements(alg, &alg.diff(x), &mono(alg, y));
                    let sign = ring.sign(alg.bidegree(x).degree);
                    rhs.add_scaled(&mul_elements(alg, &mono(alg, x), &alg.diff(y)), &sign, ring);
                    if lhs != rhs {
                        return Some(format!("Leibniz on {x:?}, {y:?}"));
                    }
                }
            }
        }
    }
    None
}

pub fn check_associative(alg: &dyn WdgAlgebra, max_weight: u32) -> Option<String> {
    let b = basis_up_to(alg, max_weight);
    for x in &b {
        let wx = alg.bidegree(x).weight;
        for y in &b {
            let wy = alg.bidegree(y).weight;
            if wx + wy > max_weight {
                continue;
            }
            let xy = alg.mul(x, y);
            for z in &b {
                if wx + wy + alg.bidegree(z).weight > max_weight {
                    continue;
                }
                let l = mul_elements(alg, &xy, &mono(alg, z));
                let r = mul_elements(alg, &mono(alg, x), &alg.mul(y, z));
                if l != r {
                    return Some(format!("associativity on {x:?}, {y:?}, {z:?}"));
                }
            }
        }
    }
    None
}

/// Same bases, bidegrees, differentials and products.
pub fn check_same_structure(a: &dyn WdgAlgebra, b: &dyn WdgAlgebra, max_weight: u32) -> Option<String> {
    for w in 0..=max_weight {
        if a.weight_basis(w) != b.weight_basis(w) {
            return Some(format!("bases differ in weight {w}"));
        }
    }
    let basis = basis_up_to(a, max_weight);
    for x in &basis {
        if a.bidegree(x) != b.bidegree(x) || a.diff(x) != b.diff(x) {
            return Some(format!("bidegree or differential on {x:?}"));
        }
        for y in &basis {
            if a.bidegree(x).weight + a.bidegree(y).weight <= max_weight && a.mul(x, y) != b.mul(x, y) {
                return Some(format!("product {x:?} {y:?}"));
            }
        }
    }
    None
}

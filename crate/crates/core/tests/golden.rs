use std::sync::Arc;

use extbar_core::algebra::{make_free_algebra, Alg, Flavor};
use extbar_core::bar::iterate_bar;
use extbar_core::homology::{slice_homology, AbelianGroup};
use extbar_core::{Bidegree, Ring};

fn gamma2(ring: Ring, m: u32) -> Alg {
    Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, m)], ring).unwrap())
}

fn table(n: usize, w: u32) -> Vec<(i64, AbelianGroup)> {
    let b = iterate_bar(gamma2(Ring::Integers, 1), n);
    let h = slice_homology(b.as_ref(), w).unwrap();
    h.iter().map(|(b, g)| (b.degree, g.clone())).collect()
}

#[test]
fn weight_four_bar() {
    let c = AbelianGroup::cyclic;
    assert_eq!(table(1, 4), vec![(9, c(2)), (10, c(3)), (11, c(2))]);
}

#[test]
fn weight_four_double_bar() {
    let c = AbelianGroup::cyclic;
    assert_eq!(
        table(2, 4),
        vec![(10, c(2)), (12, c(12)), (13, c(2)), (14, c(2)), (16, AbelianGroup::free(1))]
    );
}

#[test]
fn weight_two_bar() {
    assert_eq!(table(1, 2), vec![(5, AbelianGroup::cyclic(2))]);
    let _ = Bidegree::ZERO;
}

use std::sync::Arc;

use extbar_core::algebra::{make_free_algebra, Alg, Flavor};
use extbar_core::bar::iterate_bar;
use extbar_core::homology::homology_ring_over_fp;
use extbar_core::predict::{cartan_field_spec, instantiate};
use extbar_core::{Bidegree, Error, Ring};

fn bar_of_gamma(p: u64, n: usize) -> Alg {
    let ring = Ring::fp(p).unwrap();
    iterate_bar(Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, 1)], ring).unwrap()), n)
}

#[test]
fn decomposables_match_predicted_algebra() {
    for p in [2, 3] {
        for n in [1, 2] {
            let h = homology_ring_over_fp(bar_of_gamma(p, n), 4, p).unwrap();
            let spec = cartan_field_spec(p, n, 1, 4);
            let model = instantiate(&spec, Ring::fp(p).unwrap(), 4).unwrap();
            let hm = homology_ring_over_fp(model, 4, p).unwrap();
            assert_eq!(h.dims(), hm.dims(), "p={p} n={n}");
            assert_eq!(
                h.decomposable_dims().unwrap(),
                hm.decomposable_dims().unwrap(),
                "p={p} n={n}"
            );
        }
    }
}

#[test]
fn odd_class_squares_vanish() {
    // at p = 2 the degree 3 class has a divided square in degree 6
    let h = homology_ring_over_fp(bar_of_gamma(2, 1), 4, 2).unwrap();
    let b = Bidegree::new(3, 1);
    assert_eq!(h.classes(b), 1);
    assert_eq!(h.classes(b + b), 1);
    assert_eq!(h.product(b, 0, b, 0).unwrap(), vec![0]);
}

#[test]
fn products_refuse_weights_above_cap() {
    let h = homology_ring_over_fp(bar_of_gamma(2, 1), 2, 2).unwrap();
    let b = Bidegree::new(5, 2);
    assert!(matches!(h.product(b, 0, b, 0), Err(Error::WeightOutOfRange { .. })));
}

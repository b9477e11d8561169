use std::collections::BTreeMap;
use std::sync::Arc;

use extbar_core::algebra::{make_free_algebra, Alg, Flavor};
use extbar_core::bar::iterate_bar;
use extbar_core::extract::{ext_table, ext_table_via_bar, hom_dimension, Method};
use extbar_core::homology::homology_up_to;
use extbar_core::predict::{
    cartan_field_spec, ext_field_predict, ext_twisted_predict, poincare_dims, twisted_via_composite,
};
use extbar_core::{Bidegree, Ring};

const ALL: [Flavor; 3] = [Flavor::Sym, Flavor::Lambda, Flavor::Gamma];

fn gamma2(ring: Ring, m: u32) -> Alg {
    Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, m)], ring).unwrap())
}

fn field_dims(alg: &Alg, max_weight: u32) -> BTreeMap<Bidegree, u64> {
    homology_up_to(alg.as_ref(), 0..=max_weight).unwrap().dims()
}

#[test]
fn cartan_words_give_bar_homology_over_fields() {
    for p in [2, 3] {
        for n in [1, 2] {
            for m in [1, 2] {
                let alg = iterate_bar(gamma2(Ring::fp(p).unwrap(), m), n);
                let computed = field_dims(&alg, 4);
                let predicted = poincare_dims(&cartan_field_spec(p, n, m, 4), 4).dims;
                assert_eq!(computed, predicted, "p={p} n={n} m={m}");
            }
        }
    }
}

#[test]
fn field_predictions_match_bar_for_symmetric_source() {
    for p in [2, 3, 5] {
        for y in [Flavor::Lambda, Flavor::Gamma] {
            for (m, cap) in [(1, 6), (2, 4)] {
                let ring = Ring::fp(p).unwrap();
                let bar = ext_table_via_bar(y, ring, cap, m).unwrap();
                let pred = ext_table(Flavor::Sym, y, ring, 0, 0, m, cap, Method::Predict).unwrap();
                assert_eq!(bar.dims(), pred.dims(), "p={p} Y={y} m={m}");
            }
        }
    }
}

#[test]
fn duality_pairs_share_tables() {
    for p in [2, 3] {
        let a = poincare_dims(&ext_field_predict(Flavor::Lambda, Flavor::Gamma, p, 1, 9).unwrap(), 9);
        let b = poincare_dims(&ext_field_predict(Flavor::Sym, Flavor::Lambda, p, 1, 9).unwrap(), 9);
        assert_eq!(a, b);
    }
}

#[test]
fn symmetric_to_divided_powers_at_weight_p() {
    for p in [2u64, 3, 5] {
        let w = p as u32;
        let t = poincare_dims(&ext_field_predict(Flavor::Sym, Flavor::Gamma, p, 1, w).unwrap(), w);
        let mut col: Vec<(i64, u64)> = t
            .entries()
            .filter(|((_, ww), _)| *ww == w)
            .map(|((i, _), d)| (i, d))
            .collect();
        col.sort();
        let q = p as i64;
        assert_eq!(col, vec![(0, 1), (2 * q - 3, 1), (2 * q - 2, 1)], "p={p}");
    }
}

#[test]
fn symmetric_to_divided_powers_at_weight_p_via_bar() {
    for p in [2u64, 3, 5] {
        let w = p as u32;
        let t = ext_table_via_bar(Flavor::Gamma, Ring::fp(p).unwrap(), w, 1).unwrap();
        let col: Vec<(i64, u64)> = t.column(w).into_iter().map(|(i, g)| (i, g.free_rank)).collect();
        let q = p as i64;
        assert_eq!(col, vec![(0, 1), (2 * q - 3, 1), (2 * q - 2, 1)], "p={p}");
    }
}

#[test]
fn hom_from_symmetric_square_to_exterior_square() {
    assert_eq!(hom_dimension(Flavor::Sym, Flavor::Lambda, 2, 2, 1).unwrap(), 1);
    assert_eq!(hom_dimension(Flavor::Sym, Flavor::Lambda, 3, 2, 1).unwrap(), 0);
}

#[test]
fn twisted_predictions_agree_with_composite() {
    for x in ALL {
        for y in ALL {
            for p in [2u64, 3] {
                for s in 0..=2u32 {
                    for t in 0..=2u32 {
                        let cap = (3 * p.pow(s + t)).min(27) as u32;
                        let direct = ext_twisted_predict(x, y, p, s, t, 1, cap).unwrap();
                        let composite = twisted_via_composite(x, y, p, s, t, 1, cap).unwrap();
                        assert_eq!(
                            poincare_dims(&direct, cap),
                            poincare_dims(&composite, cap),
                            "X={x} Y={y} p={p} s={s} t={t}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn untwisted_closed_forms_agree_with_field_predictions() {
    for x in ALL {
        for y in ALL {
            for p in [2u64, 3, 5] {
                let a = poincare_dims(&ext_twisted_predict(x, y, p, 0, 0, 2, 12).unwrap(), 12);
                let b = poincare_dims(&ext_field_predict(x, y, p, 2, 12).unwrap(), 12);
                assert_eq!(a, b, "X={x} Y={y} p={p}");
            }
        }
    }
}

#[test]
fn twisting_over_integers_is_refused() {
    assert!(ext_table(Flavor::Sym, Flavor::Lambda, Ring::Integers, 1, 0, 1, 4, Method::Predict).is_err());
}

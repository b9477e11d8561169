use extbar_core::algebra::Flavor;
use extbar_core::extract::{ext_table, ext_table_via_bar, Method};
use extbar_core::homology::AbelianGroup;
use extbar_core::Ring;

fn cyc(orders: &[u64]) -> AbelianGroup {
    AbelianGroup::from_cyclic(0, orders.iter().copied())
}

#[test]
fn weight_four_tables() {
    let lam = ext_table_via_bar(Flavor::Lambda, Ring::Integers, 4, 1).unwrap();
    let expected = [cyc(&[]), cyc(&[2]), cyc(&[3]), cyc(&[2])];
    for (i, g) in expected.iter().enumerate() {
        assert_eq!(&lam.get(i as i64, 4), g, "Ext^{i}(S4, L4)");
    }
    assert_eq!(lam.column(4).len(), 3);

    let gam = ext_table_via_bar(Flavor::Gamma, Ring::Integers, 4, 1).unwrap();
    let expected = [
        AbelianGroup::free(1),
        cyc(&[]),
        cyc(&[2]),
        cyc(&[2]),
        cyc(&[12]),
        cyc(&[]),
        cyc(&[2]),
    ];
    for (i, g) in expected.iter().enumerate() {
        assert_eq!(&gam.get(i as i64, 4), g, "Ext^{i}(S4, G4)");
    }
    assert_eq!(gam.column(4).len(), 5);
}

#[test]
fn low_degree_laws() {
    let t = ext_table_via_bar(Flavor::Lambda, Ring::Integers, 7, 1).unwrap();
    for n in 1..=7u32 {
        let e1 = if n >= 2 { cyc(&[2]) } else { cyc(&[]) };
        let e2 = if n == 3 || n == 4 { cyc(&[3]) } else { cyc(&[]) };
        let e3 = match n {
            0..=3 => cyc(&[]),
            6 | 7 => cyc(&[2, 3]),
            _ => cyc(&[2]),
        };
        assert_eq!(t.get(1, n), e1, "Ext1 n={n}");
        assert_eq!(t.get(2, n), e2, "Ext2 n={n}");
        assert_eq!(t.get(3, n), e3, "Ext3 n={n}");
    }
}

#[test]
fn integral_predictions_match_bar() {
    for (y, cap) in [(Flavor::Lambda, 7), (Flavor::Gamma, 5)] {
        for m in [1, 2] {
            let cap = if m == 2 { cap.min(4) } else { cap };
            let bar = ext_table(Flavor::Sym, y, Ring::Integers, 0, 0, m, cap, Method::Bar).unwrap();
            let pred = ext_table(Flavor::Sym, y, Ring::Integers, 0, 0, m, cap, Method::Predict).unwrap();
            assert_eq!(bar.entries, pred.entries, "Y={y} m={m}");
        }
    }
}

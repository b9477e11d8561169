//! Verification suites: computed homology against predictions, closed forms
//! and golden tables.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;
use std::sync::Arc;

use clap::ValueEnum;

use extbar_core::algebra::{
    check_one_eps_commutative, make_free_algebra, regrade, tensor_signed, weight_twist, Alg, Flavor,
    FreeAlgebra, Generator, WdgAlgebra,
};
use extbar_core::bar::iterate_bar;
use extbar_core::extract::{ext_table_via_bar, ExtTable};
use extbar_core::homology::{homology_up_to, AbelianGroup, HomologyGroup};
use extbar_core::koszul::{build_koszul, koszul_homology_closed_form, predicted_bar_homology_over_z, KoszulSpec, Variant};
use extbar_core::laws;
use extbar_core::predict::{
    cartan_field_spec, ext_field_predict, ext_twisted_predict, poincare_dims, twisted_via_composite,
};
use extbar_core::{Bidegree, Result, Ring};

use crate::report::{VerifyReport, SCHEMA_VERSION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    CartanField,
    CartanIntegral,
    Koszul,
    TwistConsistency,
    Exponential,
    Tables,
    Structure,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::CartanField => "cartan-field",
            Suite::CartanIntegral => "cartan-integral",
            Suite::Koszul => "koszul",
            Suite::TwistConsistency => "twist-consistency",
            Suite::Exponential => "exponential",
            Suite::Tables => "tables",
            Suite::Structure => "structure",
        }
    }
}

/// Optional bounds; each suite has its own defaults.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub p: Option<u64>,
    pub n: Option<usize>,
    pub m: Option<u32>,
    pub max_weight: Option<u32>,
    pub max_s: Option<u32>,
    pub max_t: Option<u32>,
}

impl Bounds {
    fn primes(&self, default: &[u64]) -> Vec<u64> {
        self.p.map_or_else(|| default.to_vec(), |p| vec![p])
    }

    fn ns(&self, default: &[usize]) -> Vec<usize> {
        self.n.map_or_else(|| default.to_vec(), |n| vec![n])
    }

    fn ms(&self, default: &[u32]) -> Vec<u32> {
        self.m.map_or_else(|| default.to_vec(), |m| vec![m])
    }

    fn weight(&self, default: u32) -> u32 {
        self.max_weight.unwrap_or(default)
    }
}

#[derive(Default)]
struct Tally {
    checks: u64,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.first.is_none() {
            self.first = Some(what());
        }
    }

    fn failure(&mut self, what: Option<String>) {
        self.checks += 1;
        if self.first.is_none() {
            self.first = what;
        }
    }

    /// Compares two tables key by key.
    fn tables<K: Ord + Copy + Display, V: PartialEq + Default + Clone + Display>(
        &mut self,
        context: &str,
        computed: &BTreeMap<K, V>,
        predicted: &BTreeMap<K, V>,
    ) {
        let keys: BTreeSet<K> = computed.keys().chain(predicted.keys()).copied().collect();
        for k in keys {
            let a = computed.get(&k).cloned().unwrap_or_default();
            let b = predicted.get(&k).cloned().unwrap_or_default();
            self.check(a == b, || format!("{context} at {k}: computed {a}, expected {b}"));
        }
    }

    fn report(self, suite: Suite) -> VerifyReport {
        VerifyReport {
            schema_version: SCHEMA_VERSION,
            suite: suite.name().to_string(),
            passed: self.first.is_none(),
            checks: self.checks,
            first_mismatch: self.first,
        }
    }
}

fn gamma2(ring: Ring, m: u32) -> Result<Alg> {
    Ok(Arc::new(make_free_algebra(Flavor::Gamma, &[(2, 1, m)], ring)?))
}

fn groups(h: &HomologyGroup) -> BTreeMap<Bidegree, AbelianGroup> {
    h.iter().filter(|(_, g)| !g.is_zero()).map(|(b, g)| (*b, g.clone())).collect()
}

/// Key `(i, w)` displayed as a bidegree.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Key(i64, u32);

impl Display for Key {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

fn ext_groups(t: &ExtTable) -> BTreeMap<Key, AbelianGroup> {
    t.entries.iter().map(|(&(i, w), g)| (Key(i, w), g.clone())).collect()
}

pub fn run(suite: Suite, bounds: &Bounds) -> Result<VerifyReport> {
    let mut t = Tally::default();
    match suite {
        Suite::CartanField => cartan_field(&mut t, bounds)?,
        Suite::CartanIntegral => cartan_integral(&mut t, bounds)?,
        Suite::Koszul => koszul(&mut t, bounds)?,
        Suite::TwistConsistency => twist_consistency(&mut t, bounds)?,
        Suite::Exponential => exponential(&mut t, bounds)?,
        Suite::Tables => tables(&mut t)?,
        Suite::Structure => structure(&mut t, bounds)?,
    }
    Ok(t.report(suite))
}

fn cartan_field(t: &mut Tally, b: &Bounds) -> Result<()> {
    let w = b.weight(4);
    for p in b.primes(&[2, 3]) {
        for n in b.ns(&[1, 2]) {
            for m in b.ms(&[1, 2]) {
                let alg = iterate_bar(gamma2(Ring::fp(p)?, m)?, n);
                let computed = homology_up_to(alg.as_ref(), 0..=w)?.dims();
                let predicted = poincare_dims(&cartan_field_spec(p, n, m, w), w).dims;
                t.tables(&format!("p={p} n={n} m={m}"), &computed, &predicted);
            }
        }
    }
    Ok(())
}

fn cartan_integral(t: &mut Tally, b: &Bounds) -> Result<()> {
    let w = b.weight(4);
    for n in b.ns(&[1, 2]) {
        for m in b.ms(&[1, 2]) {
            let alg = iterate_bar(gamma2(Ring::Integers, m)?, n);
            let computed = groups(&homology_up_to(alg.as_ref(), 0..=w)?);
            let predicted = groups(&predicted_bar_homology_over_z(n, m, w)?);
            t.tables(&format!("n={n} m={m}"), &computed, &predicted);
        }
    }
    Ok(())
}

fn koszul(t: &mut Tally, b: &Bounds) -> Result<()> {
    let w = b.weight(5);
    for h in b.primes(&[2, 3, 5]) {
        for (variant, deg) in [
            (Variant::Koszul, 1),
            (Variant::Koszul, 3),
            (Variant::DeRham, 2),
            (Variant::DeRham, 4),
        ] {
            let spec = KoszulSpec::new(variant, vec![(deg, 1, 1)], h as i64);
            let alg = build_koszul(&spec, Ring::Integers)?;
            let computed = groups(&homology_up_to(&alg, 0..=w)?);
            let predicted = groups(&koszul_homology_closed_form(deg, 1, h, w));
            t.tables(&format!("{variant:?} h={h} degree {deg}"), &computed, &predicted);
        }
    }
    Ok(())
}

const FLAVORS: [Flavor; 3] = [Flavor::Sym, Flavor::Lambda, Flavor::Gamma];

fn twist_consistency(t: &mut Tally, b: &Bounds) -> Result<()> {
    let m = b.m.unwrap_or(1);
    for p in b.primes(&[2, 3]) {
        for s in 0..=b.max_s.unwrap_or(2) {
            for tt in 0..=b.max_t.unwrap_or(2) {
                let cap = (3 * p.pow(s + tt)).min(27) as u32;
                let cap = b.max_weight.map_or(cap, |w| w.min(cap));
                for x in FLAVORS {
                    for y in FLAVORS {
                        let direct = poincare_dims(&ext_twisted_predict(x, y, p, s, tt, m, cap)?, cap);
                        let composite = poincare_dims(&twisted_via_composite(x, y, p, s, tt, m, cap)?, cap);
                        t.tables(
                            &format!("E({x}, {y}) p={p} s={s} t={tt}"),
                            &direct.dims,
                            &composite.dims,
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn convolve(a: &BTreeMap<Bidegree, u64>, b: &BTreeMap<Bidegree, u64>, max_weight: u32) -> BTreeMap<Bidegree, u64> {
    let mut out = BTreeMap::new();
    for (x, m) in a {
        for (y, n) in b {
            let s = *x + *y;
            if s.weight <= max_weight {
                *out.entry(s).or_insert(0) += m * n;
            }
        }
    }
    out
}

fn exponential(t: &mut Tally, b: &Bounds) -> Result<()> {
    let w = b.weight(4);
    for p in b.primes(&[2, 3]) {
        let ring = Ring::fp(p)?;
        for n in b.ns(&[1, 2]) {
            let one = homology_up_to(iterate_bar(gamma2(ring, 1)?, n).as_ref(), 0..=w)?.dims();
            let two = homology_up_to(iterate_bar(gamma2(ring, 2)?, n).as_ref(), 0..=w)?.dims();
            t.tables(&format!("bar p={p} n={n}"), &two, &convolve(&one, &one, w));
        }
        let cap = 3 * w;
        for x in FLAVORS {
            for y in FLAVORS {
                let one = poincare_dims(&ext_field_predict(x, y, p, 1, cap)?, cap).dims;
                let two = poincare_dims(&ext_field_predict(x, y, p, 2, cap)?, cap).dims;
                t.tables(&format!("E({x}, {y}) p={p}"), &two, &convolve(&one, &one, cap));
            }
        }
    }
    Ok(())
}

fn cyc(orders: &[u64]) -> AbelianGroup {
    AbelianGroup::from_cyclic(0, orders.iter().copied())
}

/// Embedded golden tables, as `(degree, group)` at weight 4.
fn golden() -> Vec<(&'static str, Vec<(i64, AbelianGroup)>)> {
    vec![
        ("bar n=1", vec![(9, cyc(&[2])), (10, cyc(&[3])), (11, cyc(&[2]))]),
        (
            "bar n=2",
            vec![
                (10, cyc(&[2])),
                (12, cyc(&[12])),
                (13, cyc(&[2])),
                (14, cyc(&[2])),
                (16, AbelianGroup::free(1)),
            ],
        ),
        ("Ext(S4, Lambda4)", vec![(1, cyc(&[2])), (2, cyc(&[3])), (3, cyc(&[2]))]),
        (
            "Ext(S4, Gamma4)",
            vec![
                (0, AbelianGroup::free(1)),
                (2, cyc(&[2])),
                (3, cyc(&[2])),
                (4, cyc(&[12])),
                (6, cyc(&[2])),
            ],
        ),
    ]
}

fn tables(t: &mut Tally) -> Result<()> {
    for (name, rows) in golden() {
        let expected: BTreeMap<Key, AbelianGroup> = rows.into_iter().map(|(i, g)| (Key(i, 4), g)).collect();
        let computed: BTreeMap<Key, AbelianGroup> = match name {
            "bar n=1" | "bar n=2" => {
                let n = if name == "bar n=1" { 1 } else { 2 };
                let alg = iterate_bar(gamma2(Ring::Integers, 1)?, n);
                groups(&homology_up_to(alg.as_ref(), 4..=4)?)
                    .into_iter()
                    .map(|(b, g)| (Key(b.degree, b.weight), g))
                    .collect()
            }
            _ => {
                let y = if name.contains("Lambda") { Flavor::Lambda } else { Flavor::Gamma };
                ext_groups(&ext_table_via_bar(y, Ring::Integers, 4, 1)?)
                    .into_iter()
                    .filter(|(k, _)| k.1 == 4)
                    .collect()
            }
        };
        t.tables(name, &computed, &expected);
    }
    Ok(())
}

fn structure(t: &mut Tally, b: &Bounds) -> Result<()> {
    let w = b.weight(3);
    let z = Ring::Integers;
    let koszul = |h: i64| -> Result<Alg> {
        let spec = KoszulSpec::new(Variant::Koszul, vec![(3, 1, 1), (1, 2, 1)], h);
        Ok(Arc::new(build_koszul(&spec, z)?))
    };
    let de_rham = |h: i64| -> Result<Alg> {
        let spec = KoszulSpec::new(Variant::DeRham, vec![(2, 1, 2)], h);
        Ok(Arc::new(build_koszul(&spec, z)?))
    };
    let mut algs: Vec<(String, Alg)> = vec![
        ("B Gamma(Z[2])".into(), iterate_bar(gamma2(z, 1)?, 1)),
        ("B^2 Gamma(Z[2])".into(), iterate_bar(gamma2(z, 1)?, 2)),
        ("B Gamma(Z^2[2])".into(), iterate_bar(gamma2(z, 2)?, 1)),
        ("B Gamma(F3[2])".into(), iterate_bar(gamma2(Ring::fp(3)?, 1)?, 1)),
        ("K^2".into(), koszul(2)?),
        ("Omega^3".into(), de_rham(3)?),
    ];
    for eps in [0, 1] {
        algs.push((format!("K^2 (x)^{eps} Omega^3"), tensor_signed(koszul(2)?, de_rham(3)?, eps)));
    }
    for (name, a) in &algs {
        let a = a.as_ref();
        t.failure(laws::check_d_squared(a, w + 1).map(|e| format!("{name}: {e}")));
        t.failure(laws::check_leibniz(a, w).map(|e| format!("{name}: {e}")));
        t.failure(laws::check_associative(a, w).map(|e| format!("{name}: {e}")));
    }
    // shuffle products are (1,0)-commutative; R_α shifts the type by α
    for (name, a) in algs.iter().take(4) {
        t.check(check_one_eps_commutative(a.as_ref(), 0, w + 1).is_none(), || {
            format!("{name}: not (1,0)-commutative")
        });
        for alpha in 1..=3 {
            let r = regrade(a.clone(), alpha);
            t.check(check_one_eps_commutative(r.as_ref(), (alpha % 2) as u8, w + 1).is_none(), || {
                format!("R_{alpha} {name}: wrong commutativity type")
            });
        }
    }
    // divided powers
    let g = FreeAlgebra::new(z, vec![Generator::new(Flavor::Gamma, 2, 1)])?;
    for i in 0..6u32 {
        for j in 0..6u32 {
            let prod = g.mul(&g.power(0, i), &g.power(0, j));
            let c = binomial(i + j, i);
            t.check(
                prod.coefficient(&g.power(0, i + j)) == z.reduce_i64(c) && prod.len() == 1,
                || format!("gamma_{i} gamma_{j} != C({}, {i}) gamma_{}", i + j, i + j),
            );
        }
    }
    // R_{-α} R_α is the identity for even α and the weight twist for odd α
    for (name, a) in &algs {
        for alpha in 1..=4i64 {
            let back = regrade(regrade(a.clone(), alpha), -alpha);
            let expected = if alpha % 2 == 0 { a.clone() } else { weight_twist(a.clone()) };
            t.failure(
                laws::check_same_structure(back.as_ref(), expected.as_ref(), w)
                    .map(|e| format!("R_-{alpha} R_{alpha} {name}: {e}")),
            );
        }
    }
    // universal coefficients between Z and F_p
    for n in [1, 2] {
        for m in [1, 2] {
            let hz = homology_up_to(iterate_bar(gamma2(z, m)?, n).as_ref(), 0..=4)?;
            for p in [2, 3, 5] {
                let hf = homology_up_to(iterate_bar(gamma2(Ring::fp(p)?, m)?, n).as_ref(), 0..=4)?.dims();
                t.tables(&format!("UC n={n} m={m} p={p}"), &hf, &hz.universal_coefficients(p));
            }
        }
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * i64::from(n - i) / i64::from(i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_first_mismatch() {
        let mut t = Tally::default();
        let a = BTreeMap::from([(Key(1, 2), 1u64), (Key(3, 2), 2)]);
        let b = BTreeMap::from([(Key(1, 2), 1u64), (Key(4, 2), 2)]);
        t.tables("x", &a, &b);
        t.check(false, || "later".into());
        let rep = t.report(Suite::Tables);
        assert!(!rep.passed);
        assert_eq!(rep.checks, 4);
        assert_eq!(rep.first_mismatch.as_deref(), Some("x at (3, 2): computed 2, expected 0"));
    }

    #[test]
    fn failure_counts_as_a_check() {
        let mut t = Tally::default();
        t.failure(None);
        t.failure(Some("bad".into()));
        let rep = t.report(Suite::Structure);
        assert_eq!((rep.checks, rep.passed), (2, false));
    }
}

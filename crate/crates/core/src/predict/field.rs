use super::{duality_flip, Factor, FreeAlgebraSpec, GeneratorFamily};
use crate::algebra::Flavor;
use crate::error::Result;
use crate::ring::Prime;
use crate::words::{enumerate_words_with, word_degree, word_twisting, Style, WordBounds};

/// Largest `t` with `p^t ≤ max_weight`, or `None` when `max_weight = 0`.
pub(crate) fn max_twist(p: u64, max_weight: u32) -> Option<u32> {
    if max_weight == 0 {
        return None;
    }
    let mut t = 0;
    while p.pow(t + 1) <= u64::from(max_weight) {
        t += 1;
    }
    Some(t)
}

pub(crate) fn family(flavor: Flavor, cohom_degree: i64, p: u64, twist: u32, m: u32) -> GeneratorFamily {
    GeneratorFamily {
        flavor,
        cohom_degree,
        weight: p.pow(twist) as u32,
        twist,
        multiplicity: m,
    }
}

pub(crate) fn pw(p: u64, e: u32) -> i64 {
    p.pow(e) as i64
}

/// Generators of the homology of `B̄^n Γ(k^m[2])` over `F_p`: one family per
/// admissible word of height `n + 2`, in homological degree `deg W` (stored as
/// cohomological degree `-deg W`) and weight `p^{t_W}`. For odd `p` even
/// degrees carry divided powers and odd degrees exterior algebras; for `p = 2`
/// all generators carry divided powers.
pub fn cartan_field_generators(p: u64, n: usize, m: u32, max_weight: u32) -> Vec<GeneratorFamily> {
    let Some(t) = max_twist(p, max_weight) else {
        return Vec::new();
    };
    let words = enumerate_words_with(p, Style::for_prime(p), n + 2, WordBounds::twisting(t));
    words
        .iter()
        .map(|w| {
            let deg = word_degree(w, p) as i64;
            let flavor = if p != 2 && deg % 2 == 1 {
                Flavor::Lambda
            } else {
                Flavor::Gamma
            };
            family(flavor, -deg, p, word_twisting(w), m)
        })
        .collect()
}

/// [`cartan_field_generators`] grouped into a Γ factor and (for odd `p`) a Λ
/// factor.
pub fn cartan_field_spec(p: u64, n: usize, m: u32, max_weight: u32) -> FreeAlgebraSpec {
    let gens = cartan_field_generators(p, n, m, max_weight);
    let pick = |fl: Flavor| gens.iter().filter(|g| g.flavor == fl).copied().collect();
    let spec = FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, pick(Flavor::Gamma)));
    if p == 2 {
        spec
    } else {
        spec.then(0, Factor::new(Flavor::Lambda, pick(Flavor::Lambda)))
    }
}

fn one_generator(flavor: Flavor, m: u32) -> FreeAlgebraSpec {
    FreeAlgebraSpec::single(Factor::new(flavor, vec![family(flavor, 0, 1, 0, m)]))
}

/// `E(S, Λ)` over `F_p`.
fn s_lambda(p: u64, m: u32, max_weight: u32) -> FreeAlgebraSpec {
    let Some(top) = max_twist(p, max_weight) else {
        return FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, Vec::new()));
    };
    if p == 2 {
        let fams = (0..=top)
            .map(|k| family(Flavor::Gamma, pw(p, k) - 1, p, k, m))
            .collect();
        return FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, fams));
    }
    let lam = (0..=top)
        .map(|k| family(Flavor::Lambda, pw(p, k) - 1, p, k, m))
        .collect();
    let gam = (0..top)
        .map(|k| family(Flavor::Gamma, pw(p, k + 1) - 2, p, k + 1, m))
        .collect();
    FreeAlgebraSpec::single(Factor::new(Flavor::Lambda, lam))
        .then(1, Factor::new(Flavor::Gamma, gam).twisted())
}

/// `E(S, Γ)` over `F_p`.
fn s_gamma(p: u64, m: u32, max_weight: u32) -> FreeAlgebraSpec {
    let top = max_twist(p, max_weight);
    let pairs = |extra: u32| -> Vec<(u32, u32)> {
        let Some(top) = top else { return Vec::new() };
        let mut out = Vec::new();
        for k in 0..=top {
            for l in 0..=top {
                if k + l + extra <= top {
                    out.push((k, l));
                }
            }
        }
        out
    };
    if p == 2 {
        let fams = pairs(0)
            .into_iter()
            .map(|(k, l)| family(Flavor::Gamma, 2 * pw(p, k + l) - pw(p, k) - 1, p, k + l, m))
            .collect();
        return FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, fams));
    }
    let first = top
        .map(|top| (0..=top).map(|k| family(Flavor::Gamma, 2 * pw(p, k) - 2, p, k, m)).collect())
        .unwrap_or_default();
    let middle = pairs(1)
        .into_iter()
        .map(|(k, l)| {
            let d = 2 * pw(p, k + l + 1) - 2 * pw(p, k) - 1;
            family(Flavor::Lambda, d, p, k + l + 1, m)
        })
        .collect();
    let last = pairs(2)
        .into_iter()
        .map(|(k, l)| {
            let d = 2 * pw(p, k + l + 2) - 2 * pw(p, k + 1) - 2;
            family(Flavor::Gamma, d, p, k + l + 2, m)
        })
        .collect();
    FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, first))
        .then(0, Factor::new(Flavor::Lambda, middle))
        .then(0, Factor::new(Flavor::Gamma, last))
}

/// `E(X, Y)` over `F_p`, evaluated on `k^m`, up to `max_weight`.
pub fn ext_field_predict(x: Flavor, y: Flavor, p: u64, m: u32, max_weight: u32) -> Result<FreeAlgebraSpec> {
    Prime::new(p)?;
    let spec = match (x, y) {
        (Flavor::Gamma, y) => one_generator(y, m),
        (x, Flavor::Sym) => one_generator(x.sharp(), m),
        (Flavor::Lambda, Flavor::Lambda) => one_generator(Flavor::Gamma, m),
        (Flavor::Sym, Flavor::Lambda) => s_lambda(p, m, max_weight),
        (Flavor::Sym, Flavor::Gamma) => s_gamma(p, m, max_weight),
        (Flavor::Lambda, Flavor::Gamma) => {
            let (dx, dy) = duality_flip(x, y);
            return ext_field_predict(dx, dy, p, m, max_weight);
        }
    };
    Ok(spec.truncated(max_weight))
}

use super::field::{family, max_twist, pw};
use super::{ext_field_predict, Factor, FreeAlgebraSpec, GeneratorFamily};
use crate::algebra::Flavor;
use crate::error::Result;
use crate::ring::Prime;

/// Cohomological shift per unit of weight when the source is twisted `t`
/// times: 0 for S, `p^t - 1` for Λ, `2(p^t - 1)` for Γ.
fn alpha(y: Flavor, p: u64, t: u32) -> i64 {
    match y {
        Flavor::Sym => 0,
        Flavor::Lambda => pw(p, t) - 1,
        Flavor::Gamma => 2 * (pw(p, t) - 1),
    }
}

/// `E(X^{(t)}, Y)` from `E(X, Y)`: a generator `(a, w, r)` becomes
/// `(a + w·α(Y), w·p^t, r + t)`.
///
/// The regrading by `α(Y)` changes signs only when `α(Y)` is odd, which
/// happens for `p = 2` alone, where signs are invisible; sign data is kept.
pub fn twist_shift(spec: &FreeAlgebraSpec, p: u64, t: u32, y: Flavor) -> FreeAlgebraSpec {
    let a = alpha(y, p, t);
    spec.map_families(|g| {
        vec![GeneratorFamily {
            cohom_degree: g.cohom_degree + i64::from(g.weight) * a,
            weight: g.weight * p.pow(t) as u32,
            twist: g.twist + t,
            ..*g
        }]
    })
}

/// Parametrization by `E_s`, one-dimensional in degrees `2i`, `0 ≤ i < p^s`:
/// a generator `(a, w, b)` gives `(a + 2i·p^b, w·p^s, b + s)` for each `i`.
pub fn parametrize_by_es(spec: &FreeAlgebraSpec, p: u64, s: u32) -> FreeAlgebraSpec {
    spec.map_families(|g| {
        (0..p.pow(s))
            .map(|i| GeneratorFamily {
                cohom_degree: g.cohom_degree + 2 * i as i64 * pw(p, g.twist),
                weight: g.weight * p.pow(s) as u32,
                twist: g.twist + s,
                ..*g
            })
            .collect()
    })
}

/// The composite `parametrize_by_es ∘ twist_shift` applied to the untwisted
/// prediction: the second way of computing `E(X^{(t+s)}, Y^{(s)})`.
pub fn twisted_via_composite(
    x: Flavor,
    y: Flavor,
    p: u64,
    s: u32,
    t: u32,
    m: u32,
    max_weight: u32,
) -> Result<FreeAlgebraSpec> {
    let base = ext_field_predict(x, y, p, m, max_weight)?;
    Ok(parametrize_by_es(&twist_shift(&base, p, t, y), p, s).truncated(max_weight))
}

/// Families `g(i, j)` for `0 ≤ i < p^s` and every index `j` in `js`.
fn over_i<J: Copy>(
    p: u64,
    s: u32,
    js: &[J],
    mut g: impl FnMut(i64, J) -> GeneratorFamily,
) -> Vec<GeneratorFamily> {
    let mut out = Vec::new();
    for &j in js {
        for i in 0..pw(p, s) {
            out.push(g(i, j));
        }
    }
    out
}

/// `E(X^{(t+s)}, Y^{(s)})` over `F_p` on `k^m`, by closed forms built from p-pairs.
pub fn ext_twisted_predict(
    x: Flavor,
    y: Flavor,
    p: u64,
    s: u32,
    t: u32,
    m: u32,
    max_weight: u32,
) -> Result<FreeAlgebraSpec> {
    Prime::new(p)?;
    let Some(top) = max_twist(p, max_weight) else {
        return Ok(FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, Vec::new())));
    };
    let ts = t + s;
    // untwisted indices k (and pairs (k, l)) that can stay under the cap
    let ks: Vec<u32> = (0..=top).collect();
    let kls: Vec<(u32, u32)> = ks.iter().flat_map(|&k| ks.iter().map(move |&l| (k, l))).collect();
    let single = |fl: Flavor, deg: &dyn Fn(i64) -> i64| {
        FreeAlgebraSpec::single(Factor::new(
            fl,
            over_i(p, s, &[()], |i, ()| family(fl, deg(i), p, ts, m)),
        ))
    };
    let spec = match (x, y) {
        (x, Flavor::Sym) => single(x.sharp(), &|i| 2 * i * pw(p, t)),
        (Flavor::Gamma, Flavor::Lambda) => single(Flavor::Lambda, &|i| (2 * i + 1) * pw(p, t) - 1),
        (Flavor::Lambda, Flavor::Lambda) => single(Flavor::Gamma, &|i| (2 * i + 1) * pw(p, t) - 1),
        (Flavor::Gamma, Flavor::Gamma) => single(Flavor::Gamma, &|i| (2 * i + 2) * pw(p, t) - 2),
        (Flavor::Sym, Flavor::Lambda) if p == 2 => FreeAlgebraSpec::single(Factor::new(
            Flavor::Gamma,
            over_i(p, s, &ks, |i, k| {
                family(Flavor::Gamma, (2 * i + 1) * pw(p, k + t) - 1, p, k + ts, m)
            }),
        )),
        (Flavor::Lambda, Flavor::Gamma) if p == 2 => FreeAlgebraSpec::single(Factor::new(
            Flavor::Gamma,
            over_i(p, s, &ks, |i, k| {
                let d = (2 * i + 2) * pw(p, k + t) - pw(p, k) - 1;
                family(Flavor::Gamma, d, p, k + ts, m)
            }),
        )),
        (Flavor::Sym, Flavor::Gamma) if p == 2 => FreeAlgebraSpec::single(Factor::new(
            Flavor::Gamma,
            over_i(p, s, &kls, |i, (k, l)| {
                let d = (2 * i + 2) * pw(p, k + l + t) - pw(p, k) - 1;
                family(Flavor::Gamma, d, p, k + l + ts, m)
            }),
        )),
        (Flavor::Sym, Flavor::Lambda) => {
            let lam = over_i(p, s, &ks, |i, k| {
                family(Flavor::Lambda, (2 * i + 1) * pw(p, k + t) - 1, p, k + ts, m)
            });
            let gam = over_i(p, s, &ks, |i, k| {
                family(Flavor::Gamma, (2 * i + 1) * pw(p, k + 1 + t) - 2, p, k + 1 + ts, m)
            });
            FreeAlgebraSpec::single(Factor::new(Flavor::Lambda, lam))
                .then(1, Factor::new(Flavor::Gamma, gam).twisted())
        }
        (Flavor::Lambda, Flavor::Gamma) => {
            let lam = over_i(p, s, &ks, |i, k| {
                let d = (2 * i + 2) * pw(p, k + t) - pw(p, k) - 1;
                family(Flavor::Lambda, d, p, k + ts, m)
            });
            let gam = over_i(p, s, &ks, |i, k| {
                let d = (2 * i + 2) * pw(p, k + 1 + t) - pw(p, k + 1) - 2;
                family(Flavor::Gamma, d, p, k + 1 + ts, m)
            });
            FreeAlgebraSpec::single(Factor::new(Flavor::Lambda, lam))
                .then(1, Factor::new(Flavor::Gamma, gam).twisted())
        }
        (Flavor::Sym, Flavor::Gamma) => {
            let first = over_i(p, s, &ks, |i, k| {
                family(Flavor::Gamma, (2 * i + 2) * pw(p, k + t) - 2, p, k + ts, m)
            });
            let middle = over_i(p, s, &kls, |i, (k, l)| {
                let d = (2 * i + 2) * pw(p, k + l + 1 + t) - 2 * pw(p, k) - 1;
                family(Flavor::Lambda, d, p, k + l + 1 + ts, m)
            });
            let last = over_i(p, s, &kls, |i, (k, l)| {
                let d = (2 * i + 2) * pw(p, k + l + 2 + t) - 2 * pw(p, k + 1) - 2;
                family(Flavor::Gamma, d, p, k + l + 2 + ts, m)
            });
            FreeAlgebraSpec::single(Factor::new(Flavor::Gamma, first))
                .then(0, Factor::new(Flavor::Lambda, middle))
                .then(0, Factor::new(Flavor::Gamma, last))
        }
    };
    Ok(spec.truncated(max_weight))
}

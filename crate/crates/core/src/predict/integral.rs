use crate::algebra::{slice_dims, Flavor};
use crate::bidegree::Bidegree;
use crate::error::{Error, Result};
use crate::homology::{kunneth_truncated, AbelianGroup, HomologyGroup};
use crate::koszul::{build_x0, koszul_kernels_dims, pair_generators, predicted_bar_homology_over_z};
use crate::ring::{primes_up_to, Ring};

/// `E(S, Y)` over `Z` on `Z^m` up to `max_weight`, as an additive table keyed
/// by bidegree with cohomological degree `i` stored as `-i`.
///
/// For `Y = Λ` the torsion comes from the Koszul kernels over each `F_p` on
/// the height-3 pair generators, tensored with `Λ(Z^m)`; for `Y = Γ` from the
/// p-primary parts of the height-4 complexes `X_p`, tensored with `Γ(Z^m)`.
/// Both are computed in bar degrees and regraded by `3` and `4`.
pub fn ext_integral_predict(y: Flavor, m: u32, max_weight: u32) -> Result<HomologyGroup> {
    match y {
        Flavor::Lambda => {
            let x0 = build_x0(3, m)?;
            let mut h = HomologyGroup::new(Ring::Integers);
            for w in 0..=max_weight {
                for (deg, k) in slice_dims(&x0, w) {
                    h.add(Bidegree::new(deg, w), &AbelianGroup::free(k as u64));
                }
            }
            for p in primes_up_to(u64::from(max_weight)) {
                let gens: Vec<(i64, u32, u32)> = pair_generators(p, 3, max_weight)
                    .into_iter()
                    .map(|(d, w)| (d, w, m))
                    .collect();
                let mut kk = HomologyGroup::unit(Ring::Integers);
                for (b, dim) in koszul_kernels_dims(&gens, p, max_weight)? {
                    if b != Bidegree::ZERO {
                        kk.add(b, &AbelianGroup::from_cyclic(0, vec![p; dim as usize]));
                    }
                }
                h = kunneth_truncated(&h, &kk, max_weight);
            }
            Ok(h.regraded(3))
        }
        Flavor::Gamma => Ok(predicted_bar_homology_over_z(2, m, max_weight)?.regraded(4)),
        Flavor::Sym => Err(Error::Unsupported("integral prediction of E(S, S)".into())),
    }
}

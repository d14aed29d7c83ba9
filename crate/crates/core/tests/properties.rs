mod common;

use proptest::prelude::*;

use common::{module_pool, small_algebras};
use singcat_core::fixtures::kx_spec;
use singcat_core::homology::{stable_hom, syzygy, SyzygyCache};
use singcat_core::linalg::{Field, Scalar};
use singcat_core::rep::{hom, projective_cover, HomSpace, RepMorphism, Representation};
use singcat_core::stab::{skeleton, stab_hom, StableObject};

fn f5() -> Field {
    Field::prime(5).unwrap()
}

fn pick(h: &HomSpace, seed: &[i64]) -> RepMorphism {
    let f = h.src.field();
    let coefs: Vec<Scalar> = (0..h.dim()).map(|i| f.from_i64(seed[i % seed.len()] * (i as i64 + 1))).collect();
    h.combine(&coefs)
}

/// Algebra index and four module indices into its pool.
fn setup() -> impl Strategy<Value = (usize, [usize; 4], Vec<i64>)> {
    (0..9usize, prop::array::uniform4(0..64usize), prop::collection::vec(-4i64..5, 1..6))
}

fn modules(alg_ix: usize, ix: [usize; 4]) -> Vec<Representation> {
    let (_, alg) = small_algebras(f5()).swap_remove(alg_ix);
    let pool = module_pool(&alg);
    ix.iter().map(|&i| pool[i % pool.len()].1.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composition_is_associative((a, ix, seed) in setup()) {
        let m = modules(a, ix);
        let f = pick(&hom(&m[0], &m[1]).unwrap(), &seed);
        let g = pick(&hom(&m[1], &m[2]).unwrap(), &seed[1..].iter().chain(&seed).copied().collect::<Vec<_>>());
        let h = pick(&hom(&m[2], &m[3]).unwrap(), &seed);
        prop_assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
    }

    #[test]
    fn hom_is_bilinear((a, ix, seed) in setup(), s in -4i64..5) {
        let m = modules(a, ix);
        let h01 = hom(&m[0], &m[1]).unwrap();
        let h12 = hom(&m[1], &m[2]).unwrap();
        let (f1, f2) = (pick(&h01, &seed), pick(&h01, &[s, 1]));
        let g = pick(&h12, &seed);
        let c = f5().from_i64(s);
        prop_assert_eq!(f1.add(&f2).then(&g), f1.then(&g).add(&f2.then(&g)));
        prop_assert_eq!(f1.scale(&c).then(&g), f1.then(&g).scale(&c));
        let g2 = pick(&h12, &[s]);
        prop_assert_eq!(f1.then(&g.add(&g2)), f1.then(&g).add(&f1.then(&g2)));
        if h01.dim() > 0 {
            let coefs = h01.coords(&f1).unwrap();
            prop_assert_eq!(h01.combine(&coefs), f1);
        }
    }

    #[test]
    fn maps_through_projectives_are_stably_zero((a, ix, seed) in setup()) {
        let m = modules(a, ix);
        let cover = projective_cover(&m[1]).epi;
        let g = pick(&hom(&m[0], &cover.src).unwrap(), &seed);
        let s = stable_hom(&m[0], &m[1]).unwrap();
        prop_assert!(s.is_stably_zero(&g.then(&cover)));
        prop_assert!(s.dim <= s.hom.dim());
    }

    /// `(X, n) ≅ (ΩX, n - 1)` on self-injective algebras, where every orbit is periodic.
    #[test]
    fn shift_identification(n in 2usize..6, i in 1usize..6, j in 1usize..6, shift in -3i64..4, t in -3i64..4) {
        let spec = kx_spec(n, f5()).unwrap();
        let x = spec.generators[(i - 1) % n].clone();
        let y = spec.generators[(j - 1) % n].clone();
        let cache = SyzygyCache::new();
        let tgt = StableObject::new(y, t, "Y");
        let a = stab_hom(&StableObject::new(x.clone(), shift, "X"), &tgt, 24, &cache).unwrap();
        let b = stab_hom(&StableObject::new(syzygy(&x, 1), shift - 1, "ΩX"), &tgt, 24, &cache).unwrap();
        prop_assert!(a.dim().is_some());
        prop_assert_eq!(a.dim(), b.dim());
    }

    #[test]
    fn sigma_permutes_surviving_generators(n in 2usize..7) {
        let sk = skeleton(&kx_spec(n, f5()).unwrap(), 24, false).unwrap();
        let mut images: Vec<&String> = sk.sigma.values().filter(|v| *v != "0").collect();
        let mut sources: Vec<&String> = sk.sigma.iter().filter(|(_, v)| *v != "0").map(|(k, _)| k).collect();
        images.sort();
        sources.sort();
        prop_assert_eq!(images, sources);
    }
}

//! Property tests over randomized gentle algebras and strings.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use gentle_core::algebra::GentleAlgebra;
use gentle_core::ar::{ar_sequence, tau, tau_inv};
use gentle_core::homext::{ext_basis, hom_dim};
use gentle_core::invariants::{chi_naive, f_polynomial, g_vector, g_vector_homological};
use gentle_core::modules::{dim_vector, is_injective, is_projective, Module, ModuleSum};
use gentle_core::randgen::{enumerate_strings, random_gentle, random_string};
use gentle_core::rep::{ext_dim_oracle, hom_dim_oracle};
use gentle_core::strings::{
    canonical_form, compose, fac_decompositions, is_valid, sub_decompositions, StringWord,
};

fn setup(seed: u64) -> (GentleAlgebra, StdRng) {
    let mut rng = StdRng::seed_from_u64(seed);
    let alg = random_gentle(&mut rng, 6, 8);
    (alg, rng)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonical_form_idempotent_inversion_invariant(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        for _ in 0..8 {
            let w = random_string(&mut rng, &alg, 8);
            prop_assert!(is_valid(&alg, &w));
            let c = canonical_form(&alg, &w);
            prop_assert_eq!(canonical_form(&alg, &c), c.clone());
            prop_assert_eq!(canonical_form(&alg, &w.invert()), c);
        }
    }

    #[test]
    fn fac_sub_match_brute_force(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let w = random_string(&mut rng, &alg, 8);
        let l = w.letters();
        let s = l.len();
        let fac = fac_decompositions(&alg, &w);
        let sub = sub_decompositions(&alg, &w);
        if w.is_trivial() {
            prop_assert_eq!(fac.len(), 1);
            prop_assert_eq!(sub.len(), 1);
        } else {
            let mut expected_fac = 0;
            let mut expected_sub = 0;
            for i in 0..=s {
                for j in i..=s {
                    let fl = i == 0 || !l[i - 1].direct;
                    let fr = j == s || l[j].direct;
                    if fl && fr {
                        expected_fac += 1;
                    }
                    let sl = i == 0 || l[i - 1].direct;
                    let sr = j == s || !l[j].direct;
                    if sl && sr {
                        expected_sub += 1;
                    }
                }
            }
            prop_assert_eq!(fac.len(), expected_fac);
            prop_assert_eq!(sub.len(), expected_sub);
            for d in &fac {
                // sides compose back to w
                let mid_right = compose(&alg, &d.mid, &d.right).unwrap();
                let whole = compose(&alg, &d.left, &mid_right).unwrap();
                prop_assert_eq!(&whole, &w);
            }
        }
    }

    #[test]
    fn tau_round_trips(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        for _ in 0..4 {
            let w = random_string(&mut rng, &alg, 6);
            let m = Module::string(&alg, &w).unwrap();
            if !is_projective(&alg, &m) {
                let t = tau(&alg, &m);
                prop_assert!(!t.is_zero());
                prop_assert!(!is_injective(&alg, &t));
                prop_assert_eq!(tau_inv(&alg, &t), m.clone());
            } else {
                prop_assert!(tau(&alg, &m).is_zero());
            }
            if !is_injective(&alg, &m) {
                let t = tau_inv(&alg, &m);
                prop_assert_eq!(tau(&alg, &t), m.clone());
            } else {
                prop_assert!(tau_inv(&alg, &m).is_zero());
            }
        }
    }

    #[test]
    fn ar_sequences_are_additive(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let w = random_string(&mut rng, &alg, 6);
        let m = Module::string(&alg, &w).unwrap();
        if !is_injective(&alg, &m) {
            let seq = ar_sequence(&alg, &m).unwrap();
            let dl = dim_vector(&alg, &ModuleSum::from_module(seq.left.clone()));
            let dm = dim_vector(&alg, &seq.middle);
            let dr = dim_vector(&alg, &ModuleSum::from_module(seq.right.clone()));
            for i in 0..alg.vertex_count() {
                prop_assert_eq!(dl[i] + dr[i], dm[i]);
            }
            prop_assert_eq!(seq.right, tau_inv(&alg, &m));
        }
    }

    #[test]
    fn hom_matches_oracle(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let x = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        let y = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        prop_assert_eq!(hom_dim(&alg, &x, &y), hom_dim_oracle(&alg, &x, &y));
    }

    #[test]
    fn ext_basis_matches_oracle(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let s = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        let x = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        let basis = ext_basis(&alg, &s, &x).unwrap();
        prop_assert_eq!(basis.len(), ext_dim_oracle(&alg, &s, &x));
    }

    #[test]
    fn g_vector_routes_agree(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let m = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        prop_assert_eq!(g_vector(&alg, &m), g_vector_homological(&alg, &m));
    }

    #[test]
    fn f_polynomial_matches_naive_chi(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        let m = ModuleSum::from_module(Module::string(&alg, &random_string(&mut rng, &alg, 6)).unwrap());
        let f = f_polynomial(&alg, &m);
        // check a handful of exponents including absent ones
        let dims = dim_vector(&alg, &m);
        for (e, c) in f.terms() {
            prop_assert_eq!(chi_naive(&alg, &m, e), *c);
        }
        prop_assert_eq!(f.coeff(&dims), 1);
        prop_assert_eq!(f.coeff(&vec![0; alg.vertex_count()]), 1);
    }

    #[test]
    fn band_powers_are_strings(seed in 0u64..10_000) {
        let (alg, mut rng) = setup(seed);
        for _ in 0..6 {
            let w = random_string(&mut rng, &alg, 6);
            if gentle_core::strings::is_band(&alg, &w) {
                let sq = compose(&alg, &w, &w).unwrap();
                prop_assert!(is_valid(&alg, &sq));
            }
        }
    }
}

/// Exhaustive small check: every string of length <= 4 over the octagon,
/// all pairs: hom and ext against the oracles.
#[test]
fn exhaustive_small_octagon_cross_check() {
    let alg = gentle_core::fixtures::octagon();
    let words = enumerate_strings(&alg, 3);
    let mods: Vec<ModuleSum> = words
        .iter()
        .map(|w| ModuleSum::from_module(Module::string(&alg, w).unwrap()))
        .collect();
    for x in mods.iter().step_by(2) {
        for y in mods.iter().step_by(2) {
            assert_eq!(hom_dim(&alg, x, y), hom_dim_oracle(&alg, x, y));
            assert_eq!(
                ext_basis(&alg, x, y).unwrap().len(),
                ext_dim_oracle(&alg, x, y)
            );
        }
    }
}

/// Socle containment: the simple embeds in its injective.
#[test]
fn simple_embeds_in_injective() {
    for alg in [
        gentle_core::fixtures::octagon(),
        gentle_core::fixtures::algebra_i(),
        gentle_core::fixtures::band_algebra(),
    ] {
        for i in 0..alg.vertex_count() {
            let s = ModuleSum::from_module(Module::simple(i));
            let inj = ModuleSum::from_module(Module::String(gentle_core::modules::injective(&alg, i)));
            assert!(hom_dim(&alg, &s, &inj) >= 1);
        }
    }
}

/// The zero word composes to zero with everything.
#[test]
fn zero_is_absorbing() {
    let alg = gentle_core::fixtures::octagon();
    let w = gentle_core::strings::parse_word(&alg, "b d").unwrap();
    assert_eq!(compose(&alg, &StringWord::Zero, &w), Some(StringWord::Zero));
    assert_eq!(compose(&alg, &w, &StringWord::Zero), Some(StringWord::Zero));
}

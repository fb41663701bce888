//! Properties that span several modules.

use koszulk_core::bar::{build_bar_complex, load_presentation};
use koszulk_core::exact::series_of_tensor_algebra;
use koszulk_core::hopf::{antipode, hoffman_exp, pair, product_choice, quasi_shuffle, shuffle};
use koszulk_core::lie::{free_lie_dimensions, lyndon_words, pbw_check, GradedGeneratorSet};
use koszulk_core::zeta::mzv_dimensions;
use koszulk_core::{Composition, FormalSum};
use proptest::prelude::*;

fn word(max_len: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..=3, 0..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exp_carries_shuffle_to_stuffle(u in word(3), v in word(3)) {
        let lhs = hoffman_exp(&shuffle(&u, &v));
        let rhs = hoffman_exp(&FormalSum::word(u)).map_bilinear(&hoffman_exp(&FormalSum::word(v)), quasi_shuffle);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nsymm_and_qsymm_antipodes_are_adjoint(z in word(4), m in word(4)) {
        let concat = product_choice("concat").unwrap();
        let stuffle = product_choice("stuffle").unwrap();
        let z = FormalSum::word(z);
        let m = FormalSum::word(m);
        prop_assert_eq!(pair(&antipode(&z, concat), &m), pair(&z, &antipode(&m, stuffle)));
    }

    #[test]
    fn commutative_antipodes_are_involutions(w in word(4)) {
        for name in ["shuffle", "stuffle"] {
            let h = product_choice(name).unwrap();
            let x = FormalSum::word(w.clone());
            prop_assert_eq!(antipode(&antipode(&x, h), h), x);
        }
    }
}

#[test]
fn bar_homology_of_a_preset_feeds_the_witt_formula() {
    // Tor of the square-zero algebra on 4k+1 is tensor on 4k+2; its free Lie
    // algebra then has the PBW series of that tensor algebra.
    let a = load_presentation("KS0-rational", 18).unwrap();
    let tor = build_bar_complex(&a, 18)
        .unwrap()
        .homology_dimensions()
        .series;
    assert_eq!(tor, series_of_tensor_algebra(&[6, 10, 14, 18], 18).unwrap());

    let gens = GradedGeneratorSet::from_degrees(&[6, 10, 14, 18], 18).unwrap();
    assert!(pbw_check(&gens).unwrap().passed());
    assert_eq!(gens.tensor_series().unwrap(), tor);
}

#[test]
fn mzv_dimensions_from_lyndon_words_on_odd_letters() {
    // d_n counts words in f_3, f_5, ... tensored with Q[f_2]; count Lyndon
    // words directly and rebuild the series.
    let cap = 16;
    let odd: Vec<u32> = (3..=cap as u32).step_by(2).collect();
    let words = lyndon_words(&odd, cap as u64);
    let mut lie = vec![0u64; cap + 1];
    for w in &words {
        lie[w.weight() as usize] += 1;
    }
    let gens = GradedGeneratorSet::parse("odd>=3", cap as u32).unwrap();
    let witt = free_lie_dimensions(&gens).unwrap();
    for (n, &l) in lie.iter().enumerate().skip(1) {
        assert_eq!(witt.get(n as i64).unwrap(), l, "weight {n}");
    }

    let tensor = gens.tensor_series().unwrap();
    let d = mzv_dimensions(cap).unwrap();
    for n in 0..=cap {
        let expected: u64 = (0..=n / 2)
            .map(|j| tensor.get((n - 2 * j) as i64).unwrap())
            .sum();
        assert_eq!(d[n], expected, "d_{n}");
    }
}

use colored_paths::families::{
    closed_form_exact, closed_form_series, recurrence_series, small_schroder_series, small_schroder_series_colored,
    Family, FamilyError, FamilySpec,
};
use colored_paths::BigUint;
use num_traits::{One, Pow};
use proptest::prelude::*;

fn rec(family: Family, m: u32, n: u32, order: usize) -> Vec<BigUint> {
    recurrence_series(&FamilySpec::new(family, m, n), order).coefficients
}

fn closed(family: Family, m: u32, n: u32, order: usize) -> Vec<BigUint> {
    closed_form_series(&FamilySpec::new(family, m, n), order).unwrap().coefficients
}

fn nums(v: &[u64]) -> Vec<BigUint> {
    v.iter().map(|&x| BigUint::from(x)).collect()
}

#[test]
fn closed_form_matches_recurrence_on_grid() {
    for family in Family::ALL {
        for m in 1..=3 {
            for n in 1..=3 {
                let n = if family == Family::SchroderSmall { 1 } else { n };
                assert_eq!(closed(family, m, n, 12), rec(family, m, n, 12), "{family} m={m} n={n}");
            }
        }
    }
}

#[test]
fn catalan_color_scaling() {
    let base = rec(Family::Catalan, 1, 1, 12);
    for m in [1u32, 2, 3, 5] {
        let colored = rec(Family::Catalan, m, 1, 12);
        for (j, (c, b)) in colored.iter().zip(&base).enumerate() {
            assert_eq!(*c, Pow::pow(BigUint::from(m), j as u32) * b, "m={m} j={j}");
        }
    }
}

#[test]
fn large_is_twice_small() {
    let large = rec(Family::SchroderLarge, 1, 1, 12);
    let small = rec(Family::SchroderSmall, 1, 1, 12);
    assert!(large[0].is_one() && small[0].is_one());
    for j in 1..=12 {
        assert_eq!(large[j], &small[j] * 2u32, "j={j}");
    }
}

#[test]
fn motzkin_two_level_colors_is_shifted_catalan() {
    let motzkin = closed(Family::Motzkin, 1, 2, 11);
    let catalan = closed(Family::Catalan, 1, 1, 12);
    assert_eq!(motzkin[..], catalan[1..]);
}

#[test]
fn uncolored_baselines() {
    assert_eq!(rec(Family::Catalan, 1, 1, 8), nums(&[1, 1, 2, 5, 14, 42, 132, 429, 1430]));
    assert_eq!(rec(Family::SchroderLarge, 1, 1, 8), nums(&[1, 2, 6, 22, 90, 394, 1806, 8558, 41586]));
    assert_eq!(rec(Family::SchroderSmall, 1, 1, 8), nums(&[1, 1, 3, 11, 45, 197, 903, 4279, 20793]));
    assert_eq!(rec(Family::Motzkin, 1, 1, 8), nums(&[1, 1, 2, 4, 9, 21, 51, 127, 323]));
}

#[test]
fn single_color_parameter_forms() {
    // colored down steps only, and colored level steps only; values from brute-force enumeration
    assert_eq!(closed(Family::SchroderLarge, 3, 1, 4), nums(&[1, 4, 28, 244, 2380]));
    assert_eq!(closed(Family::SchroderLarge, 1, 3, 4), nums(&[1, 4, 20, 116, 740]));
    assert_eq!(closed(Family::Motzkin, 3, 1, 5), nums(&[1, 1, 4, 10, 37, 121]));
    assert_eq!(closed(Family::Motzkin, 1, 3, 4), nums(&[1, 3, 10, 36, 137]));
}

#[test]
fn small_schroder_three_routes_agree() {
    for m in 1..=3 {
        let linear = small_schroder_series(m, 10).coefficients;
        assert_eq!(linear, closed(Family::SchroderSmall, m, 1, 10), "m={m}");
        assert_eq!(linear, rec(Family::SchroderSmall, m, 1, 10), "m={m}");
    }
    for n in [0, 2, 3] {
        assert_eq!(
            small_schroder_series_colored(2, n, 10).coefficients,
            rec(Family::SchroderSmall, 2, n, 10),
            "n={n}"
        );
    }
}

#[test]
fn zero_colors_use_the_recurrence() {
    assert_eq!(rec(Family::Catalan, 0, 1, 5), nums(&[1, 0, 0, 0, 0, 0]));
    assert_eq!(rec(Family::SchroderSmall, 0, 1, 5), nums(&[1, 0, 0, 0, 0, 0]));
    assert_eq!(rec(Family::SchroderLarge, 0, 1, 5), nums(&[1; 6]));
    assert_eq!(rec(Family::Motzkin, 0, 1, 5), nums(&[1; 6]));
    for family in Family::ALL {
        assert!(matches!(
            closed_form_series(&FamilySpec::new(family, 0, 1), 5),
            Err(FamilyError::ClosedFormAtZeroColors { .. })
        ));
    }
}

#[test]
fn large_orders_stay_integral() {
    let spec = FamilySpec::new(Family::Motzkin, 4, 7);
    let exact = closed_form_exact(&spec, 80).unwrap();
    assert!(exact.coeffs().iter().all(|c| c.is_integer()));
    assert_eq!(closed_form_series(&spec, 80).unwrap().coefficients, recurrence_series(&spec, 80).coefficients);
}

proptest! {
    #[test]
    fn closed_form_agrees_for_random_colors(family_ix in 0usize..4, m in 1u32..8, n in 0u32..8, order in 0usize..16) {
        let family = Family::ALL[family_ix];
        let n = if family == Family::SchroderSmall { 1 } else { n };
        let spec = FamilySpec::new(family, m, n);
        let cf = closed_form_series(&spec, order).unwrap();
        let rc = recurrence_series(&spec, order);
        prop_assert_eq!(cf.coefficients.len(), order + 1);
        prop_assert!(cf.coefficients[0].is_one());
        prop_assert_eq!(cf.coefficients, rc.coefficients);
    }
}

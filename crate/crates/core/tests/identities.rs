use khalg_core::series::{
    bosonic_full, fermionic_limit, fermionic_recursive, krr_side, rr_side, KrrSide, RrSide,
};
use khalg_core::verify::{
    compare_series, presentation_hilbert, presentation_max_mu_degree, state_sum,
    state_sum_sequences,
};
use khalg_core::{Exponent, MultiSeries};
use num_bigint::BigInt;

#[test]
fn rogers_ramanujan_sides() {
    let l = rr_side(RrSide::Left, 60);
    let r = rr_side(RrSide::Right, 60);
    let c = compare_series("rr", &l, &r, 60, None);
    assert!(c.passed(), "{:?}", c.witness);
}

#[test]
fn krr_sides() {
    let a = krr_side(KrrSide::A, 60);
    let b = krr_side(KrrSide::B, 60);
    let c = compare_series("krr", &a, &b, 60, None);
    assert!(c.passed(), "{:?}", c.witness);
}

#[test]
fn krr_specializes_to_fermionic() {
    // a² ↦ q⁴
    let a = krr_side(KrrSide::A, 40).specialize_a(2, 0);
    let c = compare_series("krr_a", &a, &fermionic_limit(40), 40, None);
    assert!(c.passed(), "{:?}", c.witness);
}

#[test]
fn fermionic_at_t_minus_one() {
    let k = fermionic_limit(50).eval_t_minus1().unwrap();
    let want = MultiSeries::from_terms(
        (0..=25).map(|k| (Exponent::qt(2 * k, 0), BigInt::from(1))),
        50,
    );
    assert_eq!(k, want);
}

#[test]
fn state_sum_recursion_presentation() {
    for n in 1..=12 {
        let c = n * (n + 3);
        let s = state_sum(n, c).unwrap();
        assert_eq!(
            s.coefficient_sum(),
            state_sum_sequences(n).unwrap().len().into(),
            "n={n}"
        );
        assert_eq!(s, fermionic_recursive(n, c).unwrap(), "n={n}");
        assert_eq!(s, presentation_hilbert(n, c).unwrap(), "n={n}");
        assert_eq!(
            presentation_max_mu_degree(n).unwrap(),
            ((n + 1) / 3) as usize,
            "n={n}"
        );
    }
}

#[test]
fn large_n_stable_range() {
    let f = fermionic_recursive(12, 24).unwrap();
    let c = compare_series("stable", &f, &bosonic_full(12, 24).unwrap(), 24, None);
    assert!(c.passed(), "{:?}", c.witness);
    let c = compare_series("limit", &f, &fermionic_limit(24), 24, None);
    assert!(c.passed(), "{:?}", c.witness);
}

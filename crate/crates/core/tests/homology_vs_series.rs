use khalg_core::dga::lower_quotient_dim;
use khalg_core::homology::homology_table;
use khalg_core::series::{
    appendix_series, bosonic_full, bosonic_lower, bosonic_reduced, z2_closed_form, Variant,
};
use khalg_core::verify::compare_series;
use khalg_core::{Bidegree, DifferentialSpec, Exponent, GeneratorSpec, MultiSeries, Ring};
use num_bigint::BigInt;

fn table_series(spec: GeneratorSpec, ring: Ring, q_max: u32) -> MultiSeries {
    homology_table(&spec, &DifferentialSpec::STANDARD, ring, q_max)
        .unwrap()
        .to_series()
}

#[test]
fn small_n_rational() {
    for n in 2..=3 {
        let h = table_series(GeneratorSpec::unreduced(n), Ring::Rational, 20);
        let r = compare_series("pn", &h, &bosonic_full(n, 20).unwrap(), 20, None);
        assert!(r.passed(), "n={n}: {:?}", r.witness);
    }
}

#[test]
fn n4_rational_matches_both_forms() {
    let q = 20;
    let h = table_series(GeneratorSpec::unreduced(4), Ring::Rational, q);
    for s in [
        bosonic_full(4, q).unwrap(),
        appendix_series(4, Variant::Unreduced, q).unwrap(),
    ] {
        let r = compare_series("n4", &h, &s, q, None);
        assert!(r.passed(), "{:?}", r.witness);
    }
}

#[test]
fn mod_two_closed_form() {
    for n in 2..=4 {
        let h = table_series(GeneratorSpec::unreduced(n), Ring::Prime(2), 20);
        let r = compare_series("z2", &h, &z2_closed_form(n, 20).unwrap(), 20, None);
        assert!(r.passed(), "n={n}: {:?}", r.witness);
    }
}

#[test]
fn mod_two_differs_from_rational_at_n3() {
    // the first 2-torsion appears at n = 3, so the two tables must differ there
    let q = 16;
    let a = table_series(GeneratorSpec::unreduced(3), Ring::Rational, q);
    let b = table_series(GeneratorSpec::unreduced(3), Ring::Prime(2), q);
    assert_ne!(a, b);
}

#[test]
fn reduced_small() {
    for n in 3..=4 {
        let q = 20;
        let h = table_series(GeneratorSpec::reduced(n), Ring::Rational, q);
        for s in [
            bosonic_reduced(n, q).unwrap(),
            appendix_series(n, Variant::Reduced, q).unwrap(),
        ] {
            let r = compare_series("red", &h, &s, q, None);
            assert!(r.passed(), "n={n}: {:?}", r.witness);
        }
    }
}

#[test]
fn lower_quotient_dims() {
    for n in 1..=5 {
        let q_max = 20;
        let mut terms = Vec::new();
        for q in 0..=q_max {
            for t in 0..=q {
                let d = lower_quotient_dim(n, Bidegree::new(q, t), Ring::Rational).unwrap();
                if d > 0 {
                    terms.push((Exponent::qt(q, t), BigInt::from(d)));
                }
            }
        }
        let dims = MultiSeries::from_terms(terms, q_max);
        let r = compare_series("ln", &dims, &bosonic_lower(n, q_max).unwrap(), q_max, None);
        assert!(r.passed(), "n={n}: {:?}", r.witness);
    }
}

#[test]
fn integer_table_reports_torsion() {
    let spec = GeneratorSpec::unreduced(3);
    let t = homology_table(&spec, &DifferentialSpec::STANDARD, Ring::Integer, 14).unwrap();
    let twos: Vec<_> = t
        .entries
        .iter()
        .filter(|(_, e)| e.torsion.iter().any(|d| d % 2u32 == BigInt::from(0)))
        .collect();
    assert!(!twos.is_empty());
    let q = table_series(spec, Ring::Rational, 14);
    assert_eq!(t.to_series(), q);
}

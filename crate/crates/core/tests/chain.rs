use khalg_core::homology::homology_table;
use khalg_core::verify::{
    anticommutation_check, euler_check, euler_closed_form, euler_product, reduction_check,
    square_zero_check,
};
use khalg_core::{DifferentialSpec, GeneratorSpec, Ring};

#[test]
fn differentials_square_to_zero() {
    for n in 1..=6 {
        let spec = GeneratorSpec::unreduced(n);
        for d in [
            DifferentialSpec::STANDARD,
            DifferentialSpec::generic(42),
            DifferentialSpec::LEE,
        ] {
            let r = square_zero_check(&spec, &d, 24);
            assert!(r.passed(), "n={n} {}: {:?}", d.kind, r.witness);
        }
        for d in [DifferentialSpec::STANDARD, DifferentialSpec::generic(7)] {
            let r = anticommutation_check(&spec, &d, 24);
            assert!(r.passed(), "n={n} {}: {:?}", d.kind, r.witness);
        }
    }
}

#[test]
fn reduced_substitution() {
    for n in 3..=7 {
        let r = reduction_check(n, 22);
        assert!(r.passed(), "n={n}: {:?}", r.witness);
    }
}

#[test]
fn telescoping_product() {
    for n in 1..=8 {
        for spec in [GeneratorSpec::unreduced(n), GeneratorSpec::reduced(n + 1)] {
            assert_eq!(
                euler_product(&spec, 60),
                euler_closed_form(&spec, 60),
                "{spec:?}"
            );
        }
    }
}

#[test]
fn euler_characteristics() {
    for n in 1..=6 {
        for ring in [Ring::Rational, Ring::Prime(2)] {
            let t = homology_table(
                &GeneratorSpec::unreduced(n),
                &DifferentialSpec::STANDARD,
                ring,
                24,
            )
            .unwrap();
            let r = euler_check(&t).unwrap();
            assert!(r.passed(), "n={n} {ring}: {:?}", r.witness);
        }
    }
    let lee = homology_table(
        &GeneratorSpec::unreduced(3),
        &DifferentialSpec::LEE,
        Ring::Rational,
        10,
    )
    .unwrap();
    assert!(euler_check(&lee).is_err());
}

use khalg_core::dga::apply_differential;
use khalg_core::homology::torsion_at;
use khalg_core::verify::{
    generic_contrast, is_boundary, lee_identity_check, mu_cycle, potential_identity_check,
    relation_element, relation_range, torsion_witness_check, verify_relation_boundary,
    RelationKind,
};
use khalg_core::{Bidegree, DifferentialSpec, GeneratorSpec, Ring};
use num_bigint::BigInt;

#[test]
fn mu_cycles_are_cycles() {
    for n in 2..=8 {
        let spec = GeneratorSpec::unreduced(n);
        for s in 0..=n as i64 - 2 {
            let mu = mu_cycle(&spec, s).unwrap();
            let d = apply_differential(&spec, &DifferentialSpec::STANDARD, &mu).unwrap();
            assert!(d.is_zero(), "n={n} s={s}: {d}");
        }
    }
}

#[test]
fn mu_cycles_are_not_boundaries() {
    for n in 2..=7 {
        let spec = GeneratorSpec::unreduced(n);
        for s in 0..=n as i64 - 2 {
            let mu = mu_cycle(&spec, s).unwrap().change_ring(Ring::Rational);
            let b = is_boundary(&spec, &DifferentialSpec::STANDARD, &mu).unwrap();
            assert!(b.is_none(), "n={n} s={s}");
        }
    }
}

#[test]
fn relations_are_boundaries() {
    for n in 2..=8 {
        let spec = GeneratorSpec::unreduced(n);
        for kind in RelationKind::ALL {
            for j in relation_range(kind, n) {
                let r = verify_relation_boundary(kind, &spec, j as i64).unwrap();
                assert!(r.passed(), "{kind} n={n} j={j}: {:?}", r.witness);
                // the closed form must have held, not the solver fallback
                assert_ne!(
                    r.params.get("sign").map(String::as_str),
                    Some("solver"),
                    "{kind} n={n} j={j}"
                );
            }
        }
    }
}

#[test]
fn top_relation_coefficients_are_not_boundaries() {
    let n = 5;
    let spec = GeneratorSpec::unreduced(n);
    for kind in [RelationKind::XMu, RelationKind::MuMudot] {
        let j = relation_range(kind, n).end as i64;
        let rel = relation_element(kind, &spec, j)
            .unwrap()
            .change_ring(Ring::Rational);
        if rel.is_zero() {
            continue;
        }
        let b = is_boundary(&spec, &DifferentialSpec::STANDARD, &rel).unwrap();
        assert!(b.is_none(), "{kind} j={j}");
    }
}

#[test]
fn relation_sign_convention() {
    let spec = GeneratorSpec::unreduced(4);
    let xx = verify_relation_boundary(RelationKind::Xx, &spec, 2).unwrap();
    assert_eq!(xx.params["sign"], "+");
    let xmu = verify_relation_boundary(RelationKind::XMu, &spec, 1).unwrap();
    assert_eq!(xmu.params["sign"], "-");
}

#[test]
fn lee_identities() {
    for n in 2..=8 {
        let spec = GeneratorSpec::unreduced(n);
        for s in 0..=n as i64 - 2 {
            let r = lee_identity_check(&spec, s, 10).unwrap();
            assert!(r.passed(), "n={n} s={s}: {:?}", r.witness);
        }
    }
}

#[test]
fn potential_identity() {
    for n in 1..=8 {
        let r = potential_identity_check(n).unwrap();
        assert!(r.passed(), "n={n}: {:?}", r.witness);
    }
}

#[test]
fn torsion_five() {
    let r = torsion_witness_check(5).unwrap();
    assert!(r.passed(), "{:?}", r.witness);
    let t = torsion_at(&GeneratorSpec::unreduced(5), Bidegree::new(16, 10)).unwrap();
    assert!(t.iter().any(|d| d % 5u32 == BigInt::from(0)), "{t:?}");
    assert!(torsion_witness_check(4).is_err());
    assert!(torsion_witness_check(3).is_err());
}

#[test]
fn generic_contrast_seed_42() {
    let spec = GeneratorSpec::unreduced(7);
    let r = generic_contrast(&spec, Bidegree::new(18, 13), 42, (6, 7), (1, 0)).unwrap();
    assert!(r.passed(), "{:?}", r.witness);
}

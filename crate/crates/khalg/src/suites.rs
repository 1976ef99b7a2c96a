//! Batches of checks behind `khalg verify`.

use std::fmt;
use std::str::FromStr;

use khalg_core::dga::{apply_differential, lower_quotient_dim};
use khalg_core::homology::{homology_table, torsion_at};
use khalg_core::series::{
    appendix_series, bosonic_full, bosonic_lower, bosonic_reduced, fermionic_limit,
    fermionic_recursive, krr_side, rr_side, z2_closed_form, KrrSide, RrSide, Variant,
};
use khalg_core::verify::{
    anticommutation_check, compare_series, euler_check, euler_closed_form, euler_product,
    generic_contrast, is_boundary, lee_identity_check, mu_cycle, potential_identity_check,
    presentation_hilbert, presentation_max_mu_degree, reduction_check, relation_range,
    square_zero_check, state_sum, state_sum_sequences, torsion_witness_check,
    verify_relation_boundary, CheckReport, RelationKind,
};
use khalg_core::{Bidegree, DifferentialSpec, Error, Exponent, GeneratorSpec, MultiSeries, Ring};
use num_bigint::BigInt;

use crate::fixtures::{self, T79_WINDOW};

#[derive(Debug)]
pub enum SuiteError {
    Usage(String),
    Core(Error),
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::Usage(m) => f.write_str(m),
            SuiteError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SuiteError {}

impl From<Error> for SuiteError {
    fn from(e: Error) -> Self {
        SuiteError::Core(e)
    }
}

pub type Reports = Result<Vec<CheckReport>, SuiteError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Mu,
    Relations,
    Lee,
    Potential,
    Torsion(u32),
    Identities,
    Reduction,
    GenericContrast,
    Chain,
    Euler,
    Homology,
    Fixtures,
    All,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "mu" => Suite::Mu,
            "relations" => Suite::Relations,
            "lee" => Suite::Lee,
            "potential" => Suite::Potential,
            "identities" => Suite::Identities,
            "reduction" => Suite::Reduction,
            "generic-contrast" => Suite::GenericContrast,
            "chain" => Suite::Chain,
            "euler" => Suite::Euler,
            "homology" => Suite::Homology,
            "fixtures" => Suite::Fixtures,
            "all" => Suite::All,
            _ => match s.strip_prefix("torsion:").map(str::parse) {
                Some(Ok(p)) => Suite::Torsion(p),
                _ => return Err(format!("unknown suite `{s}`")),
            },
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Restrict to one `n`; each suite has its own default range.
    pub n: Option<u32>,
    pub q_max: Option<u32>,
    pub seed: u64,
    pub slow: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            n: None,
            q_max: None,
            seed: 42,
            slow: false,
        }
    }
}

impl Options {
    fn ns(&self, default: std::ops::RangeInclusive<u32>) -> Vec<u32> {
        match self.n {
            Some(n) => vec![n],
            None => default.collect(),
        }
    }

    fn q(&self, default: u32) -> u32 {
        self.q_max.unwrap_or(default)
    }
}

pub fn run(suite: Suite, opts: &Options) -> Reports {
    match suite {
        Suite::Mu => mu_suite(opts),
        Suite::Relations => relations_suite(opts),
        Suite::Lee => lee_suite(opts),
        Suite::Potential => potential_suite(opts),
        Suite::Torsion(p) => torsion_suite(p, opts),
        Suite::Identities => identities_suite(opts),
        Suite::Reduction => reduction_suite(opts),
        Suite::GenericContrast => generic_suite(opts),
        Suite::Chain => chain_suite(opts),
        Suite::Euler => euler_suite(opts),
        Suite::Homology => homology_suite(opts),
        Suite::Fixtures => fixtures_suite(opts),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Chain,
                Suite::Homology,
                Suite::Torsion(5),
                Suite::GenericContrast,
                Suite::Mu,
                Suite::Relations,
                Suite::Lee,
                Suite::Identities,
                Suite::Reduction,
                Suite::Potential,
                Suite::Euler,
                Suite::Fixtures,
            ] {
                out.extend(run(s, opts)?);
            }
            if opts.slow {
                out.extend(run(Suite::Torsion(7), opts)?);
            }
            Ok(out)
        }
    }
}

/// `d₂(μ_s) = 0` and `μ_s` is not a boundary over `ℚ`.
pub fn mu_suite(opts: &Options) -> Reports {
    let mut out = Vec::new();
    for n in opts.ns(2..=8) {
        let spec = GeneratorSpec::unreduced(n);
        for s in 0..=n as i64 - 2 {
            let mu = mu_cycle(&spec, s)?;
            let d = apply_differential(&spec, &DifferentialSpec::STANDARD, &mu)?;
            let report = CheckReport::new("mu_cycle").param("n", n).param("s", s);
            if !d.is_zero() {
                out.push(report.fail(format!("d2(mu_{s}) = {d}")));
                continue;
            }
            let pre = is_boundary(
                &spec,
                &DifferentialSpec::STANDARD,
                &mu.change_ring(Ring::Rational),
            )?;
            out.push(match pre {
                Some(p) => report.fail(format!("mu_{s} = d2({p})")),
                None => report.pass_with(format!("mu_{s} = {mu}")),
            });
        }
    }
    Ok(out)
}

pub fn relations_suite(opts: &Options) -> Reports {
    let mut out = Vec::new();
    for n in opts.ns(2..=8) {
        let spec = GeneratorSpec::unreduced(n);
        for kind in RelationKind::ALL {
            for j in relation_range(kind, n) {
                out.push(verify_relation_boundary(kind, &spec, j as i64)?);
            }
        }
    }
    Ok(out)
}

pub fn lee_suite(opts: &Options) -> Reports {
    let mut out = Vec::new();
    for n in opts.ns(2..=8) {
        let spec = GeneratorSpec::unreduced(n);
        for s in 0..=n as i64 - 2 {
            out.push(lee_identity_check(&spec, s, opts.q(12))?);
        }
    }
    Ok(out)
}

pub fn potential_suite(opts: &Options) -> Reports {
    opts.ns(1..=8)
        .into_iter()
        .map(|n| potential_identity_check(n).map_err(Into::into))
        .collect()
}

/// The witness check plus a divisor of `p` in the torsion at
/// `q^{2p+6} t^{2p}`. Primes from 11 up need `--slow`.
pub fn torsion_suite(p: u32, opts: &Options) -> Reports {
    if p >= 11 && !opts.slow {
        return Err(SuiteError::Usage(format!(
            "torsion:{p} is slow; pass --slow"
        )));
    }
    let witness = torsion_witness_check(p)?;
    let deg = Bidegree::new(2 * p + 6, 2 * p);
    let divisors = torsion_at(&GeneratorSpec::unreduced(p), deg)?;
    let pb = BigInt::from(p);
    let report = CheckReport::new("torsion_at")
        .param("n", p)
        .param("bidegree", deg);
    let listed: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
    let detected = match divisors.iter().find(|d| (*d % &pb) == BigInt::from(0)) {
        Some(_) => report.pass_with(format!("elementary divisors {}", listed.join(","))),
        None => report.fail(format!(
            "no divisor divisible by {p} among [{}]",
            listed.join(",")
        )),
    };
    Ok(vec![witness, detected])
}

pub fn identities_suite(opts: &Options) -> Reports {
    let q = opts.q(if opts.slow { 100 } else { 60 });
    let mut out = series_identities(q)?;
    out.extend(fermionic_triple(opts)?);
    Ok(out)
}

/// Rogers–Ramanujan, the two sides of the `a`-refined identity, its
/// specialization `a² ↦ q⁴`, and the fermionic limit at `t = −1`.
pub fn series_identities(q: u32) -> Reports {
    let mut out = vec![
        compare_series(
            "rr",
            &rr_side(RrSide::Left, q),
            &rr_side(RrSide::Right, q),
            q,
            None,
        ),
        compare_series(
            "krr",
            &krr_side(KrrSide::A, q),
            &krr_side(KrrSide::B, q),
            q,
            None,
        ),
        compare_series(
            "krr_at_a2_q4",
            &krr_side(KrrSide::A, q).specialize_a(2, 0),
            &fermionic_limit(q),
            q,
            None,
        ),
    ];
    let evens = MultiSeries::from_terms(
        (0..=q / 2).map(|k| (Exponent::qt(2 * k, 0), BigInt::from(1))),
        q,
    );
    out.push(compare_series(
        "fermionic_t_minus_1",
        &fermionic_limit(q).eval_t_minus1()?,
        &evens,
        q,
        None,
    ));
    Ok(out)
}

/// State sum, fermionic recursion and normal-form presentation agree for
/// `n ≤ 12`; at `n = 12` the series also agrees with the bosonic form and
/// with the limit up to `q ≤ 24`.
pub fn fermionic_triple(opts: &Options) -> Reports {
    let mut out = Vec::new();
    for n in opts.ns(1..=12) {
        // no admissible weight reaches q^{n(n+3)}, so nothing is truncated
        let c = n * (n + 3);
        let s = state_sum(n, c)?;
        let count = state_sum_sequences(n)?.len();
        let r = CheckReport::new("state_sum_models")
            .param("n", n)
            .param("q_max", c);
        let f = fermionic_recursive(n, c)?;
        let p = presentation_hilbert(n, c)?;
        let levels = presentation_max_mu_degree(n)?;
        let r = r
            .require(s == f, || {
                "state sum differs from the fermionic recursion".into()
            })
            .require(s == p, || "state sum differs from the presentation".into())
            .require(levels == ((n + 1) / 3) as usize, || {
                format!("max mu-degree {levels}")
            })
            .require(s.coefficient_sum() == count.into(), || {
                "state sum truncated".into()
            });
        out.push(if r.passed() {
            r.pass_with(format!("{} terms", s.len()))
        } else {
            r
        });
    }
    let f12 = fermionic_recursive(12, 24)?;
    out.push(compare_series(
        "stable_bosonic_n12",
        &f12,
        &bosonic_full(12, 24)?,
        24,
        None,
    ));
    out.push(compare_series(
        "stable_limit_n12",
        &f12,
        &fermionic_limit(24),
        24,
        None,
    ));
    Ok(out)
}

pub fn reduction_suite(opts: &Options) -> Reports {
    Ok(opts
        .ns(3..=7)
        .into_iter()
        .map(|n| reduction_check(n, opts.q(22)))
        .collect())
}

/// Standard against generic `d₂` at `n = 7`, `(18, 13)`: ranks `(6, 7)`,
/// Betti numbers `(1, 0)`.
pub fn generic_suite(opts: &Options) -> Reports {
    let spec = GeneratorSpec::unreduced(7);
    Ok(vec![generic_contrast(
        &spec,
        Bidegree::new(18, 13),
        opts.seed,
        (6, 7),
        (1, 0),
    )?])
}

/// `d² = 0` for every differential and `d₁d₂ + d₂d₁ = 0`.
pub fn chain_suite(opts: &Options) -> Reports {
    let q = opts.q(24);
    let mut out = Vec::new();
    for n in opts.ns(1..=6) {
        let spec = GeneratorSpec::unreduced(n);
        for d in [
            DifferentialSpec::STANDARD,
            DifferentialSpec::generic(opts.seed),
            DifferentialSpec::LEE,
        ] {
            out.push(square_zero_check(&spec, &d, q));
        }
        for d in [
            DifferentialSpec::STANDARD,
            DifferentialSpec::generic(opts.seed),
        ] {
            out.push(anticommutation_check(&spec, &d, q));
        }
    }
    Ok(out)
}

/// The telescoping identity first, then every table over `ℚ` and `ℤ/2`.
pub fn euler_suite(opts: &Options) -> Reports {
    let q = opts.q(24);
    let mut out = Vec::new();
    for n in opts.ns(1..=6) {
        let spec = GeneratorSpec::unreduced(n);
        let r = CheckReport::new("euler_telescoping")
            .param("n", n)
            .param("q_max", q);
        out.push(if euler_product(&spec, q) == euler_closed_form(&spec, q) {
            r
        } else {
            r.fail("product and closed form differ")
        });
        for ring in [Ring::Rational, Ring::Prime(2)] {
            let t = homology_table(&spec, &DifferentialSpec::STANDARD, ring, q)?;
            out.push(euler_check(&t)?);
        }
    }
    Ok(out)
}

fn table_series(spec: GeneratorSpec, ring: Ring, q_max: u32) -> Result<MultiSeries, Error> {
    Ok(homology_table(&spec, &DifferentialSpec::STANDARD, ring, q_max)?.to_series())
}

fn named(r: CheckReport, n: u32, ring: Ring) -> CheckReport {
    r.param("n", n).param("ring", ring)
}

/// Unreduced table over `ℚ` against the bosonic and appendix forms.
pub fn unreduced_rational(n: u32, q: u32) -> Reports {
    let h = table_series(GeneratorSpec::unreduced(n), Ring::Rational, q)?;
    let mut out = vec![named(
        compare_series("table_vs_pn", &h, &bosonic_full(n, q)?, q, None),
        n,
        Ring::Rational,
    )];
    if (2..=7).contains(&n) {
        let a = appendix_series(n, Variant::Unreduced, q)?;
        out.push(named(
            compare_series("table_vs_appendix", &h, &a, q, None),
            n,
            Ring::Rational,
        ));
    }
    Ok(out)
}

pub fn unreduced_mod2(n: u32, q: u32) -> Reports {
    let h = table_series(GeneratorSpec::unreduced(n), Ring::Prime(2), q)?;
    Ok(vec![named(
        compare_series("table_vs_z2", &h, &z2_closed_form(n, q)?, q, None),
        n,
        Ring::Prime(2),
    )])
}

pub fn reduced_rational(n: u32, q: u32) -> Reports {
    let h = table_series(GeneratorSpec::reduced(n), Ring::Rational, q)?;
    let mut out = vec![named(
        compare_series("reduced_vs_pnred", &h, &bosonic_reduced(n, q)?, q, None),
        n,
        Ring::Rational,
    )];
    if (3..=7).contains(&n) {
        let a = appendix_series(n, Variant::Reduced, q)?;
        out.push(named(
            compare_series("reduced_vs_appendix", &h, &a, q, None),
            n,
            Ring::Rational,
        ));
    }
    Ok(out)
}

/// Quotient dimensions of the lower-level ring against its bosonic form.
pub fn lower_level(n: u32, q: u32) -> Reports {
    let mut terms = Vec::new();
    for qq in 0..=q {
        for t in 0..=qq {
            let d = lower_quotient_dim(n, Bidegree::new(qq, t), Ring::Rational)?;
            if d > 0 {
                terms.push((Exponent::qt(qq, t), BigInt::from(d)));
            }
        }
    }
    let dims = MultiSeries::from_terms(terms, q);
    Ok(vec![compare_series(
        "lower_vs_ln",
        &dims,
        &bosonic_lower(n, q)?,
        q,
        None,
    )
    .param("n", n)])
}

pub fn homology_suite(opts: &Options) -> Reports {
    let q = opts.q(24);
    let mut out = Vec::new();
    for n in opts.ns(2..=5) {
        out.extend(unreduced_rational(n, q)?);
        out.extend(unreduced_mod2(n, q)?);
    }
    for n in opts.ns(3..=5).into_iter().filter(|&n| n >= 2) {
        out.extend(reduced_rational(n, q)?);
    }
    for n in opts.ns(1..=6) {
        out.extend(lower_level(n, q)?);
    }
    Ok(out)
}

/// Table at `n = 7` against a bundled T(7,9) polynomial inside the stable
/// window.
pub fn fixture_comparison(name: &str) -> Reports {
    let f = fixtures::get(name).ok_or_else(|| SuiteError::Usage(format!("no fixture `{name}`")))?;
    let (q, t) = T79_WINDOW;
    let h = table_series(GeneratorSpec::unreduced(7), f.ring(), q)?;
    Ok(vec![compare_series(
        "table_vs_fixture",
        &h,
        &f.series(),
        q,
        Some(t),
    )
    .param("fixture", name)])
}

/// Integrity of every bundled fixture; with `--slow` also the `n = 7`
/// comparison.
pub fn fixtures_suite(opts: &Options) -> Reports {
    let mut out: Vec<CheckReport> = fixtures::bundled().iter().map(|f| f.check()).collect();
    if opts.slow {
        for f in fixtures::bundled() {
            out.extend(fixture_comparison(&f.name)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_tokens() {
        assert_eq!("torsion:5".parse::<Suite>().unwrap(), Suite::Torsion(5));
        assert_eq!(
            "generic-contrast".parse::<Suite>().unwrap(),
            Suite::GenericContrast
        );
        assert!("torsion:x".parse::<Suite>().is_err());
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn slow_gate() {
        assert!(matches!(
            torsion_suite(11, &Options::default()),
            Err(SuiteError::Usage(_))
        ));
        assert!(matches!(
            torsion_suite(4, &Options::default()),
            Err(SuiteError::Core(_))
        ));
    }

    #[test]
    fn single_n_suites_pass() {
        let opts = Options {
            n: Some(4),
            q_max: Some(16),
            ..Options::default()
        };
        for s in [
            Suite::Mu,
            Suite::Relations,
            Suite::Lee,
            Suite::Potential,
            Suite::Reduction,
            Suite::Homology,
        ] {
            for r in run(s, &opts).unwrap() {
                assert!(r.passed(), "{s:?} {:?} {:?}", r.params, r.witness);
            }
        }
    }
}

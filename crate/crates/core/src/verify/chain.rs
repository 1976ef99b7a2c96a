use alloc::format;

use num_bigint::BigInt;

use super::CheckReport;
use crate::dga::{
    chain_euler, differential_matrix, differential_of_monomial, enumerate_basis, Bidegree,
    DifferentialKind, DifferentialSpec, GeneratorSpec,
};
use crate::error::{Error, Result};
use crate::homology::{differential_rank, HomologyTable};
use crate::ring::Ring;
use crate::series::{Exponent, MultiSeries};

/// `d ∘ d = 0` as integer matrices on every bidegree with `q ≤ q_max`.
pub fn square_zero_check(spec: &GeneratorSpec, diff: &DifferentialSpec, q_max: u32) -> CheckReport {
    let report = CheckReport::new("square_zero")
        .param("n", spec.n)
        .param("reduced", spec.reduced)
        .param("diff", diff.kind)
        .param("q_max", q_max);
    let (dq, dt) = diff.shift();
    for q in 0..=q_max {
        for t in 0..=q {
            let deg = Bidegree::new(q, t);
            let Some(mid) = deg.shifted(dq, dt) else {
                continue;
            };
            let first = differential_matrix(spec, diff, deg, Ring::Integer);
            let second = differential_matrix(spec, diff, mid, Ring::Integer);
            let prod = second.checked_mul(&first).expect("composable");
            if !prod.is_zero() {
                return report.fail(format!("d^2 != 0 at {deg}"));
            }
        }
    }
    report
}

/// `d₁ d + d d₁ = 0` as integer matrices on every bidegree with
/// `q ≤ q_max`, for `d` the standard or a generic `d₂`.
pub fn anticommutation_check(
    spec: &GeneratorSpec,
    d2: &DifferentialSpec,
    q_max: u32,
) -> CheckReport {
    let report = CheckReport::new("anticommutation")
        .param("n", spec.n)
        .param("reduced", spec.reduced)
        .param("diff", d2.kind)
        .param("q_max", q_max);
    let d1 = DifferentialSpec::LEE;
    for q in 2..=q_max {
        for t in 1..=q {
            let deg = Bidegree::new(q, t);
            let a = differential_matrix(spec, d2, deg, Ring::Integer);
            let b = differential_matrix(spec, &d1, Bidegree::new(q, t - 1), Ring::Integer);
            let c = differential_matrix(spec, &d1, deg, Ring::Integer);
            let d = differential_matrix(spec, d2, Bidegree::new(q - 2, t - 1), Ring::Integer);
            let sum = b
                .checked_mul(&a)
                .and_then(|ba| d.checked_mul(&c).and_then(|dc| ba.checked_add(&dc)))
                .expect("composable");
            if !sum.is_zero() {
                return report.fail(format!("d1 d2 + d2 d1 != 0 at {deg}"));
            }
        }
    }
    report
}

/// Chain-level comparison of the reduced complex with `n` index pairs and
/// the unreduced one with `n − 2`: on monomials in `x_1…x_{n−2}`,
/// `ξ_2…ξ_{n−1}`, the relabeling `x_i ↦ x_{i−1}`, `ξ_i ↦ ξ_{i−2}` carries
/// the reduced `d₂` to the unreduced one. Also checks that `x_{n−1}` and
/// `ξ_1` never occur in a reduced image.
pub fn reduction_check(n: u32, q_max: u32) -> CheckReport {
    let report = CheckReport::new("reduction")
        .param("n", n)
        .param("q_max", q_max);
    if n < 3 {
        return report.fail("needs n >= 3");
    }
    let red = GeneratorSpec::reduced(n);
    let small = GeneratorSpec::unreduced(n - 2);
    let d = DifferentialSpec::STANDARD;
    for i in red.indices() {
        for (x, _) in d.image_of_xi(&red, i) {
            if x.get(n as usize - 1).copied().unwrap_or(0) > 0 {
                return report.fail(format!("x{} occurs in d2(xi{i})", n - 1));
            }
        }
    }
    if !d.image_of_xi(&red, 1).is_empty() {
        return report.fail("d2(xi1) is nonzero");
    }
    let mut checked = 0usize;
    for q in 0..=q_max {
        for t in 0..=q {
            for m in enumerate_basis(&small, Bidegree::new(q, t)) {
                // lift to the reduced algebra, differentiate, relabel down
                let (lifted, s) = m
                    .relabel(|k| Some(k + 1), |k| Some(k + 2))
                    .expect("injective relabeling");
                let mut down = alloc::collections::BTreeMap::new();
                for (img, c) in differential_of_monomial(&red, &d, &lifted) {
                    match img.relabel(|k| k.checked_sub(1), |k| k.checked_sub(2)) {
                        Some((mm, s2)) => *down.entry(mm).or_insert(0i64) += c * (s * s2) as i64,
                        None => return report.fail(format!("d2({lifted}) leaves the subalgebra")),
                    }
                }
                down.retain(|_, c| *c != 0);
                if down != differential_of_monomial(&small, &d, &m) {
                    return report.fail(format!("mismatch on {m}"));
                }
                checked += 1;
            }
        }
    }
    report.pass_with(format!("{checked} monomials"))
}

/// Rank and Betti contrast between the standard `d₂` and a generic `d₂′`
/// at one bidegree, each pair given as `(standard, generic)`.
pub fn generic_contrast(
    spec: &GeneratorSpec,
    deg: Bidegree,
    seed: u64,
    expected_ranks: (usize, usize),
    expected_betti: (usize, usize),
) -> Result<CheckReport> {
    let report = CheckReport::new("generic_contrast")
        .param("n", spec.n)
        .param("bidegree", deg)
        .param("seed", seed);
    let mut ranks = [0usize; 2];
    let mut betti = [0usize; 2];
    for (slot, diff) in [DifferentialSpec::STANDARD, DifferentialSpec::generic(seed)]
        .iter()
        .enumerate()
    {
        let dim = enumerate_basis(spec, deg).len();
        let out = differential_rank(spec, diff, deg, Ring::Rational)?;
        let inc = differential_rank(spec, diff, Bidegree::new(deg.q, deg.t + 1), Ring::Rational)?;
        ranks[slot] = out;
        betti[slot] = dim - out - inc;
    }
    let got = format!(
        "rank standard {} generic {}; betti standard {} generic {}",
        ranks[0], ranks[1], betti[0], betti[1]
    );
    let ok = (ranks[0], ranks[1]) == expected_ranks && (betti[0], betti[1]) == expected_betti;
    Ok(if ok {
        report.pass_with(got)
    } else {
        report.fail(got)
    })
}

/// `Π (1 − q^{deg ξ_i}) / Π (1 − q^{deg x_k})` over the spec's generators.
pub fn euler_product(spec: &GeneratorSpec, cutoff: u32) -> MultiSeries {
    MultiSeries::product(
        cutoff,
        spec.indices().flat_map(|k| {
            [
                MultiSeries::one_plus(-1, Exponent::qt(2 * k + 4, 0), cutoff),
                MultiSeries::geometric_inverse(2 * k + 2, 0, 0, 1, cutoff).expect("positive"),
            ]
        }),
    )
}

/// The telescoped form: `(1 − q^{2n+2})/(1 − q²)`, or `(1 − q^{2n+2})/(1 − q⁴)`
/// reduced.
pub fn euler_closed_form(spec: &GeneratorSpec, cutoff: u32) -> MultiSeries {
    let den = if spec.reduced { 4 } else { 2 };
    if spec.n <= spec.low() {
        return MultiSeries::one(cutoff);
    }
    MultiSeries::one_plus(-1, Exponent::qt(2 * spec.n + 2, 0), cutoff)
        * MultiSeries::geometric_inverse(den, 0, 0, 1, cutoff).expect("positive")
}

/// Per-q Euler characteristic of the table against the chain level and the
/// telescoped closed form.
pub fn euler_check(table: &HomologyTable) -> Result<CheckReport> {
    if table.diff.kind == DifferentialKind::Lee {
        return Err(Error::Unsupported(
            "Euler check needs a q-preserving differential",
        ));
    }
    let spec = &table.spec;
    let report = CheckReport::new("euler")
        .param("n", spec.n)
        .param("reduced", spec.reduced)
        .param("ring", table.ring)
        .param("diff", table.diff.kind)
        .param("q_max", table.q_max);
    let closed = euler_closed_form(spec, table.q_max);
    for q in 0..=table.q_max {
        let homology = table.euler_column(q)?;
        let chain = chain_euler(spec, q);
        let formula = closed.coeff_qt(q, 0);
        if homology != chain || BigInt::from(chain) != formula {
            return Ok(report.fail(format!(
                "q={q}: homology {homology}, chain {chain}, closed form {formula}"
            )));
        }
    }
    Ok(report)
}

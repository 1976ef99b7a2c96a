use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::chain::anticommutation_check;
use super::CheckReport;
use crate::dga::{
    apply_differential, coef_xpow, differential_matrix, enumerate_basis, partial_derivative,
    potential, Bidegree, DifferentialSpec, Element, GeneratorSpec, Monomial,
};
use crate::error::{Error, Result};
use crate::homology::torsion_at;
use crate::linalg::solve;
use crate::ring::{is_prime, Ring};

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `ε_{a,b} = 2a − b`.
pub fn epsilon(a: i64, b: i64) -> i64 {
    2 * a - b
}

fn require_unreduced(spec: &GeneratorSpec) -> Result<()> {
    if spec.reduced {
        Err(Error::Unsupported(
            "element defined on the unreduced algebra only",
        ))
    } else {
        Ok(())
    }
}

fn out_of_range(what: &'static str, value: i64, min: i64, max: i64) -> Error {
    Error::OutOfRange {
        what,
        value,
        min,
        max,
    }
}

/// `μ_s = Σ_{k=0}^{s+1} ε_{k,s+1−k} x_k ξ_{s+1−k}`, defined for
/// `0 ≤ s ≤ n−2`.
pub fn mu_cycle(spec: &GeneratorSpec, s: i64) -> Result<Element> {
    require_unreduced(spec)?;
    let n = spec.n as i64;
    if s < 0 || s > n - 2 {
        return Err(out_of_range("s", s, 0, n - 2));
    }
    let mut e = Element::zero(Ring::Integer);
    for k in 0..=s + 1 {
        let m = Monomial::new(x_at(k as u32), alloc::vec![(s + 1 - k) as u32]).expect("single xi");
        e.add_int_term(m, epsilon(k, s + 1 - k));
    }
    Ok(e)
}

fn x_at(k: u32) -> Vec<u32> {
    let mut v = alloc::vec![0; k as usize + 1];
    v[k as usize] = 1;
    v
}

fn xi_product(ring: Ring, indices: &[u32]) -> Element {
    match Monomial::with_unsorted_xi(Vec::new(), indices) {
        Some((m, sign)) => Element::term(ring, m, int(sign as i64)),
        None => Element::zero(ring),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    /// `x(z)²`
    Xx,
    /// `x(z) μ(z)`
    XMu,
    /// `ẍ(z) μ(z) − ẋ(z) μ̇(z)`
    XddotMu,
    /// `μ(z) μ̇(z)`
    MuMudot,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [
        RelationKind::Xx,
        RelationKind::XMu,
        RelationKind::XddotMu,
        RelationKind::MuMudot,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RelationKind::Xx => "xx",
            RelationKind::XMu => "xmu",
            RelationKind::XddotMu => "xddot_mu",
            RelationKind::MuMudot => "mu_mudot",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for RelationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RelationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(Error::Unsupported("unknown relation kind"))
    }
}

/// Coefficients `j` for which the relation is a boundary in the complex
/// with `n` index pairs: its closed-form preimage only involves `ξ_i` with
/// `i < n`.
pub fn relation_range(kind: RelationKind, n: u32) -> core::ops::Range<u32> {
    let top = match kind {
        RelationKind::Xx => n,
        RelationKind::XMu => n.saturating_sub(1),
        RelationKind::XddotMu | RelationKind::MuMudot => n.saturating_sub(2),
    };
    0..top
}

/// The `z^j` coefficient of the relation's generating function, built from
/// `x_k` (`k < n`) and `μ_s` (`s ≤ n−2`).
pub fn relation_element(kind: RelationKind, spec: &GeneratorSpec, j: i64) -> Result<Element> {
    require_unreduced(spec)?;
    let n = spec.n as i64;
    if j < 0 || j > n - 1 {
        return Err(out_of_range("j", j, 0, n - 1));
    }
    if kind == RelationKind::Xx {
        return coef_xpow(spec, 2, j);
    }
    let mus: Vec<Element> = (0..=n - 2)
        .map(|s| mu_cycle(spec, s))
        .collect::<Result<_>>()?;
    let x = |k: i64| Element::x(Ring::Integer, k as u32);
    let mut out = Element::zero(Ring::Integer);
    match kind {
        RelationKind::Xx => unreachable!(),
        RelationKind::XMu => {
            for (s, mu) in mus.iter().enumerate() {
                let k = j - s as i64;
                if (0..n).contains(&k) {
                    out = out.add(&x(k).mul(mu));
                }
            }
        }
        RelationKind::XddotMu => {
            for (s, mu) in mus.iter().enumerate() {
                // ẍμ pairs (k−2) + s = j and ẋμ̇ pairs (k−1) + (s−1) = j,
                // so both pick the same k
                let s = s as i64;
                let k = j + 2 - s;
                if (0..n).contains(&k) {
                    out = out.add(&x(k).mul(mu).scale_int(k * (k - 1) - k * s));
                }
            }
        }
        RelationKind::MuMudot => {
            for (a, ma) in mus.iter().enumerate() {
                for (b, mb) in mus.iter().enumerate() {
                    if a as i64 + b as i64 - 1 == j {
                        out = out.add(&ma.mul(mb).scale_int(b as i64));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Closed-form preimage `P` and scalar `c` with `relation = c · d₂(P)` up
/// to the sign convention:
/// `x(z)² = d(ξ(z))`, `xμ = d(ξξ̇)`, `ẍμ − ẋμ̇ = −½ d(ξ̇ξ̈)`, `μμ̇ = d(ξξ̇ξ̈)`.
pub fn relation_preimage(
    kind: RelationKind,
    spec: &GeneratorSpec,
    j: i64,
) -> Result<(Element, BigRational)> {
    require_unreduced(spec)?;
    let n = spec.n as i64;
    let ring = Ring::Integer;
    let mut p = Element::zero(ring);
    let scalar;
    match kind {
        RelationKind::Xx => {
            p = Element::xi(ring, j as u32);
            scalar = int(1);
        }
        RelationKind::XMu => {
            // Σ_{a+b−1=j} b ξ_a ξ_b
            for a in 0..n {
                let b = j + 1 - a;
                if (0..n).contains(&b) {
                    p = p.add(&xi_product(ring, &[a as u32, b as u32]).scale_int(b));
                }
            }
            scalar = int(1);
        }
        RelationKind::XddotMu => {
            // Σ_{(a−1)+(b−2)=j} a·b(b−1) ξ_a ξ_b
            for a in 0..n {
                let b = j + 3 - a;
                if (0..n).contains(&b) {
                    p = p.add(&xi_product(ring, &[a as u32, b as u32]).scale_int(a * b * (b - 1)));
                }
            }
            scalar = rat(-1, 2);
        }
        RelationKind::MuMudot => {
            // Σ_{a+(b−1)+(c−2)=j} b·c(c−1) ξ_a ξ_b ξ_c
            for a in 0..n {
                for b in 0..n {
                    let c = j + 3 - a - b;
                    if (0..n).contains(&c) {
                        let e = xi_product(ring, &[a as u32, b as u32, c as u32]);
                        p = p.add(&e.scale_int(b * c * (c - 1)));
                    }
                }
            }
            scalar = int(1);
        }
    }
    Ok((p, scalar))
}

/// Checks that the relation coefficient is a boundary, preferring the
/// closed-form preimage and falling back to the linear solver.
pub fn verify_relation_boundary(
    kind: RelationKind,
    spec: &GeneratorSpec,
    j: i64,
) -> Result<CheckReport> {
    let report = CheckReport::new("relation_boundary")
        .param("kind", kind)
        .param("n", spec.n)
        .param("j", j);
    let rel = relation_element(kind, spec, j)?.change_ring(Ring::Rational);
    let (pre, c) = relation_preimage(kind, spec, j)?;
    let pre = pre.change_ring(Ring::Rational);
    let image = apply_differential(spec, &DifferentialSpec::STANDARD, &pre)?.scale(&c);
    if rel.is_zero() {
        return Ok(report.pass_with("relation vanishes identically"));
    }
    if image == rel {
        return Ok(report
            .param("sign", "+")
            .pass_with(format!("preimage {}", pre.scale(&c))));
    }
    if image.scale_int(-1) == rel {
        return Ok(report
            .param("sign", "-")
            .pass_with(format!("preimage {}", pre.scale(&-c))));
    }
    match is_boundary(spec, &DifferentialSpec::STANDARD, &rel)? {
        Some(p) => Ok(report
            .param("sign", "solver")
            .pass_with(format!("preimage {p}"))),
        None => Ok(report.fail(format!("{rel} is not a boundary"))),
    }
}

/// A preimage of `e` under the differential, or `None` if `e` is not a
/// boundary. Needs a field.
pub fn is_boundary(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    e: &Element,
) -> Result<Option<Element>> {
    let ring = e.ring();
    if !ring.is_field() {
        return Err(Error::NotAField);
    }
    let Some(deg) = e.bidegree()? else {
        return Ok(Some(Element::zero(ring)));
    };
    let (dq, dt) = diff.shift();
    let src_deg = deg.shifted(-dq, -dt).expect("raising degrees");
    let target = enumerate_basis(spec, deg);
    let index: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut b = alloc::vec![BigRational::zero(); target.len()];
    for (m, c) in e.terms() {
        let Some(&i) = index.get(m) else {
            return Err(Error::GeneratorOutOfRange {
                index: m.max_index().unwrap_or(0),
                n: spec.n,
            });
        };
        b[i] = c.clone();
    }
    let mat = differential_matrix(spec, diff, src_deg, ring);
    let Some(x) = solve(&mat, &b, ring)? else {
        return Ok(None);
    };
    let src = enumerate_basis(spec, src_deg);
    let mut pre = Element::zero(ring);
    for (m, c) in src.into_iter().zip(x) {
        pre.add_term(m, c);
    }
    Ok(Some(pre))
}

/// `m = Σ_{i=1}^{p−1} (3i − p) x_i ξ_{p−i}` in the complex with `n = p`.
pub fn torsion_witness(p: u32) -> Element {
    let mut e = Element::zero(Ring::Integer);
    for i in 1..p {
        let m = Monomial::new(x_at(i), alloc::vec![p - i]).expect("single xi");
        e.add_int_term(m, 3 * i as i64 - p as i64);
    }
    e
}

/// Checks the `ℤ/p` torsion witness at `n = p` and confirms torsion at
/// `q^{2p+6} t^{2p}` by Smith normal form.
pub fn torsion_witness_check(p: u32) -> Result<CheckReport> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if p <= 3 {
        return Err(out_of_range("p", p as i64, 5, i64::MAX));
    }
    let spec = GeneratorSpec::unreduced(p);
    let m = torsion_witness(p);
    let report = CheckReport::new("torsion_witness").param("p", p);
    let deg = m.bidegree()?;
    let want = Bidegree::new(2 * p + 6, 2 * p + 1);
    if deg != Some(want) {
        return Ok(report.fail(format!("witness has bidegree {deg:?}, expected {want}")));
    }
    let dm = apply_differential(&spec, &DifferentialSpec::STANDARD, &m)?;
    if dm.is_zero() {
        return Ok(report.fail("d2(m) vanishes over Z"));
    }
    let pb = BigInt::from(p);
    if let Some((mono, c)) = dm
        .terms()
        .find(|(_, c)| !c.is_integer() || !c.to_integer().is_multiple_of(&pb))
    {
        return Ok(report.fail(format!(
            "coefficient {c} of {mono} in d2(m) not divisible by {p}"
        )));
    }
    let target = Bidegree::new(2 * p + 6, 2 * p);
    let torsion = torsion_at(&spec, target)?;
    let hit = torsion.iter().find(|d| d.is_multiple_of(&pb));
    Ok(match hit {
        Some(d) => report.param("bidegree", target).pass_with(format!(
            "elementary divisor {d} at {target}; d2(m)/{p} = {}",
            dm.scale(&rat(1, p as i64))
        )),
        None => report.fail(format!("torsion at {target} is {torsion:?}")),
    })
}

/// Checks `d₁(μ_s) = ((s+1)/2) d₂(ξ_{s+1})`, the knight-move value
/// `δ(μ_s) = ((s+1)/2) x_{s+1}`, the ε-sum identity and `d₁d₂ + d₂d₁ = 0`
/// up to `q ≤ anticommute_q_max`.
pub fn lee_identity_check(
    spec: &GeneratorSpec,
    s: i64,
    anticommute_q_max: u32,
) -> Result<CheckReport> {
    let mu = mu_cycle(spec, s)?.change_ring(Ring::Rational);
    let report = CheckReport::new("lee_identity")
        .param("n", spec.n)
        .param("s", s);
    let half = rat(s + 1, 2);
    let xi = Element::xi(Ring::Rational, (s + 1) as u32);
    let lhs = apply_differential(spec, &DifferentialSpec::LEE, &mu)?;
    let d2xi = apply_differential(spec, &DifferentialSpec::STANDARD, &xi)?;
    let rhs = d2xi.scale(&half);
    if lhs != rhs {
        return Ok(report.fail(format!("d1(mu) = {lhs}, expected {rhs}")));
    }
    // δ(μ_s) = d₁(d₂⁻¹(d₁ μ_s)) with d₂⁻¹(d₁ μ_s) = ((s+1)/2) ξ_{s+1}
    let delta = apply_differential(spec, &DifferentialSpec::LEE, &xi.scale(&half))?;
    let want = Element::x(Ring::Rational, (s + 1) as u32).scale(&half);
    if delta != want {
        return Ok(report.fail(format!("delta(mu) = {delta}, expected {want}")));
    }
    for k in 0..=s + 1 {
        let sum = epsilon(k, s + 1 - k) + epsilon(s + 1 - k, k);
        if sum != s + 1 {
            return Ok(report.fail(format!("epsilon sum at k={k} is {sum}")));
        }
    }
    let anti = anticommutation_check(spec, &DifferentialSpec::STANDARD, anticommute_q_max);
    if !anti.passed() {
        return Ok(report.fail(anti.witness.unwrap_or_default()));
    }
    Ok(report.pass_with(format!("d1(mu_{s}) = {lhs}")))
}

/// Checks `∂W̄_n/∂x_{n−1−i} = −½ Coef_i[x(z)²]` for every `i < n`.
pub fn potential_identity_check(n: u32) -> Result<CheckReport> {
    let w = potential(n)?;
    let spec = GeneratorSpec::unreduced(n);
    let report = CheckReport::new("potential_identity").param("n", n);
    for i in 0..n {
        let lhs = partial_derivative(&w, n - 1 - i)?;
        let rhs = coef_xpow(&spec, 2, i as i64)?
            .change_ring(Ring::Rational)
            .scale(&rat(-1, 2));
        if lhs != rhs {
            return Ok(report.fail(format!("i={i}: {lhs} vs {rhs}")));
        }
    }
    Ok(report.pass_with(format!("W = {w}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(x: &[u32], xi: &[u32]) -> Monomial {
        Monomial::new(x.to_vec(), xi.to_vec()).unwrap()
    }

    #[test]
    fn epsilon_values() {
        assert_eq!((epsilon(1, 0), epsilon(0, 1)), (2, -1));
        let row: Vec<i64> = (0..=6).map(|a| epsilon(a, 6 - a)).collect();
        assert_eq!(row, [-6, -3, 0, 3, 6, 9, 12]);
    }

    #[test]
    fn mu_examples() {
        let s3 = GeneratorSpec::unreduced(3);
        let mu0 = mu_cycle(&s3, 0).unwrap();
        let mut want = Element::zero(Ring::Integer);
        want.add_int_term(mono(&[0, 1], &[0]), 2);
        want.add_int_term(mono(&[1], &[1]), -1);
        assert_eq!(mu0, want);
        let mu1 = mu_cycle(&s3, 1).unwrap();
        let mut want = Element::zero(Ring::Integer);
        want.add_int_term(mono(&[1], &[2]), -2);
        want.add_int_term(mono(&[0, 1], &[1]), 1);
        want.add_int_term(mono(&[0, 0, 1], &[0]), 4);
        assert_eq!(mu1, want);
        assert!(mu_cycle(&s3, 2).is_err());
        assert!(mu_cycle(&s3, -1).is_err());
    }

    #[test]
    fn relation_examples() {
        let s = GeneratorSpec::unreduced(4);
        let xx = relation_element(RelationKind::Xx, &s, 2).unwrap();
        assert_eq!(xx, coef_xpow(&s, 2, 2).unwrap());
        let xmu = relation_element(RelationKind::XMu, &s, 1).unwrap();
        let x = |k| Element::x(Ring::Integer, k);
        let want = x(0)
            .mul(&mu_cycle(&s, 1).unwrap())
            .add(&x(1).mul(&mu_cycle(&s, 0).unwrap()));
        assert_eq!(xmu, want);
        let mm = relation_element(RelationKind::MuMudot, &s, 1).unwrap();
        let want = mu_cycle(&s, 0)
            .unwrap()
            .mul(&mu_cycle(&s, 2).unwrap())
            .scale_int(2);
        assert_eq!(mm, want);
        assert!(relation_element(RelationKind::Xx, &s, 4).is_err());
    }

    #[test]
    fn boundaries() {
        let s = GeneratorSpec::unreduced(3);
        let x0sq = Element::from_monomial(Ring::Rational, Monomial::x_pow(0, 2));
        let pre = is_boundary(&s, &DifferentialSpec::STANDARD, &x0sq)
            .unwrap()
            .unwrap();
        assert_eq!(pre, Element::xi(Ring::Rational, 0));
        let mu0 = mu_cycle(&s, 0).unwrap().change_ring(Ring::Rational);
        assert!(is_boundary(&s, &DifferentialSpec::STANDARD, &mu0)
            .unwrap()
            .is_none());
        let x0mu0 = Element::x(Ring::Rational, 0).mul(&mu0);
        let pre = is_boundary(&s, &DifferentialSpec::STANDARD, &x0mu0)
            .unwrap()
            .unwrap();
        let xi01 = Element::from_monomial(Ring::Rational, mono(&[], &[0, 1]));
        assert!(pre.ratio_to(&xi01).is_some());
        assert_eq!(
            is_boundary(
                &s,
                &DifferentialSpec::STANDARD,
                &Element::x(Ring::Integer, 0)
            ),
            Err(Error::NotAField)
        );
    }

    #[test]
    fn torsion_witness_errors() {
        assert_eq!(torsion_witness_check(4), Err(Error::NotPrime(4)));
        assert!(torsion_witness_check(3).is_err());
    }

    #[test]
    fn lee_small() {
        let s = GeneratorSpec::unreduced(2);
        let r = lee_identity_check(&s, 0, 10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(lee_identity_check(&s, 1, 10).is_err());
    }

    #[test]
    fn potential_small() {
        for n in 1..=4 {
            assert!(potential_identity_check(n).unwrap().passed());
        }
    }
}

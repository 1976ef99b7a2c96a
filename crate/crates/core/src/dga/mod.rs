//! The free bigraded graded-commutative algebra on `x_k` (even) and `ξ_k`
//! (odd), its bases and its differentials.
//!
//! Gradings: `x_k` sits in `q^{2k+2} t^{2k}`, `ξ_i` in `q^{2i+4} t^{2i+1}`.
//! Differentials act as odd derivations: on `x^a ξ_{i₀} ⋯ ξ_{i_s}` with
//! increasing indices, the factor `ξ_{i_j}` (0-based `j`) is replaced by its
//! image with sign `(−1)^j`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{rank_over_field, SparseMatrix};
use crate::ring::Ring;

mod element;
mod monomial;

pub use element::Element;
pub(crate) use element::{mod_inverse, reduce_coeff};
pub use monomial::{Bidegree, Monomial};

/// Which generators exist: indices `0..n`, or `1..n` when reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub n: u32,
    pub reduced: bool,
}

impl GeneratorSpec {
    pub fn unreduced(n: u32) -> Self {
        GeneratorSpec { n, reduced: false }
    }

    pub fn reduced(n: u32) -> Self {
        GeneratorSpec { n, reduced: true }
    }

    /// Lowest generator index.
    pub fn low(&self) -> u32 {
        u32::from(self.reduced)
    }

    pub fn indices(&self) -> core::ops::Range<u32> {
        self.low()..self.n.max(self.low())
    }

    pub fn contains(&self, k: u32) -> bool {
        self.indices().contains(&k)
    }

    fn check_element(&self, e: &Element) -> Result<()> {
        for (m, _) in e.terms() {
            let bad = m
                .max_index()
                .filter(|&k| k >= self.n)
                .or_else(|| m.min_index().filter(|&k| k < self.low()));
            if let Some(index) = bad {
                return Err(Error::GeneratorOutOfRange { index, n: self.n });
            }
        }
        Ok(())
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={}{}",
            self.n,
            if self.reduced { " reduced" } else { "" }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DifferentialKind {
    /// `d₂(ξ_m) = Σ_k x_k x_{m−k}`
    Standard,
    /// `d₂′(ξ_m) = Σ_k α_{km} x_k x_{m−k}` with pseudo-random `α` from the seed
    Generic { seed: u64 },
    /// `d₁(ξ_i) = x_i`
    Lee,
}

impl fmt::Display for DifferentialKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DifferentialKind::Standard => f.write_str("standard"),
            DifferentialKind::Generic { seed } => write!(f, "generic:{seed}"),
            DifferentialKind::Lee => f.write_str("lee"),
        }
    }
}

pub const ALPHA_MAX: u32 = 9973;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DifferentialSpec {
    pub kind: DifferentialKind,
}

impl DifferentialSpec {
    pub const STANDARD: DifferentialSpec = DifferentialSpec {
        kind: DifferentialKind::Standard,
    };
    pub const LEE: DifferentialSpec = DifferentialSpec {
        kind: DifferentialKind::Lee,
    };

    pub fn generic(seed: u64) -> Self {
        DifferentialSpec {
            kind: DifferentialKind::Generic { seed },
        }
    }

    /// Bidegree change `(Δq, Δt)`.
    pub fn shift(&self) -> (i32, i32) {
        match self.kind {
            DifferentialKind::Lee => (-2, -1),
            _ => (0, -1),
        }
    }

    /// Coefficient of `x_i x_{k−i}` in the image of `ξ_k`, in `[1, 9973]`.
    ///
    /// Each `(i, k)` has its own ChaCha8 stream so the value does not
    /// depend on which other coefficients were requested.
    pub fn alpha(&self, i: u32, k: u32) -> i64 {
        match self.kind {
            DifferentialKind::Generic { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream((u64::from(i) << 32) | u64::from(k));
                i64::from(rng.gen_range(1..=ALPHA_MAX))
            }
            _ => 1,
        }
    }

    /// Image of `ξ_i` as `(x-exponent vector, coefficient)` pairs.
    pub fn image_of_xi(&self, spec: &GeneratorSpec, i: u32) -> Vec<(Vec<u32>, i64)> {
        let mut out: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
        match self.kind {
            DifferentialKind::Lee => {
                out.insert(x_vec(&[i]), 1);
            }
            _ => {
                let lo = spec.low();
                if i >= 2 * lo {
                    for k in lo..=i - lo {
                        *out.entry(x_vec(&[k, i - k])).or_default() += self.alpha(k, i);
                    }
                }
            }
        }
        out.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}

fn x_vec(indices: &[u32]) -> Vec<u32> {
    let len = indices.iter().max().map_or(0, |&k| k as usize + 1);
    let mut v = alloc::vec![0; len];
    for &k in indices {
        v[k as usize] += 1;
    }
    v
}

/// All monomials of bidegree `deg`, in canonical order.
pub fn enumerate_basis(spec: &GeneratorSpec, deg: Bidegree) -> Vec<Monomial> {
    let mut out = Vec::new();
    if deg.t > deg.q {
        return out;
    }
    let d = deg.q - deg.t;
    let idx: Vec<u32> = spec.indices().collect();
    let mut s = 0u32;
    while 3 * s <= d {
        if (d - 3 * s).is_multiple_of(2) {
            let m = (d - 3 * s) / 2;
            for_each_subset(&idx, s as usize, &mut |xi: &[u32]| {
                let ts: u32 = xi.iter().map(|&i| 2 * i + 1).sum();
                if ts > deg.t || !(deg.t - ts).is_multiple_of(2) {
                    return;
                }
                let index_sum = (deg.t - ts) / 2;
                for_each_multiset(&idx, m, index_sum, &mut |x: &[u32]| {
                    let mono = Monomial::new(x_vec(x), xi.to_vec()).expect("sorted subset");
                    out.push(mono);
                });
            });
        }
        s += 1;
    }
    out.sort();
    out
}

/// Even monomials (no ξ) of bidegree `deg`.
pub fn even_basis(spec: &GeneratorSpec, deg: Bidegree) -> Vec<Monomial> {
    let mut out = Vec::new();
    if deg.t > deg.q || !(deg.q - deg.t).is_multiple_of(2) || !deg.t.is_multiple_of(2) {
        return out;
    }
    let idx: Vec<u32> = spec.indices().collect();
    for_each_multiset(&idx, (deg.q - deg.t) / 2, deg.t / 2, &mut |x: &[u32]| {
        out.push(Monomial::new(x_vec(x), Vec::new()).expect("no xi"));
    });
    out.sort();
    out
}

fn for_each_subset(idx: &[u32], size: usize, f: &mut dyn FnMut(&[u32])) {
    fn go(idx: &[u32], start: usize, size: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if cur.len() == size {
            f(cur);
            return;
        }
        for p in start..idx.len() {
            if idx.len() - p < size - cur.len() {
                break;
            }
            cur.push(idx[p]);
            go(idx, p + 1, size, cur, f);
            cur.pop();
        }
    }
    go(idx, 0, size, &mut Vec::new(), f);
}

/// Nondecreasing index lists of length `count` with the given index sum.
fn for_each_multiset(idx: &[u32], count: u32, sum: u32, f: &mut dyn FnMut(&[u32])) {
    fn go(
        idx: &[u32],
        start: usize,
        count: u32,
        sum: u32,
        cur: &mut Vec<u32>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        if count == 0 {
            if sum == 0 {
                f(cur);
            }
            return;
        }
        for p in start..idx.len() {
            let k = idx[p];
            if k * count > sum {
                break;
            }
            cur.push(k);
            go(idx, p, count - 1, sum - k, cur, f);
            cur.pop();
        }
    }
    go(idx, 0, count, sum, &mut Vec::new(), f);
}

/// Image of one monomial, with integer coefficients.
pub fn differential_of_monomial(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    m: &Monomial,
) -> BTreeMap<Monomial, i64> {
    let mut out: BTreeMap<Monomial, i64> = BTreeMap::new();
    for (j, &i) in m.xi_set().iter().enumerate() {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let rest = m.without_xi(j);
        for (x, c) in diff.image_of_xi(spec, i) {
            *out.entry(rest.times_x(&x)).or_default() += sign * c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Applies the differential to a homogeneous element.
pub fn apply_differential(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    e: &Element,
) -> Result<Element> {
    e.bidegree()?;
    spec.check_element(e)?;
    let mut out = Element::zero(e.ring());
    for (m, c) in e.terms() {
        for (img, k) in differential_of_monomial(spec, diff, m) {
            out.add_term(img, c * BigRational::from_integer(k.into()));
        }
    }
    Ok(out)
}

/// Matrix of the differential from bidegree `deg` to `deg + shift`; columns
/// follow the source basis, rows the target basis.
pub fn differential_matrix(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    deg: Bidegree,
    ring: Ring,
) -> SparseMatrix {
    let src = enumerate_basis(spec, deg);
    let (dq, dt) = diff.shift();
    let tgt = deg
        .shifted(dq, dt)
        .map(|d| enumerate_basis(spec, d))
        .unwrap_or_default();
    let index: BTreeMap<&Monomial, usize> = tgt.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut mat = SparseMatrix::new(tgt.len(), src.len(), ring);
    for (col, m) in src.iter().enumerate() {
        for (img, c) in differential_of_monomial(spec, diff, m) {
            let row = index[&img];
            mat.add_to(row, col, BigInt::from(c));
        }
    }
    mat
}

/// Coefficient of `z^j` in `x(z)^power`, `x(z) = Σ_k x_k z^k` over the
/// spec's indices.
pub fn coef_xpow(spec: &GeneratorSpec, power: u32, j: i64) -> Result<Element> {
    if !(2..=3).contains(&power) {
        return Err(Error::OutOfRange {
            what: "power",
            value: power as i64,
            min: 2,
            max: 3,
        });
    }
    if j < 0 {
        return Err(Error::OutOfRange {
            what: "j",
            value: j,
            min: 0,
            max: i64::MAX,
        });
    }
    let j = j as u32;
    let mut out = Element::zero(Ring::Integer);
    let idx: Vec<u32> = spec.indices().filter(|&k| k <= j).collect();
    let mut add = |ks: &[u32]| out.add_int_term(Monomial::new(x_vec(ks), Vec::new()).unwrap(), 1);
    for &a in &idx {
        if power == 2 {
            if idx.contains(&(j - a)) {
                add(&[a, j - a]);
            }
        } else {
            for &b in idx.iter().filter(|&&b| a + b <= j) {
                if idx.contains(&(j - a - b)) {
                    add(&[a, b, j - a - b]);
                }
            }
        }
    }
    Ok(out)
}

/// The cubic potential `−(1/6) Coef_{n−1}[x(z)³]` in `x_0 … x_{n−1}`.
pub fn potential(n: u32) -> Result<Element> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    let cube = coef_xpow(&GeneratorSpec::unreduced(n), 3, n as i64 - 1)?;
    Ok(cube
        .change_ring(Ring::Rational)
        .scale(&BigRational::new((-1).into(), 6.into())))
}

/// Formal `∂/∂x_index` of a polynomial in the even generators.
pub fn partial_derivative(e: &Element, index: u32) -> Result<Element> {
    if e.has_odd() {
        return Err(Error::OddGeneratorsPresent);
    }
    let mut out = Element::zero(e.ring());
    for (m, c) in e.terms() {
        let k = m.x_exponent(index);
        if let Some(lower) = m.lower_x(index) {
            out.add_term(lower, c * BigRational::from_integer(k.into()));
        }
    }
    Ok(out)
}

/// Dimension of the bidegree-`deg` piece of the ideal generated by the
/// first `n` coefficients of `x(z)²` in `ℚ[x_0 … x_{n−1}]` (or over `ℤ/p`).
pub fn lower_ideal_dim(n: u32, deg: Bidegree, ring: Ring) -> Result<usize> {
    let field = if ring.is_field() {
        ring
    } else {
        Ring::Rational
    };
    let spec = GeneratorSpec::unreduced(n);
    let target = even_basis(&spec, deg);
    let index: BTreeMap<&Monomial, usize> =
        target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut columns: Vec<Element> = Vec::new();
    for j in 0..n {
        let g = coef_xpow(&spec, 2, j as i64)?;
        let Some(rest) = deg - Bidegree::new(2 * j + 4, 2 * j) else {
            continue;
        };
        for u in even_basis(&spec, rest) {
            columns.push(Element::from_monomial(Ring::Integer, u).mul(&g));
        }
    }
    let mut mat = SparseMatrix::new(target.len(), columns.len(), field);
    for (col, e) in columns.iter().enumerate() {
        for (m, c) in e.terms() {
            mat.add_to(index[m], col, c.to_integer());
        }
    }
    rank_over_field(&mat, field)
}

/// Dimension of the quotient ring at `deg`: even monomials minus the ideal.
pub fn lower_quotient_dim(n: u32, deg: Bidegree, ring: Ring) -> Result<usize> {
    let all = even_basis(&GeneratorSpec::unreduced(n), deg).len();
    Ok(all - lower_ideal_dim(n, deg, ring)?)
}

/// `Σ_t (−1)^t dim C(q, t)`.
pub fn chain_euler(spec: &GeneratorSpec, q: u32) -> i64 {
    (0..=q)
        .map(|t| {
            let d = enumerate_basis(spec, Bidegree::new(q, t)).len() as i64;
            if t % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn int(c: i64) -> BigRational {
        BigRational::from_integer(c.into())
    }

    #[test]
    fn basis_examples() {
        let s2 = GeneratorSpec::unreduced(2);
        assert_eq!(
            enumerate_basis(&s2, Bidegree::new(2, 0)),
            vec![Monomial::x(0)]
        );
        let s7 = GeneratorSpec::unreduced(7);
        let b = enumerate_basis(&s7, Bidegree::new(18, 13));
        assert_eq!(b.len(), 7);
        for m in &b {
            assert_eq!((m.x_degree(), m.xi_degree()), (1, 1));
            let a = m.x_exponents().len() as u32 - 1;
            assert_eq!(a + m.xi_set()[0], 6);
        }
        let b = enumerate_basis(&s7, Bidegree::new(18, 12));
        assert_eq!(b.len(), 10);
        assert_eq!(b.iter().filter(|m| m.xi_degree() == 2).count(), 3);
    }

    #[test]
    fn d2_examples() {
        let s = GeneratorSpec::unreduced(3);
        let d = DifferentialSpec::STANDARD;
        let img = apply_differential(&s, &d, &Element::xi(Ring::Integer, 1)).unwrap();
        let mut want = Element::zero(Ring::Integer);
        want.add_int_term(Monomial::new(vec![1, 1], vec![]).unwrap(), 2);
        assert_eq!(img, want);

        let xi01 =
            Element::from_monomial(Ring::Integer, Monomial::new(vec![], vec![0, 1]).unwrap());
        let img = apply_differential(&s, &d, &xi01).unwrap();
        let mut want = Element::zero(Ring::Integer);
        want.add_int_term(Monomial::new(vec![2], vec![1]).unwrap(), 1);
        want.add_int_term(Monomial::new(vec![1, 1], vec![0]).unwrap(), -2);
        assert_eq!(img, want);

        let m = Element::from_monomial(Ring::Integer, Monomial::new(vec![1], vec![2]).unwrap());
        let img = apply_differential(&s, &DifferentialSpec::LEE, &m).unwrap();
        assert_eq!(
            img,
            Element::from_monomial(Ring::Integer, Monomial::new(vec![1, 0, 1], vec![]).unwrap())
        );
    }

    #[test]
    fn apply_rejects_bad_input() {
        let s = GeneratorSpec::unreduced(2);
        let e = Element::x(Ring::Integer, 0).add(&Element::xi(Ring::Integer, 0));
        assert_eq!(
            apply_differential(&s, &DifferentialSpec::STANDARD, &e),
            Err(Error::Inhomogeneous)
        );
        let e = Element::xi(Ring::Integer, 5);
        assert!(apply_differential(&s, &DifferentialSpec::STANDARD, &e).is_err());
        let r = GeneratorSpec::reduced(3);
        assert!(apply_differential(
            &r,
            &DifferentialSpec::STANDARD,
            &Element::xi(Ring::Integer, 0)
        )
        .is_err());
    }

    #[test]
    fn small_matrices() {
        let s = GeneratorSpec::unreduced(2);
        let m = differential_matrix(
            &s,
            &DifferentialSpec::STANDARD,
            Bidegree::new(4, 1),
            Ring::Integer,
        );
        assert_eq!((m.rows(), m.cols()), (1, 1));
        assert_eq!(m.get(0, 0), BigInt::from(1));
        let m = differential_matrix(
            &s,
            &DifferentialSpec::STANDARD,
            Bidegree::new(3, 1),
            Ring::Integer,
        );
        assert_eq!(m.cols(), 0);
    }

    #[test]
    fn coef_xpow_examples() {
        let s = GeneratorSpec::unreduced(4);
        let c = coef_xpow(&s, 2, 2).unwrap();
        assert_eq!(
            c.coeff(&Monomial::new(vec![1, 0, 1], vec![]).unwrap()),
            int(2)
        );
        assert_eq!(c.coeff(&Monomial::x_pow(1, 2)), int(1));
        assert_eq!(c.len(), 2);
        let c = coef_xpow(&s, 3, 0).unwrap();
        assert_eq!(
            c,
            Element::from_monomial(Ring::Integer, Monomial::x_pow(0, 3))
        );
        assert!(coef_xpow(&s, 2, -1).is_err());
        assert!(coef_xpow(&s, 4, 1).is_err());
    }

    #[test]
    fn potential_examples() {
        let w1 = potential(1).unwrap();
        assert_eq!(
            w1.coeff(&Monomial::x_pow(0, 3)),
            BigRational::new((-1).into(), 6.into())
        );
        let w2 = potential(2).unwrap();
        assert_eq!(w2.len(), 1);
        assert_eq!(
            w2.coeff(&Monomial::new(vec![2, 1], vec![]).unwrap()),
            BigRational::new((-1).into(), 2.into())
        );
        let w3 = potential(3).unwrap();
        assert_eq!(w3.bidegree().unwrap(), Some(Bidegree::new(10, 4)));
        let half = BigRational::new((-1).into(), 2.into());
        assert_eq!(
            w3.coeff(&Monomial::new(vec![2, 0, 1], vec![]).unwrap()),
            half
        );
        assert_eq!(w3.coeff(&Monomial::new(vec![1, 2], vec![]).unwrap()), half);
    }

    #[test]
    fn partial_derivative_examples() {
        let cube = Element::from_monomial(Ring::Rational, Monomial::x_pow(0, 3));
        assert_eq!(
            partial_derivative(&cube, 0).unwrap(),
            Element::term(Ring::Rational, Monomial::x_pow(0, 2), int(3))
        );
        let e = Element::from_monomial(
            Ring::Rational,
            Monomial::new(vec![0, 2, 1], vec![]).unwrap(),
        );
        assert!(partial_derivative(&e, 0).unwrap().is_zero());
        assert_eq!(
            partial_derivative(&Element::xi(Ring::Rational, 0), 0),
            Err(Error::OddGeneratorsPresent)
        );
    }

    #[test]
    fn lower_ideal_small() {
        assert_eq!(
            lower_ideal_dim(1, Bidegree::new(4, 0), Ring::Rational).unwrap(),
            1
        );
        assert_eq!(
            lower_ideal_dim(1, Bidegree::new(2, 0), Ring::Rational).unwrap(),
            0
        );
    }

    #[test]
    fn generic_alpha_is_deterministic_and_in_range() {
        let g = DifferentialSpec::generic(42);
        for i in 0..7 {
            for k in i..7 {
                let a = g.alpha(i, k);
                assert!((1..=ALPHA_MAX as i64).contains(&a));
                assert_eq!(a, DifferentialSpec::generic(42).alpha(i, k));
            }
        }
        assert_ne!(
            (0..7).map(|k| g.alpha(0, k)).collect::<Vec<_>>(),
            (0..7)
                .map(|k| DifferentialSpec::generic(43).alpha(0, k))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn reduced_images_skip_ends() {
        let r = GeneratorSpec::reduced(5);
        let d = DifferentialSpec::STANDARD;
        assert!(d.image_of_xi(&r, 1).is_empty());
        for i in r.indices() {
            for (x, _) in d.image_of_xi(&r, i) {
                assert_eq!(x.first().copied().unwrap_or(0), 0);
                assert!(x.len() < 5);
            }
        }
    }
}

//! Truncated power series in `a`, `q`, `t` with exact integer coefficients.
//!
//! Truncation is by q-exponent only: a [`MultiSeries`] with cutoff `c` keeps
//! exactly the terms with `q ≤ c`. Every factor used by the formulas in this
//! crate has non-negative q-degree, so every retained coefficient of a
//! product is exact.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub mod appendix;
pub mod formulas;

pub use appendix::{appendix_series, Variant};
pub use formulas::{
    bosonic_full, bosonic_lower, bosonic_reduced, fermionic_limit, fermionic_recursive, krr_side,
    rr_side, z2_closed_form, KrrSide, RrSide,
};

/// Exponent triple of a monomial `a^a q^q t^t`.
///
/// Field order makes the derived ordering the canonical `(q, t, a)` order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    pub q: u32,
    pub t: u32,
    pub a: u32,
}

impl Exponent {
    pub const ZERO: Exponent = Exponent { q: 0, t: 0, a: 0 };

    pub fn qt(q: u32, t: u32) -> Self {
        Exponent { q, t, a: 0 }
    }

    pub fn new(a: u32, q: u32, t: u32) -> Self {
        Exponent { q, t, a }
    }

    fn plus(self, other: Exponent) -> Exponent {
        Exponent {
            q: self.q + other.q,
            t: self.t + other.t,
            a: self.a + other.a,
        }
    }

    fn times(self, k: u32) -> Exponent {
        Exponent {
            q: self.q * k,
            t: self.t * k,
            a: self.a * k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    terms: BTreeMap<Exponent, BigInt>,
    cutoff: u32,
}

impl MultiSeries {
    pub fn zero(cutoff: u32) -> Self {
        MultiSeries {
            terms: BTreeMap::new(),
            cutoff,
        }
    }

    pub fn one(cutoff: u32) -> Self {
        Self::monomial(1, Exponent::ZERO, cutoff)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: Exponent, cutoff: u32) -> Self {
        Self::from_terms([(exp, coeff.into())], cutoff)
    }

    /// `c · q^q t^t`.
    pub fn term(coeff: i64, q: u32, t: u32, cutoff: u32) -> Self {
        Self::monomial(coeff, Exponent::qt(q, t), cutoff)
    }

    /// `1 + sign · a^a q^q t^t`.
    pub fn one_plus(sign: i64, exp: Exponent, cutoff: u32) -> Self {
        Self::one(cutoff) + Self::monomial(sign, exp, cutoff)
    }

    /// Builds a series from terms; duplicates are summed, zeros and terms
    /// above the cutoff dropped.
    pub fn from_terms<I>(terms: I, cutoff: u32) -> Self
    where
        I: IntoIterator<Item = (Exponent, BigInt)>,
    {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            if e.q <= cutoff {
                accumulate(&mut out, e, c);
            }
        }
        MultiSeries { terms: out, cutoff }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical `(q, t, a)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: Exponent) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn coeff_qt(&self, q: u32, t: u32) -> BigInt {
        self.coeff(Exponent::qt(q, t))
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn max_q(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.q).max()
    }

    /// Drops every term with `q > cutoff`. A larger cutoff than the current
    /// one is clamped, since the missing coefficients are unknown.
    pub fn truncate(&self, cutoff: u32) -> Self {
        let cutoff = cutoff.min(self.cutoff);
        MultiSeries {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.q <= cutoff)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
            cutoff,
        }
    }

    /// Reinterprets an exact polynomial under a new cutoff. Only valid when
    /// the series is known to have no terms beyond its current cutoff.
    pub fn polynomial_with_cutoff(&self, cutoff: u32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone())), cutoff)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        let mut out = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut out, *e, c.clone());
        }
        Ok(MultiSeries {
            terms: out,
            cutoff: self.cutoff,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_cutoff(other)?;
        let mut out = BTreeMap::new();
        for (e1, c1) in &self.terms {
            // terms are sorted by q first, so the inner loop can stop early
            for (e2, c2) in &other.terms {
                if e1.q + e2.q > self.cutoff {
                    break;
                }
                accumulate(&mut out, e1.plus(*e2), c1 * c2);
            }
        }
        Ok(MultiSeries {
            terms: out,
            cutoff: self.cutoff,
        })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, v)| (*e, v * c)), self.cutoff)
    }

    /// `Σ_k sign^k m^k`, the truncated inverse of `1 − sign·m` where
    /// `m = a^a q^q t^t`.
    pub fn geometric_inverse(q: u32, t: u32, a: u32, sign: i64, cutoff: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::NotInvertible);
        }
        if sign != 1 && sign != -1 {
            return Err(Error::OutOfRange {
                what: "sign",
                value: sign,
                min: -1,
                max: 1,
            });
        }
        let m = Exponent { q, t, a };
        let terms = (0..=cutoff / q).map(|k| {
            let c = if sign < 0 && k % 2 == 1 { -1 } else { 1 };
            (m.times(k), BigInt::from(c))
        });
        Ok(Self::from_terms(terms, cutoff))
    }

    /// Gaussian binomial `(m choose l)_z` with `z = q²t²`; zero when
    /// `l < 0`, `m < 0` or `l > m`.
    pub fn z_binomial(m: i64, l: i64, cutoff: u32) -> Self {
        if m < 0 || l < 0 || l > m {
            return Self::zero(cutoff);
        }
        let max_z = (cutoff / 2) as usize;
        let coeffs = gaussian_binomial_in_z(m as usize, l as usize, max_z);
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(e, c)| (Exponent::qt(2 * e as u32, 2 * e as u32), c)),
            cutoff,
        )
    }

    /// Substitutes `t = −1`.
    pub fn eval_t_minus1(&self) -> Result<Self> {
        if self.terms.keys().any(|e| e.a != 0) {
            return Err(Error::NonzeroAGrading);
        }
        Ok(Self::from_terms(
            self.terms.iter().map(|(e, c)| {
                let c = if e.t % 2 == 1 { -c } else { c.clone() };
                (Exponent::qt(e.q, 0), c)
            }),
            self.cutoff,
        ))
    }

    /// Substitutes `a ↦ q^dq t^dt`, keeping the cutoff.
    pub fn specialize_a(&self, dq: u32, dt: u32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(e, c)| (Exponent::qt(e.q + e.a * dq, e.t + e.a * dt), c.clone())),
            self.cutoff,
        )
    }

    /// Product of all factors, `1` when empty.
    pub fn product<I: IntoIterator<Item = MultiSeries>>(cutoff: u32, factors: I) -> Self {
        factors
            .into_iter()
            .fold(Self::one(cutoff), |acc, f| &acc * &f)
    }

    fn same_cutoff(&self, other: &Self) -> Result<()> {
        if self.cutoff == other.cutoff {
            Ok(())
        } else {
            Err(Error::CutoffMismatch {
                left: self.cutoff,
                right: other.cutoff,
            })
        }
    }
}

fn accumulate(map: &mut BTreeMap<Exponent, BigInt>, e: Exponent, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = map.entry(e).or_default();
    *slot += c;
    if slot.is_zero() {
        map.remove(&e);
    }
}

/// Coefficients of `(m choose l)_z` up to `z^max_z`, by the recurrence
/// `[m, l] = [m−1, l−1] + z^l [m−1, l]`.
fn gaussian_binomial_in_z(m: usize, l: usize, max_z: usize) -> Vec<BigInt> {
    // row[j] holds the polynomial of (i choose j) for the current i
    let mut row: Vec<Vec<BigInt>> = vec![Vec::new(); l + 1];
    row[0] = vec![BigInt::one()];
    for i in 1..=m {
        for j in (1..=l.min(i)).rev() {
            let mut next = row[j - 1].clone();
            for (e, c) in row[j].iter().enumerate() {
                let e = e + j;
                if e > max_z {
                    break;
                }
                if next.len() <= e {
                    next.resize(e + 1, BigInt::zero());
                }
                next[e] += c;
            }
            next.truncate(max_z + 1);
            row[j] = next;
        }
    }
    core::mem::take(&mut row[l])
}

fn expect_ok<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add for &MultiSeries {
    type Output = MultiSeries;
    fn add(self, rhs: &MultiSeries) -> MultiSeries {
        expect_ok(self.checked_add(rhs))
    }
}

impl Add for MultiSeries {
    type Output = MultiSeries;
    fn add(self, rhs: MultiSeries) -> MultiSeries {
        &self + &rhs
    }
}

impl Sub for &MultiSeries {
    type Output = MultiSeries;
    fn sub(self, rhs: &MultiSeries) -> MultiSeries {
        expect_ok(self.checked_sub(rhs))
    }
}

impl Sub for MultiSeries {
    type Output = MultiSeries;
    fn sub(self, rhs: MultiSeries) -> MultiSeries {
        &self - &rhs
    }
}

impl Mul for &MultiSeries {
    type Output = MultiSeries;
    fn mul(self, rhs: &MultiSeries) -> MultiSeries {
        expect_ok(self.checked_mul(rhs))
    }
}

impl Mul for MultiSeries {
    type Output = MultiSeries;
    fn mul(self, rhs: MultiSeries) -> MultiSeries {
        &self * &rhs
    }
}

impl Neg for &MultiSeries {
    type Output = MultiSeries;
    fn neg(self) -> MultiSeries {
        MultiSeries {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            cutoff: self.cutoff,
        }
    }
}

impl Neg for MultiSeries {
    type Output = MultiSeries;
    fn neg(self) -> MultiSeries {
        -&self
    }
}

impl fmt::Display for MultiSeries {
    /// Human-readable sum, e.g. `1 + q^2 + 2*q^4*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut parts: Vec<alloc::string::String> = Vec::new();
            for (name, exp) in [("a", e.a), ("q", e.q), ("t", e.t)] {
                match exp {
                    0 => {}
                    1 => parts.push(name.into()),
                    k => parts.push(alloc::format!("{name}^{k}")),
                }
            }
            if parts.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&parts.join("*"))?;
            } else {
                write!(f, "{abs}*{}", parts.join("*"))?;
            }
        }
        Ok(())
    }
}

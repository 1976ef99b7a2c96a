use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Bidegree, Monomial};
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Exact linear combination of monomials.
///
/// Coefficients are stored as rationals; over `ℤ/p` they are kept reduced
/// to integers in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    ring: Ring,
    terms: BTreeMap<Monomial, BigRational>,
}

/// Reduces `c` into the ring, `None` when it is not representable
/// (a denominator divisible by `p`).
pub(crate) fn reduce_coeff(ring: Ring, c: BigRational) -> Option<BigRational> {
    match ring {
        Ring::Prime(p) => {
            let p = BigInt::from(p);
            let num = c.numer().mod_floor(&p);
            let den = c.denom().mod_floor(&p);
            let inv = mod_inverse(&den, &p)?;
            Some(BigRational::from_integer((num * inv).mod_floor(&p)))
        }
        _ => Some(c),
    }
}

pub(crate) fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let g = a.extended_gcd(p);
    g.gcd.is_one().then(|| g.x.mod_floor(p))
}

impl Element {
    pub fn zero(ring: Ring) -> Self {
        Element {
            ring,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(ring: Ring, m: Monomial) -> Self {
        Self::term(ring, m, BigRational::one())
    }

    pub fn term(ring: Ring, m: Monomial, c: BigRational) -> Self {
        let mut e = Self::zero(ring);
        e.add_term(m, c);
        e
    }

    pub fn x(ring: Ring, k: u32) -> Self {
        Self::from_monomial(ring, Monomial::x(k))
    }

    pub fn xi(ring: Ring, i: u32) -> Self {
        Self::from_monomial(ring, Monomial::xi(i))
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c · m` in place.
    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        let Some(c) = reduce_coeff(self.ring, c) else {
            return;
        };
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(m.clone())
            .or_insert_with(BigRational::zero);
        *slot += c;
        if let Some(r) = reduce_coeff(self.ring, slot.clone()) {
            *slot = r;
        }
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_int_term(&mut self, m: Monomial, c: i64) {
        self.add_term(m, BigRational::from_integer(c.into()));
    }

    /// The common bidegree of all terms; `None` for zero, an error if mixed.
    pub fn bidegree(&self) -> Result<Option<Bidegree>> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let Some(d) = it.next() else {
            return Ok(None);
        };
        if it.all(|e| e == d) {
            Ok(Some(d))
        } else {
            Err(Error::Inhomogeneous)
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.bidegree().is_ok()
    }

    pub fn has_odd(&self) -> bool {
        self.terms.keys().any(|m| !m.is_even())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.ring);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale_int(-1))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, s)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Same terms viewed over another ring.
    pub fn change_ring(&self, ring: Ring) -> Self {
        let mut out = Self::zero(ring);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Largest generator index used.
    pub fn max_index(&self) -> Option<u32> {
        self.terms.keys().filter_map(Monomial::max_index).max()
    }

    /// True when `self = c · other` for some nonzero scalar `c`; returns it.
    pub fn ratio_to(&self, other: &Self) -> Option<BigRational> {
        if self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (m, v) = self.terms.iter().next()?;
        let c = v / other.terms.get(m)?;
        (other.scale(&c) == *self).then_some(c)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            if a.is_one() {
                write!(f, "{m}")?;
            } else if m.x_exponents().is_empty() && m.xi_set().is_empty() {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_p_reduction() {
        let mut e = Element::zero(Ring::Prime(5));
        e.add_int_term(Monomial::x(0), 7);
        assert_eq!(
            e.coeff(&Monomial::x(0)),
            BigRational::from_integer(2.into())
        );
        e.add_int_term(Monomial::x(0), 3);
        assert!(e.is_zero());
        let half = Element::term(
            Ring::Prime(5),
            Monomial::x(1),
            BigRational::new(1.into(), 2.into()),
        );
        assert_eq!(
            half.coeff(&Monomial::x(1)),
            BigRational::from_integer(3.into())
        );
    }

    #[test]
    fn odd_generators_anticommute() {
        let a = Element::xi(Ring::Integer, 0);
        let b = Element::xi(Ring::Integer, 1);
        assert_eq!(a.mul(&b), b.mul(&a).scale_int(-1));
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn homogeneity() {
        let e = Element::x(Ring::Rational, 0).add(&Element::x(Ring::Rational, 1));
        assert_eq!(e.bidegree(), Err(Error::Inhomogeneous));
        assert_eq!(Element::zero(Ring::Rational).bidegree(), Ok(None));
    }
}

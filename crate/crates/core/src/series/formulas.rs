//! Closed-form, recursive and bosonic series.
//!
//! Every p-sum stops as soon as the p-th term has minimal q-degree above
//! the cutoff or its leading z-binomial vanishes; both conditions persist
//! for all larger p.

use alloc::vec::Vec;

use num_bigint::BigInt;

use super::{Exponent, MultiSeries};
use crate::error::{Error, Result};

fn ex(a: i64, q: i64, t: i64) -> Exponent {
    assert!(a >= 0 && q >= 0 && t >= 0, "negative exponent");
    Exponent::new(a as u32, q as u32, t as u32)
}

/// `c · a^a q^q t^t`
fn mono(c: i64, a: i64, q: i64, t: i64, cutoff: u32) -> MultiSeries {
    MultiSeries::monomial(c, ex(a, q, t), cutoff)
}

/// `1 + a^a q^q t^t`
fn plus(a: i64, q: i64, t: i64, cutoff: u32) -> MultiSeries {
    MultiSeries::one_plus(1, ex(a, q, t), cutoff)
}

/// `1 − q^q t^t`
fn minus(q: i64, t: i64, cutoff: u32) -> MultiSeries {
    MultiSeries::one_plus(-1, ex(0, q, t), cutoff)
}

/// `1 / (1 − q^q t^t)`
fn inv(q: i64, t: i64, cutoff: u32) -> MultiSeries {
    MultiSeries::geometric_inverse(q as u32, t as u32, 0, 1, cutoff)
        .expect("q-degree of a denominator factor is positive")
}

fn zbin(m: i64, l: i64, cutoff: u32) -> MultiSeries {
    MultiSeries::z_binomial(m, l, cutoff)
}

fn gate(on: bool, cutoff: u32, s: impl FnOnce() -> MultiSeries) -> MultiSeries {
    if on {
        s()
    } else {
        MultiSeries::one(cutoff)
    }
}

fn alternate(p: i64, s: MultiSeries) -> MultiSeries {
    if p % 2 == 1 {
        -s
    } else {
        s
    }
}

fn require_n(n: u32, min: u32) -> Result<i64> {
    if n < min {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: min as i64,
            max: i64::MAX,
        });
    }
    Ok(n as i64)
}

fn past_cutoff(min_q: i64, cutoff: u32) -> bool {
    min_q > cutoff as i64
}

/// `Π_{k=1}^{n} 1/(1 − q^{2k} t^{2k−2})`
fn lower_denominator(n: i64, c: u32) -> MultiSeries {
    MultiSeries::product(c, (1..=n).map(|k| inv(2 * k, 2 * k - 2, c)))
}

/// Hilbert series of `ℚ[x_0..x_{n−1}]` modulo the first `n` coefficients of
/// `x(z)²`, in bosonic form.
pub fn bosonic_lower(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let n = require_n(n, 1)?;
    let c = cutoff;
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(5 * p * p + p, c) && p <= n - 2 * p + 1 {
        let pref = MultiSeries::product(c, (1..=p).map(|k| minus(2 * k, 2 * k - 2, c)));
        let t1 = mono(1, 0, 5 * p * p + p, 5 * p * p - 3 * p, c) * zbin(n - 2 * p + 1, p, c);
        let t2 =
            mono(1, 0, (p + 1) * (5 * p + 4), 5 * p * p + 5 * p, c) * zbin(n - 2 * p - 1, p, c);
        sum = sum + alternate(p, pref * (t1 - t2));
        p += 1;
    }
    Ok(lower_denominator(n, c) * sum)
}

/// Poincaré series of the full unreduced homology, bosonic form.
pub fn bosonic_full(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let n = require_n(n, 1)?;
    let c = cutoff;
    // F(k) = 1 + q^{2k+6} t^{2k+1} for 1 ≤ k ≤ n−1, else 1
    let f = |k: i64| {
        if (1..n).contains(&k) {
            plus(0, 2 * k + 6, 2 * k + 1, c)
        } else {
            MultiSeries::one(c)
        }
    };
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(5 * p * p + p, c) && p <= n - 2 * p + 1 {
        let chi = p > 0;
        let pref = MultiSeries::product(
            c,
            (1..=p)
                .map(|k| minus(2 * k, 2 * k - 2, c))
                .chain((3 * p + 1..n).map(f))
                .chain((1..2 * p).map(|k| plus(0, 2 * k + 2, 2 * k - 1, c))),
        );
        let t1 = MultiSeries::product(
            c,
            [
                mono(1, 0, 5 * p * p + p, 5 * p * p - 3 * p, c),
                gate(chi, c, || f(3 * p - 1)),
                f(3 * p),
                zbin(n - 2 * p + 1, p, c),
            ],
        );
        let t2 = if chi {
            MultiSeries::product(
                c,
                [
                    mono(1, 0, 5 * p * p + 7 * p + 2, 5 * p * p + 3 * p - 1, c),
                    f(3 * p),
                    minus(2 * p + 2, 2 * p, c),
                    zbin(n - 2 * p, p, c),
                ],
            )
        } else {
            MultiSeries::zero(c)
        };
        let t3 = MultiSeries::product(
            c,
            [
                mono(-1, 0, 5 * p * p + 9 * p + 4, 5 * p * p + 5 * p, c),
                gate(chi, c, || plus(0, 2 * p + 2, 2 * p + 1, c)),
                gate(chi, c, || plus(0, 4 * p + 2, 4 * p - 1, c)),
                zbin(n - 2 * p - 1, p, c),
            ],
        );
        sum = sum + alternate(p, pref * (t1 + t2 + t3));
        p += 1;
    }
    Ok(lower_denominator(n, c) * sum)
}

/// Poincaré series of the reduced homology, bosonic form.
pub fn bosonic_reduced(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let n = require_n(n, 2)?;
    let c = cutoff;
    let m = n - 2;
    // G(k) = 1 + q^{2k+12} t^{2k+7} for 1 ≤ k ≤ n−3, else 1
    let g = |k: i64| {
        gate(k >= 1 && k <= n - 3, c, || {
            plus(0, 2 * k + 12, 2 * k + 7, c)
        })
    };
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(5 * p * p + 5 * p, c) && p <= m - 2 * p + 1 {
        let chi = p > 0;
        let pref = MultiSeries::product(
            c,
            (1..=p)
                .map(|k| minus(2 * k + 2, 2 * k, c))
                .chain((3 * p + 1..=n - 3).map(g))
                .chain((1..2 * p).map(|k| plus(0, 2 * k + 6, 2 * k + 3, c))),
        );
        let t1 = MultiSeries::product(
            c,
            [
                mono(1, 0, 5 * p * p + 5 * p, 5 * p * p + p, c),
                gate(chi, c, || g(3 * p - 1)),
                g(3 * p),
                zbin(m - 2 * p + 1, p, c),
            ],
        );
        let t2 = if chi {
            MultiSeries::product(
                c,
                [
                    mono(1, 0, 5 * p * p + 11 * p + 6, 5 * p * p + 7 * p + 3, c),
                    g(3 * p),
                    minus(2 * p + 4, 2 * p + 2, c),
                    zbin(m - 2 * p, p, c),
                ],
            )
        } else {
            MultiSeries::zero(c)
        };
        let t3 = MultiSeries::product(
            c,
            [
                mono(-1, 0, 5 * p * p + 13 * p + 8, 5 * p * p + 9 * p + 4, c),
                gate(chi, c, || plus(0, 2 * p + 4, 2 * p + 3, c)),
                gate(chi, c, || plus(0, 4 * p + 6, 4 * p + 3, c)),
                zbin(m - 2 * p - 1, p, c),
            ],
        );
        sum = sum + alternate(p, pref * (t1 + t2 + t3));
        p += 1;
    }
    let den = MultiSeries::product(c, (1..n).map(|k| inv(2 * k + 2, 2 * k, c)));
    Ok(plus(0, 6, 3, c) * den * sum)
}

/// Poincaré series of the homology with ℤ/2 coefficients.
pub fn z2_closed_form(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let n = require_n(n, 1)?;
    let c = cutoff;
    let first = (0..n).flat_map(|i| [plus(0, 2 * i + 4, 2 * i + 1, c), inv(2 * i + 2, 2 * i, c)]);
    let second = (0..=(n - 1) / 2).flat_map(|i| {
        [
            minus(4 * i + 4, 4 * i, c),
            MultiSeries::geometric_inverse(4 * i as u32 + 4, 4 * i as u32 + 1, 0, -1, c)
                .expect("positive q-degree"),
        ]
    });
    Ok(MultiSeries::product(c, first.chain(second)))
}

/// `K_n` from the three-term recursion, seeded by the state sums for
/// `n = 1, 2, 3`.
pub fn fermionic_recursive(n: u32, cutoff: u32) -> Result<MultiSeries> {
    require_n(n, 1)?;
    let c = cutoff;
    let mut k: Vec<MultiSeries> = Vec::with_capacity(n as usize + 1);
    k.push(MultiSeries::one(c));
    for len in 1..=n.min(3) {
        k.push(crate::verify::state_sum(len, c)?);
    }
    for len in 4..=n as i64 {
        let i = len as usize;
        let next = &k[i - 1]
            + &(&k[i - 2] * &mono(1, 0, 2 * len, 2 * len - 2, c))
            + &k[i - 3] * &mono(1, 0, 2 * len + 4, 2 * len - 1, c);
        k.push(next);
    }
    Ok(k.swap_remove(n as usize))
}

/// Limit `K(q,t)` of the fermionic state sums.
pub fn fermionic_limit(cutoff: u32) -> MultiSeries {
    let c = cutoff;
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(2 * p * p, c) {
        let u = MultiSeries::product(
            c,
            core::iter::once(mono(1, 0, 2 * p * p, 2 * p * (p - 1), c)).chain(
                (1..=p).flat_map(|j| [plus(0, 2 * j + 4, 2 * j + 1, c), inv(2 * j, 2 * j, c)]),
            ),
        );
        sum = sum + plus(0, 8 * p + 12, 8 * p + 5, c) * u;
        p += 1;
    }
    sum
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrrSide {
    A,
    B,
}

/// One side of the a-graded Rogers–Ramanujan type identity.
pub fn krr_side(side: KrrSide, cutoff: u32) -> MultiSeries {
    match side {
        KrrSide::A => krr_a(cutoff),
        KrrSide::B => krr_b(cutoff),
    }
}

fn krr_a(c: u32) -> MultiSeries {
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(2 * p * p, c) {
        let term = MultiSeries::product(
            c,
            [
                mono(1, 0, 2 * p * p, 2 * p * (p - 1), c),
                plus(2, 8 * p + 8, 8 * p + 5, c),
            ]
            .into_iter()
            .chain((1..=p).flat_map(|j| [plus(2, 2 * j, 2 * j + 1, c), inv(2 * j, 2 * j, c)])),
        );
        sum = sum + term;
        p += 1;
    }
    sum
}

fn krr_b(c: u32) -> MultiSeries {
    let top = c as i64;
    // H(k) = 1 + a² q^{2k+2} t^{2k+1}; factors with 2k+2 > cutoff are 1
    let h = |k: i64| gate(k >= 1, c, || plus(2, 2 * k + 2, 2 * k + 1, c));
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    while !past_cutoff(5 * p * p + p, c) {
        let chi = p > 0;
        let pref = MultiSeries::product(
            c,
            (1..=p)
                .flat_map(|k| [minus(2 * k, 2 * k - 2, c), inv(2 * k, 2 * k, c)])
                .chain((3 * p + 1..=top / 2).map(h))
                .chain((1..2 * p).map(|k| plus(2, 2 * k - 2, 2 * k - 1, c))),
        );
        let t1 = MultiSeries::product(
            c,
            [
                mono(1, 0, 5 * p * p + p, 5 * p * p - 3 * p, c),
                gate(chi, c, || h(3 * p - 1)),
                h(3 * p),
            ],
        );
        let t2 = if chi {
            MultiSeries::product(
                c,
                [
                    mono(1, 2, 5 * p * p + 7 * p - 2, 5 * p * p + 3 * p - 1, c),
                    h(3 * p),
                    minus(2 * p + 2, 2 * p, c),
                ],
            )
        } else {
            MultiSeries::zero(c)
        };
        let t3 = MultiSeries::product(
            c,
            [
                mono(-1, 0, 5 * p * p + 9 * p + 4, 5 * p * p + 5 * p, c),
                gate(chi, c, || plus(2, 2 * p - 2, 2 * p + 1, c)),
                gate(chi, c, || plus(2, 4 * p - 2, 4 * p - 1, c)),
            ],
        );
        sum = sum + alternate(p, pref * (t1 + t2 + t3));
        p += 1;
    }
    lower_denominator(top / 2 + 1, c) * sum
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RrSide {
    Left,
    Right,
}

/// One side of the q,t Rogers–Ramanujan identity for the lower level.
pub fn rr_side(side: RrSide, cutoff: u32) -> MultiSeries {
    let c = cutoff;
    let mut sum = MultiSeries::zero(c);
    let mut p = 0i64;
    match side {
        RrSide::Left => {
            while !past_cutoff(2 * p * p, c) {
                let term = MultiSeries::product(
                    c,
                    core::iter::once(mono(1, 0, 2 * p * p, 2 * p * (p - 1), c))
                        .chain((1..=p).map(|k| inv(2 * k, 2 * k, c))),
                );
                sum = sum + term;
                p += 1;
            }
            sum
        }
        RrSide::Right => {
            while !past_cutoff(5 * p * p + p, c) {
                let pref = MultiSeries::product(
                    c,
                    (1..=p).flat_map(|k| [minus(2 * k, 2 * k - 2, c), inv(2 * k, 2 * k, c)]),
                );
                let bracket = mono(1, 0, 5 * p * p + p, 5 * p * p - 3 * p, c)
                    - mono(1, 0, (p + 1) * (5 * p + 4), 5 * p * p + 5 * p, c);
                sum = sum + alternate(p, pref * bracket);
                p += 1;
            }
            lower_denominator(c as i64 / 2 + 1, c) * sum
        }
    }
}

/// Coefficient-wise comparison helper: the first exponent where two series
/// differ, if any.
pub fn first_difference(s1: &MultiSeries, s2: &MultiSeries) -> Option<(Exponent, BigInt, BigInt)> {
    let diff = s1.checked_sub(s2).ok()?;
    let first = diff.terms().next().map(|(e, _)| *e);
    first.map(|e| (e, s1.coeff(e), s2.coeff(e)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(terms: &[(i64, u32, u32)], c: u32) -> MultiSeries {
        MultiSeries::from_terms(
            terms
                .iter()
                .map(|&(k, q, t)| (Exponent::qt(q, t), BigInt::from(k))),
            c,
        )
    }

    #[test]
    fn lower_small_n() {
        let c = 30;
        assert_eq!(
            bosonic_lower(1, c).unwrap(),
            poly(&[(1, 0, 0), (1, 2, 0)], c)
        );
        let want = poly(&[(1, 2, 0)], c) + inv(4, 2, c);
        assert_eq!(bosonic_lower(2, c).unwrap(), want);
    }

    #[test]
    fn full_n2_matches_example() {
        let c = 40;
        let want = plus(0, 8, 3, c) * inv(4, 2, c) + poly(&[(1, 2, 0)], c);
        assert_eq!(bosonic_full(2, c).unwrap(), want);
    }

    #[test]
    fn full_n3_matches_corollary() {
        let c = 40;
        let want = plus(0, 10, 5, c) * poly(&[(1, 0, 0), (1, 2, 0), (1, 4, 2)], c) * inv(6, 4, c)
            + poly(&[(1, 8, 3)], c);
        assert_eq!(bosonic_full(3, c).unwrap(), want);
    }

    #[test]
    fn reduced_n3() {
        let c = 40;
        let want = poly(&[(1, 0, 0), (1, 4, 2), (1, 6, 3), (1, 10, 5)], c) * inv(6, 4, c);
        assert_eq!(bosonic_reduced(3, c).unwrap(), want);
    }

    #[test]
    fn z2_small_n() {
        let c = 30;
        assert_eq!(
            z2_closed_form(1, c).unwrap(),
            poly(&[(1, 0, 0), (1, 2, 0)], c)
        );
        let want = plus(0, 6, 3, c) * poly(&[(1, 0, 0), (1, 2, 0)], c) * inv(4, 2, c);
        assert_eq!(z2_closed_form(2, c).unwrap(), want);
    }

    #[test]
    fn fermionic_limit_p0() {
        // the p = 0 term alone, visible below q^2
        let k = fermionic_limit(1);
        assert_eq!(k, MultiSeries::one(1));
    }

    #[test]
    fn rr_agrees_small() {
        let c = 30;
        assert_eq!(rr_side(RrSide::Left, c), rr_side(RrSide::Right, c));
    }

    #[test]
    fn preconditions() {
        assert!(bosonic_lower(0, 10).is_err());
        assert!(bosonic_reduced(1, 10).is_err());
        assert!(fermionic_recursive(0, 10).is_err());
    }
}

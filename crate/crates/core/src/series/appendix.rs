//! Tabulated numerator expressions for `2 ≤ n ≤ 7` (unreduced) and
//! `3 ≤ n ≤ 7` (reduced), kept as data and expanded on demand.

use num_bigint::BigInt;

use super::{Exponent, MultiSeries};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Unreduced,
    Reduced,
}

#[derive(Clone, Copy, Debug)]
enum Factor {
    /// `1 + q^q t^t`
    Plus(u32, u32),
    /// `1 − q^q t^t`
    Minus(u32, u32),
    /// explicit polynomial, `(coeff, q, t)` terms
    Poly(&'static [(i64, u32, u32)]),
    /// `Π_{i=lo}^{hi}` of the variant's standard factor
    Range(u32, u32),
}

#[derive(Clone, Copy, Debug)]
struct Term {
    coeff: i64,
    q: u32,
    t: u32,
    factors: &'static [Factor],
}

const fn term(coeff: i64, q: u32, t: u32, factors: &'static [Factor]) -> Term {
    Term {
        coeff,
        q,
        t,
        factors,
    }
}

use Factor::{Minus as M, Plus as P, Poly, Range as R};

const Z3: Factor = Poly(&[(1, 0, 0), (1, 2, 2), (1, 4, 4)]);
const Z4: Factor = Poly(&[(1, 0, 0), (1, 2, 2), (1, 4, 4), (1, 6, 6)]);
const Z5: Factor = Poly(&[(1, 0, 0), (1, 2, 2), (1, 4, 4), (1, 6, 6), (1, 8, 8)]);
const Z6: Factor = Poly(&[
    (1, 0, 0),
    (1, 2, 2),
    (1, 4, 4),
    (1, 6, 6),
    (1, 8, 8),
    (1, 10, 10),
]);

const UNREDUCED: [&[Term]; 6] = [
    // n = 2
    &[term(
        1,
        0,
        0,
        &[
            M(2, 0),
            Poly(&[(1, 0, 0), (1, 2, 0), (-1, 6, 2), (1, 8, 3)]),
        ],
    )],
    // n = 3
    &[
        term(1, 0, 0, &[P(8, 3), P(10, 5)]),
        term(-1, 4, 0, &[P(8, 3), P(10, 5)]),
        term(-1, 6, 2, &[M(2, 0), P(4, 1), P(2, 2), P(10, 5)]),
        term(-1, 14, 7, &[M(2, 0), M(4, 2), P(4, 1)]),
    ],
    // n = 4
    &[
        term(1, 0, 0, &[P(8, 3), P(10, 5), P(12, 7)]),
        term(-1, 4, 0, &[P(8, 3), P(10, 5), P(12, 7)]),
        term(-1, 6, 2, &[M(2, 0), P(4, 1), P(10, 5), P(12, 7), Z3]),
        term(-1, 14, 7, &[M(2, 0), M(4, 2), P(4, 1), P(12, 7), P(2, 2)]),
        term(1, 18, 10, &[M(2, 0), P(4, 1), P(6, 3), P(4, 3)]),
    ],
    // n = 5
    &[
        term(1, 0, 0, &[R(1, 4)]),
        term(-1, 4, 0, &[R(1, 4)]),
        term(-1, 6, 2, &[M(2, 0), P(4, 1), Z4, R(2, 4)]),
        term(
            -1,
            14,
            7,
            &[M(2, 0), M(4, 2), P(4, 1), P(12, 7), P(14, 9), Z3],
        ),
        term(
            1,
            18,
            10,
            &[M(2, 0), P(4, 1), P(6, 3), P(2, 2), P(14, 9), P(4, 3)],
        ),
        term(1, 22, 14, &[M(2, 0), M(4, 2), P(4, 1), P(6, 3), P(8, 5)]),
    ],
    // n = 6
    &[
        term(1, 0, 0, &[R(1, 5)]),
        term(-1, 4, 0, &[R(1, 5)]),
        term(-1, 6, 2, &[M(2, 0), P(4, 1), Z5, R(2, 5)]),
        term(
            -1,
            14,
            7,
            &[M(2, 0), M(4, 2), P(4, 1), P(12, 7), P(14, 9), P(16, 11), Z4],
        ),
        term(
            1,
            18,
            10,
            &[M(2, 0), P(4, 1), P(6, 3), Z3, P(14, 9), P(16, 11), P(4, 3)],
        ),
        term(
            1,
            22,
            14,
            &[M(2, 0), M(4, 2), P(4, 1), P(6, 3), P(8, 5), P(16, 11), Z3],
        ),
        term(
            1,
            36,
            25,
            &[M(2, 0), M(4, 2), M(6, 4), P(4, 1), P(6, 3), P(8, 5)],
        ),
    ],
    // n = 7
    &[
        term(1, 0, 0, &[R(1, 6)]),
        term(-1, 4, 0, &[R(1, 6)]),
        term(-1, 6, 2, &[M(2, 0), P(4, 1), Z6, R(2, 6)]),
        term(-1, 14, 7, &[M(2, 0), M(4, 2), P(4, 1), Z5, R(3, 6)]),
        term(
            1,
            18,
            10,
            &[
                M(2, 0),
                P(4, 1),
                P(6, 3),
                P(4, 3),
                Z4,
                P(14, 9),
                P(16, 11),
                P(18, 13),
            ],
        ),
        term(
            1,
            22,
            14,
            &[
                M(2, 0),
                M(4, 2),
                P(4, 1),
                P(6, 3),
                P(8, 5),
                P(16, 11),
                P(18, 13),
                Poly(&[(1, 0, 0), (1, 2, 2), (2, 4, 4), (1, 6, 6), (1, 8, 8)]),
            ],
        ),
        term(
            1,
            36,
            25,
            &[
                M(2, 0),
                M(4, 2),
                M(6, 4),
                P(4, 1),
                P(6, 3),
                P(8, 5),
                P(18, 13),
                Z3,
            ],
        ),
        term(
            -1,
            42,
            30,
            &[
                M(2, 0),
                M(4, 2),
                P(4, 1),
                P(6, 3),
                P(8, 5),
                P(10, 7),
                P(6, 5),
            ],
        ),
    ],
];

const REDUCED: [&[Term]; 5] = [
    // n = 3
    &[term(1, 0, 0, &[]), term(-1, 8, 4, &[])],
    // n = 4
    &[
        term(1, 0, 0, &[P(14, 9)]),
        term(-1, 8, 4, &[P(14, 9)]),
        term(-1, 10, 6, &[M(4, 2), P(8, 5)]),
    ],
    // n = 5
    &[
        term(1, 0, 0, &[P(14, 9), P(16, 11)]),
        term(-1, 8, 4, &[P(14, 9), P(16, 11)]),
        term(-1, 10, 6, &[M(4, 2), P(8, 5), P(2, 2), P(16, 11)]),
        term(-1, 22, 15, &[M(4, 2), M(6, 4), P(8, 5)]),
    ],
    // n = 6
    &[
        term(1, 0, 0, &[P(14, 9), P(16, 11), P(18, 13)]),
        term(-1, 8, 4, &[P(14, 9), P(16, 11), P(18, 13)]),
        term(-1, 10, 6, &[M(4, 2), P(8, 5), P(16, 11), P(18, 13), Z3]),
        term(-1, 22, 15, &[M(4, 2), M(6, 4), P(8, 5), P(18, 13), P(2, 2)]),
        term(1, 26, 18, &[M(4, 2), P(8, 5), P(10, 7), P(6, 5)]),
    ],
    // n = 7
    &[
        term(1, 0, 0, &[R(1, 4)]),
        term(-1, 8, 4, &[R(1, 4)]),
        term(-1, 10, 6, &[M(4, 2), P(8, 5), Z4, R(2, 4)]),
        term(
            -1,
            22,
            15,
            &[M(4, 2), M(6, 4), P(8, 5), P(18, 13), P(20, 15), Z3],
        ),
        term(
            1,
            26,
            18,
            &[M(4, 2), P(8, 5), P(10, 7), P(2, 2), P(20, 15), P(6, 5)],
        ),
        term(1, 30, 22, &[M(4, 2), M(6, 4), P(8, 5), P(10, 7), P(12, 9)]),
    ],
];

fn factor_series(f: Factor, variant: Variant, c: u32) -> MultiSeries {
    match f {
        Factor::Plus(q, t) => MultiSeries::one_plus(1, Exponent::qt(q, t), c),
        Factor::Minus(q, t) => MultiSeries::one_plus(-1, Exponent::qt(q, t), c),
        Factor::Poly(terms) => MultiSeries::from_terms(
            terms
                .iter()
                .map(|&(k, q, t)| (Exponent::qt(q, t), BigInt::from(k))),
            c,
        ),
        Factor::Range(lo, hi) => MultiSeries::product(
            c,
            (lo..=hi).map(|i| {
                let e = match variant {
                    Variant::Unreduced => Exponent::qt(2 * i + 6, 2 * i + 1),
                    Variant::Reduced => Exponent::qt(2 * i + 12, 2 * i + 7),
                };
                MultiSeries::one_plus(1, e, c)
            }),
        ),
    }
}

/// The tabulated numerator for `n`, before division.
pub fn appendix_numerator(n: u32, variant: Variant, cutoff: u32) -> Result<MultiSeries> {
    let terms = table(n, variant)?;
    let mut sum = MultiSeries::zero(cutoff);
    for t in terms {
        let head = MultiSeries::term(t.coeff, t.q, t.t, cutoff);
        let body = MultiSeries::product(
            cutoff,
            t.factors.iter().map(|&f| factor_series(f, variant, cutoff)),
        );
        sum = sum + head * body;
    }
    Ok(sum)
}

/// The tabulated expression for `n`, divided by its denominator:
/// `Π_{i=1}^{n}(1 − q^{2i} t^{2i−2})` unreduced, or
/// `Π_{i=1}^{n−1}(1 − q^{2i+2} t^{2i})` with the extra `(1 + q^6 t^3)` reduced.
pub fn appendix_series(n: u32, variant: Variant, cutoff: u32) -> Result<MultiSeries> {
    let num = appendix_numerator(n, variant, cutoff)?;
    let c = cutoff;
    let inv =
        |q: u32, t: u32| MultiSeries::geometric_inverse(q, t, 0, 1, c).expect("positive q-degree");
    let den = match variant {
        Variant::Unreduced => MultiSeries::product(c, (1..=n).map(|i| inv(2 * i, 2 * i - 2))),
        Variant::Reduced => MultiSeries::product(
            c,
            core::iter::once(MultiSeries::one_plus(1, Exponent::qt(6, 3), c))
                .chain((1..n).map(|i| inv(2 * i + 2, 2 * i))),
        ),
    };
    Ok(num * den)
}

fn table(n: u32, variant: Variant) -> Result<&'static [Term]> {
    let (lo, rows): (u32, &[&[Term]]) = match variant {
        Variant::Unreduced => (2, &UNREDUCED),
        Variant::Reduced => (3, &REDUCED),
    };
    let hi = lo + rows.len() as u32 - 1;
    if n < lo || n > hi {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: lo as i64,
            max: hi as i64,
        });
    }
    Ok(rows[(n - lo) as usize])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_checked() {
        assert!(appendix_series(1, Variant::Unreduced, 10).is_err());
        assert!(appendix_series(8, Variant::Unreduced, 10).is_err());
        assert!(appendix_series(2, Variant::Reduced, 10).is_err());
        assert!(appendix_series(7, Variant::Reduced, 10).is_ok());
    }

    #[test]
    fn reduced_n3_numerator() {
        let num = appendix_numerator(3, Variant::Reduced, 20).unwrap();
        assert_eq!(num.len(), 2);
        assert_eq!(num.coeff_qt(8, 4), BigInt::from(-1));
    }
}

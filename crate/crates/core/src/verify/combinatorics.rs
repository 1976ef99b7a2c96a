use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{Exponent, MultiSeries};

/// Longest sequence length `state_sum` will enumerate.
pub const MAX_STATE_SUM_LENGTH: u32 = 24;

/// Admissible 0/1 sequences of length `n`: no run of four or more ones,
/// and a run of exactly three only at the start. Bit `k` of each value is
/// position `k`.
pub fn state_sum_sequences(n: u32) -> Result<Vec<u32>> {
    if n == 0 || n > MAX_STATE_SUM_LENGTH {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_STATE_SUM_LENGTH as i64,
        });
    }
    Ok((0u32..1 << n).filter(|&s| admissible(s, n)).collect())
}

/// Maximal runs of ones as `(start, length)`.
fn runs(s: u32, n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut k = 0;
    while k < n {
        if s >> k & 1 == 1 {
            let start = k;
            while k < n && s >> k & 1 == 1 {
                k += 1;
            }
            out.push((start, k - start));
        } else {
            k += 1;
        }
    }
    out
}

fn admissible(s: u32, n: u32) -> bool {
    runs(s, n)
        .iter()
        .all(|&(start, len)| len <= 2 || (len == 3 && start == 0))
}

fn weight(s: u32, n: u32) -> Exponent {
    let mut e = Exponent::ZERO;
    for (k, len) in runs(s, n) {
        let (q, t) = match len {
            1 => (2 * k + 2, 2 * k),
            2 => (2 * k + 8, 2 * k + 3),
            _ => (12, 5),
        };
        e.q += q;
        e.t += t;
    }
    e
}

/// Weighted sum over admissible sequences: a leading `111` weighs
/// `q^12 t^5`, a single `1` at position `k` weighs `q^{2k+2} t^{2k}`, a
/// block `11` starting at `k` weighs `q^{2k+8} t^{2k+3}`.
pub fn state_sum(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let seqs = state_sum_sequences(n)?;
    Ok(MultiSeries::from_terms(
        seqs.into_iter().map(|s| (weight(s, n), BigInt::from(1))),
        cutoff,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Gen {
    X(u32),
    Mu(u32),
}

fn compatible(a: Gen, b: Gen) -> bool {
    match (a, b) {
        (Gen::X(i), Gen::X(j)) => i.abs_diff(j) > 1,
        (Gen::Mu(i), Gen::Mu(j)) => i.abs_diff(j) > 2,
        (Gen::X(j), Gen::Mu(i)) | (Gen::Mu(i), Gen::X(j)) => {
            (j, i) == (0, 1) || !(j + 1 >= i && j <= i + 2)
        }
    }
}

/// Surviving normal-form monomials in `x_i` (`i < n`) and `μ_i`
/// (`i ≤ n−2`), each as its list of `μ` indices and `x` indices.
///
/// The eliminated products are `x_i x_j` with `|i−j| ≤ 1`, `μ_i μ_j` with
/// `|i−j| ≤ 2`, and `x_j μ_i` with `i−1 ≤ j ≤ i+2` except `x_0 μ_1`.
pub fn presentation_monomials(n: u32) -> Result<Vec<(Vec<u32>, Vec<u32>)>> {
    if n == 0 || n > MAX_STATE_SUM_LENGTH {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_STATE_SUM_LENGTH as i64,
        });
    }
    let gens: Vec<Gen> = (0..n)
        .map(Gen::X)
        .chain((0..n.saturating_sub(1)).map(Gen::Mu))
        .collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Gen> = Vec::new();
    fn go(gens: &[Gen], start: usize, chosen: &mut Vec<Gen>, out: &mut Vec<(Vec<u32>, Vec<u32>)>) {
        let mus = chosen.iter().filter_map(|g| match g {
            Gen::Mu(i) => Some(*i),
            _ => None,
        });
        let xs = chosen.iter().filter_map(|g| match g {
            Gen::X(i) => Some(*i),
            _ => None,
        });
        out.push((mus.collect(), xs.collect()));
        for p in start..gens.len() {
            if chosen.iter().all(|&c| compatible(c, gens[p])) {
                chosen.push(gens[p]);
                go(gens, p + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    go(&gens, 0, &mut chosen, &mut out);
    Ok(out)
}

/// Hilbert series of the normal-form monomial model.
pub fn presentation_hilbert(n: u32, cutoff: u32) -> Result<MultiSeries> {
    let monos = presentation_monomials(n)?;
    Ok(MultiSeries::from_terms(
        monos.into_iter().map(|(mus, xs)| {
            let mut e = Exponent::ZERO;
            for i in mus {
                e.q += 2 * i + 8;
                e.t += 2 * i + 3;
            }
            for i in xs {
                e.q += 2 * i + 2;
                e.t += 2 * i;
            }
            (e, BigInt::from(1))
        }),
        cutoff,
    ))
}

/// Largest number of `μ` factors in a surviving monomial.
pub fn presentation_max_mu_degree(n: u32) -> Result<usize> {
    Ok(presentation_monomials(n)?
        .iter()
        .map(|(mus, _)| mus.len())
        .max()
        .unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(state_sum_sequences(3).unwrap().len(), 8);
        let s4 = state_sum_sequences(4).unwrap();
        assert_eq!(s4.len(), 14);
        assert!(!s4.contains(&0b1111));
        // 0111 as a string is positions 1..3 set
        assert!(!s4.contains(&0b1110));
        assert!(state_sum_sequences(0).is_err());
    }

    #[test]
    fn n3_sum() {
        let c = 30;
        let want = MultiSeries::from_terms(
            [
                (0, 0),
                (2, 0),
                (4, 2),
                (6, 4),
                (8, 3),
                (8, 4),
                (10, 5),
                (12, 5),
            ]
            .into_iter()
            .map(|(q, t)| (Exponent::qt(q, t), BigInt::from(1))),
            c,
        );
        assert_eq!(state_sum(3, c).unwrap(), want);
    }

    #[test]
    fn models_agree_small() {
        for n in 1..=8 {
            assert_eq!(
                state_sum(n, 200).unwrap(),
                presentation_hilbert(n, 200).unwrap(),
                "n={n}"
            );
        }
    }
}

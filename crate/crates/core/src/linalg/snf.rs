use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::SparseMatrix;
use crate::error::{Error, Result};
use crate::ring::Ring;

/// Nonzero diagonal of the Smith normal form, each dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub elementary_divisors: Vec<BigInt>,
    pub rank: usize,
}

impl SnfResult {
    /// Divisors greater than one: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.elementary_divisors
            .iter()
            .filter(|d| *d > &BigInt::from(1))
            .cloned()
            .collect()
    }
}

/// Smith normal form of an integer matrix.
///
/// Dense elimination; the pivot is always the nonzero entry of least
/// absolute value in the remaining block, ties broken by lowest row then
/// lowest column, so the sequence of operations is reproducible.
pub fn smith_normal_form(m: &SparseMatrix) -> Result<SnfResult> {
    if m.ring() != Ring::Integer {
        return Err(Error::Unsupported(
            "Smith normal form needs an integer matrix",
        ));
    }
    let mut a = m.to_dense();
    let (rows, cols) = (m.rows(), m.cols());
    let mut divisors = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        let Some((pi, pj)) = pivot(&a, k) else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        if !clear_cross(&mut a, k) {
            continue;
        }
        if let Some(i) = indivisible_row(&a, k) {
            // pulls the offending entries into row k; the next pass shrinks
            // the pivot
            let (head, tail) = a.split_at_mut(i);
            for (dst, src) in head[k].iter_mut().zip(&tail[0]) {
                *dst += src;
            }
            continue;
        }
        divisors.push(a[k][k].abs());
        k += 1;
    }
    Ok(SnfResult {
        rank: divisors.len(),
        elementary_divisors: divisors,
    })
}

fn pivot(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            let mag = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| mag < *b) {
                best = Some((i, j, mag));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Reduces column `k` below and row `k` right of the pivot by the pivot.
/// Returns true when both became zero, false when a remainder survived
/// (the caller then picks a smaller pivot).
fn clear_cross(a: &mut [Vec<BigInt>], k: usize) -> bool {
    let p = a[k][k].clone();
    let mut clean = true;
    for i in k + 1..a.len() {
        if a[i][k].is_zero() {
            continue;
        }
        let q = a[i][k].div_floor(&p);
        let (head, tail) = a.split_at_mut(i);
        for (dst, src) in tail[0].iter_mut().zip(&head[k]).skip(k) {
            *dst -= &q * src;
        }
        clean &= tail[0][k].is_zero();
    }
    for j in k + 1..a[k].len() {
        if a[k][j].is_zero() {
            continue;
        }
        let q = a[k][j].div_floor(&p);
        for row in a.iter_mut().skip(k) {
            let d = &q * &row[k];
            row[j] -= d;
        }
        clean &= a[k][j].is_zero();
    }
    clean
}

fn indivisible_row(a: &[Vec<BigInt>], k: usize) -> Option<usize> {
    let p = &a[k][k];
    (k + 1..a.len()).find(|&i| a[i].iter().skip(k + 1).any(|v| !v.is_multiple_of(p)))
}

//! Exact sparse matrices with ranks over `ℚ` and `ℤ/p`, Smith normal form
//! over `ℤ` and a dense solver over fields.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ring::Ring;

mod snf;

pub use snf::{smith_normal_form, SnfResult};

/// Sparse matrix with integer entries tagged by a coefficient ring. Over
/// `ℤ/p` entries are stored reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize, ring: Ring) -> Self {
        SparseMatrix {
            rows,
            cols,
            ring,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_triplets<I>(rows: usize, cols: usize, ring: Ring, triplets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = Self::new(rows, cols, ring);
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(Error::OutOfRange {
                    what: "matrix index",
                    value: r.max(c) as i64,
                    min: 0,
                    max: rows.max(cols) as i64 - 1,
                });
            }
            m.add_to(r, c, v);
        }
        Ok(m)
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        let mut m = Self::new(n, n, ring);
        for i in 0..n {
            m.add_to(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.entries.get(&(r, c)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    /// Adds `v` to entry `(r, c)`.
    pub fn add_to(&mut self, r: usize, c: usize, v: BigInt) {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        let slot = self.entries.entry((r, c)).or_default();
        *slot += v;
        if let Ring::Prime(p) = self.ring {
            *slot = slot.mod_floor(&BigInt::from(p));
        }
        if slot.is_zero() {
            self.entries.remove(&(r, c));
        }
    }

    /// The same entries viewed over another ring.
    pub fn with_ring(&self, ring: Ring) -> Self {
        let mut m = Self::new(self.rows, self.cols, ring);
        for (&(r, c), v) in &self.entries {
            m.add_to(r, c, v.clone());
        }
        m
    }

    pub fn transpose(&self) -> Self {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            ring: self.ring,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::OutOfRange {
                what: "inner dimension",
                value: other.rows as i64,
                min: self.cols as i64,
                max: self.cols as i64,
            });
        }
        let mut by_row: BTreeMap<usize, Vec<(usize, &BigInt)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut out = Self::new(self.rows, other.cols, self.ring);
        for (&(r, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(c, b) in row {
                    out.add_to(r, c, a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::OutOfRange {
                what: "matrix shape",
                value: other.rows as i64,
                min: self.rows as i64,
                max: self.rows as i64,
            });
        }
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_to(r, c, v.clone());
        }
        Ok(out)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    fn row_maps(&self) -> Vec<BTreeMap<usize, BigInt>> {
        let mut rows = vec![BTreeMap::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].insert(c, v.clone());
        }
        rows
    }
}

/// Rank over `ℚ` or `ℤ/p`. Entries are read as integers and reduced into
/// the field.
pub fn rank_over_field(m: &SparseMatrix, field: Ring) -> Result<usize> {
    match field {
        Ring::Rational => Ok(rank_rational(m.row_maps())),
        Ring::Prime(p) => Ok(rank_mod_p(m, p)),
        Ring::Integer => Err(Error::NotAField),
    }
}

/// Rank over `ℚ` for integer and rational matrices, over `ℤ/p` otherwise.
pub fn rank(m: &SparseMatrix) -> usize {
    match m.ring {
        Ring::Integer | Ring::Rational => rank_rational(m.row_maps()),
        Ring::Prime(p) => rank_mod_p(m, p),
    }
}

fn content(row: &BTreeMap<usize, BigInt>) -> BigInt {
    row.values().fold(BigInt::zero(), |g, v| g.gcd(v))
}

/// Fraction-free row reduction; each reduced row is divided by its content
/// to keep entries small.
fn rank_rational(rows: Vec<BTreeMap<usize, BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, BTreeMap<usize, BigInt>> = BTreeMap::new();
    for mut r in rows {
        while let Some((&c, _)) = r.first_key_value() {
            let Some(pr) = pivots.get(&c) else {
                pivots.insert(c, r);
                break;
            };
            let a = pr[&c].clone();
            let b = r[&c].clone();
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (&k, v) in &r {
                next.insert(k, v * &a);
            }
            for (&k, v) in pr {
                let slot = next.entry(k).or_default();
                *slot -= v * &b;
            }
            next.retain(|_, v| !v.is_zero());
            let g = content(&next);
            if !g.is_zero() && !g.is_one() {
                for v in next.values_mut() {
                    *v /= &g;
                }
            }
            r = next;
        }
    }
    pivots.len()
}

fn pow_mod(mut b: u128, mut e: u128, p: u128) -> u128 {
    let mut r = 1u128;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn to_mod(v: &BigInt, p: u64) -> u128 {
    v.mod_floor(&BigInt::from(p))
        .to_u128()
        .expect("reduced below p")
}

fn rank_mod_p(m: &SparseMatrix, p: u64) -> usize {
    let pp = p as u128;
    let mut pivots: BTreeMap<usize, BTreeMap<usize, u128>> = BTreeMap::new();
    for row in m.row_maps() {
        let mut r: BTreeMap<usize, u128> = row
            .iter()
            .map(|(&c, v)| (c, to_mod(v, p)))
            .filter(|(_, v)| *v != 0)
            .collect();
        while let Some((&c, &lead)) = r.first_key_value() {
            match pivots.get(&c) {
                Some(pr) => {
                    // pivot rows are monic
                    for (&k, &v) in pr {
                        let slot = r.entry(k).or_insert(0);
                        *slot = (*slot + pp - lead * v % pp) % pp;
                    }
                    r.retain(|_, v| *v != 0);
                }
                None => {
                    let inv = pow_mod(lead, pp - 2, pp);
                    for v in r.values_mut() {
                        *v = *v * inv % pp;
                    }
                    pivots.insert(c, r);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Solves `m · x = b` over a field. Free variables are set to zero.
/// Returns `None` when the system is inconsistent.
pub fn solve(m: &SparseMatrix, b: &[BigRational], field: Ring) -> Result<Option<Vec<BigRational>>> {
    if b.len() != m.rows {
        return Err(Error::OutOfRange {
            what: "right-hand side length",
            value: b.len() as i64,
            min: m.rows as i64,
            max: m.rows as i64,
        });
    }
    match field {
        Ring::Integer => Err(Error::NotAField),
        Ring::Rational => {
            let mut a: Vec<Vec<BigRational>> = m
                .to_dense()
                .into_iter()
                .map(|row| row.into_iter().map(BigRational::from_integer).collect())
                .collect();
            for (row, v) in a.iter_mut().zip(b) {
                row.push(v.clone());
            }
            Ok(gauss_solve(a, m.cols, |x| x.is_zero(), |x| x.recip()))
        }
        Ring::Prime(p) => {
            let pb = BigInt::from(p);
            let red =
                |x: BigRational| -> Option<BigRational> { crate::dga::reduce_coeff(field, x) };
            let mut a: Vec<Vec<BigRational>> = Vec::with_capacity(m.rows);
            for (row, v) in m.to_dense().into_iter().zip(b) {
                let mut out: Vec<BigRational> = row
                    .into_iter()
                    .map(|x| BigRational::from_integer(x.mod_floor(&pb)))
                    .collect();
                out.push(red(v.clone()).ok_or(Error::NotInvertible)?);
                a.push(out);
            }
            let inv = |x: &BigRational| {
                let i = crate::dga::mod_inverse(&x.to_integer(), &pb).expect("nonzero mod p");
                BigRational::from_integer(i)
            };
            let sol = gauss_solve_mod(a, m.cols, &pb, inv);
            Ok(sol)
        }
    }
}

fn gauss_solve(
    mut a: Vec<Vec<BigRational>>,
    cols: usize,
    is_zero: impl Fn(&BigRational) -> bool,
    recip: impl Fn(&BigRational) -> BigRational,
) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, pr);
        let inv = recip(&a[r][c]);
        for v in a[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !is_zero(&a[i][c]) {
                let f = a[i][c].clone();
                let pivot = a[r][c..].to_vec();
                for (v, pv) in a[i][c..].iter_mut().zip(&pivot) {
                    *v -= &f * pv;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !is_zero(&a[i][cols])) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

fn gauss_solve_mod(
    mut a: Vec<Vec<BigRational>>,
    cols: usize,
    p: &BigInt,
    inv: impl Fn(&BigRational) -> BigRational,
) -> Option<Vec<BigRational>> {
    let reduce = |x: &BigRational| BigRational::from_integer(x.to_integer().mod_floor(p));
    let rows = a.len();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pr);
        let iv = inv(&a[r][c]);
        for v in a[r].iter_mut() {
            *v = reduce(&(&*v * &iv));
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot = a[r][c..].to_vec();
                for (v, pv) in a[i][c..].iter_mut().zip(&pivot) {
                    *v = reduce(&(&*v - &f * pv));
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if (r..rows).any(|i| !a[i][cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

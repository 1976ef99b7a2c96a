use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Sub};

/// Bigrading `(q, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bidegree {
    pub q: u32,
    pub t: u32,
}

impl Bidegree {
    pub const fn new(q: u32, t: u32) -> Self {
        Bidegree { q, t }
    }

    pub const fn of_x(k: u32) -> Self {
        Bidegree::new(2 * k + 2, 2 * k)
    }

    pub const fn of_xi(i: u32) -> Self {
        Bidegree::new(2 * i + 4, 2 * i + 1)
    }

    /// Adds a signed shift, `None` if a component would go negative.
    pub fn shifted(self, dq: i32, dt: i32) -> Option<Self> {
        let q = self.q as i64 + dq as i64;
        let t = self.t as i64 + dt as i64;
        (q >= 0 && t >= 0).then(|| Bidegree::new(q as u32, t as u32))
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.q + o.q, self.t + o.t)
    }
}

impl Sub for Bidegree {
    type Output = Option<Bidegree>;
    fn sub(self, o: Bidegree) -> Option<Bidegree> {
        Some(Bidegree::new(
            self.q.checked_sub(o.q)?,
            self.t.checked_sub(o.t)?,
        ))
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}t^{}", self.q, self.t)
    }
}

/// `x^a · ξ_S` with `S` strictly increasing.
///
/// The exponent vector is kept without trailing zeros so equal monomials
/// have equal representations.
///
/// Ordering (the canonical basis order): total x-degree ascending, then
/// x-exponent vectors lexicographically descending, then the ξ index list
/// ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    x: Vec<u32>,
    xi: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn x(k: u32) -> Self {
        Monomial::x_pow(k, 1)
    }

    pub fn x_pow(k: u32, e: u32) -> Self {
        let mut x = alloc::vec![0; k as usize + 1];
        x[k as usize] = e;
        Monomial::new(x, Vec::new()).expect("valid")
    }

    pub fn xi(i: u32) -> Self {
        Monomial {
            x: Vec::new(),
            xi: alloc::vec![i],
        }
    }

    /// `None` if `xi` is not strictly increasing.
    pub fn new(mut x: Vec<u32>, xi: Vec<u32>) -> Option<Self> {
        if xi.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        while x.last() == Some(&0) {
            x.pop();
        }
        Some(Monomial { x, xi })
    }

    /// Builds from a sorted-or-not list of odd indices, returning the sign
    /// of the sorting permutation, or `None` if an index repeats.
    pub fn with_unsorted_xi(x: Vec<u32>, xi: &[u32]) -> Option<(Self, i32)> {
        let mut v: Vec<u32> = xi.to_vec();
        let mut sign = 1;
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        Monomial::new(x, v).map(|m| (m, sign))
    }

    pub fn x_exponents(&self) -> &[u32] {
        &self.x
    }

    pub fn xi_set(&self) -> &[u32] {
        &self.xi
    }

    pub fn x_exponent(&self, k: u32) -> u32 {
        self.x.get(k as usize).copied().unwrap_or(0)
    }

    pub fn x_degree(&self) -> u32 {
        self.x.iter().sum()
    }

    pub fn xi_degree(&self) -> usize {
        self.xi.len()
    }

    pub fn is_even(&self) -> bool {
        self.xi.is_empty()
    }

    pub fn bidegree(&self) -> Bidegree {
        let mut d = Bidegree::default();
        for (k, &e) in self.x.iter().enumerate() {
            let g = Bidegree::of_x(k as u32);
            d = d + Bidegree::new(g.q * e, g.t * e);
        }
        for &i in &self.xi {
            d = d + Bidegree::of_xi(i);
        }
        d
    }

    /// Largest generator index used, if any.
    pub fn max_index(&self) -> Option<u32> {
        let x = self.x.len().checked_sub(1).map(|k| k as u32);
        let xi = self.xi.last().copied();
        x.max(xi)
    }

    /// Smallest generator index used, if any.
    pub fn min_index(&self) -> Option<u32> {
        let x = self.x.iter().position(|&e| e > 0).map(|k| k as u32);
        let xi = self.xi.first().copied();
        match (x, xi) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Graded-commutative product with its sign; `None` when a ξ repeats.
    pub fn mul(&self, other: &Monomial) -> Option<(Monomial, i32)> {
        let mut x = self.x.clone();
        if other.x.len() > x.len() {
            x.resize(other.x.len(), 0);
        }
        for (k, &e) in other.x.iter().enumerate() {
            x[k] += e;
        }
        let mut xi = Vec::with_capacity(self.xi.len() + other.xi.len());
        let mut swaps = 0usize;
        let (mut i, mut j) = (0, 0);
        while i < self.xi.len() || j < other.xi.len() {
            if j == other.xi.len() || (i < self.xi.len() && self.xi[i] < other.xi[j]) {
                xi.push(self.xi[i]);
                i += 1;
            } else if i == self.xi.len() || other.xi[j] < self.xi[i] {
                // moves past every remaining factor of `self`
                swaps += self.xi.len() - i;
                xi.push(other.xi[j]);
                j += 1;
            } else {
                return None;
            }
        }
        let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
        Some((Monomial { x, xi }, sign))
    }

    /// Removes the `j`-th odd factor (0-based), returning the rest.
    pub fn without_xi(&self, j: usize) -> Monomial {
        let mut xi = self.xi.clone();
        xi.remove(j);
        Monomial {
            x: self.x.clone(),
            xi,
        }
    }

    /// Multiplies by an even monomial given as an exponent vector.
    pub fn times_x(&self, x: &[u32]) -> Monomial {
        let mut out = self.x.clone();
        if x.len() > out.len() {
            out.resize(x.len(), 0);
        }
        for (k, &e) in x.iter().enumerate() {
            out[k] += e;
        }
        Monomial::new(out, self.xi.clone()).expect("xi unchanged")
    }

    /// Divides out one power of `x_k`; `None` if absent.
    pub fn lower_x(&self, k: u32) -> Option<Monomial> {
        let e = self.x_exponent(k);
        if e == 0 {
            return None;
        }
        let mut x = self.x.clone();
        x[k as usize] -= 1;
        Monomial::new(x, self.xi.clone())
    }

    /// Applies index maps to x and ξ generators, returning the sign of
    /// re-sorting the odd part. Either map may reject an index.
    pub fn relabel(
        &self,
        fx: impl Fn(u32) -> Option<u32>,
        fxi: impl Fn(u32) -> Option<u32>,
    ) -> Option<(Monomial, i32)> {
        let mut x = Vec::new();
        for (k, &e) in self.x.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let nk = fx(k as u32)? as usize;
            if x.len() <= nk {
                x.resize(nk + 1, 0);
            }
            x[nk] += e;
        }
        let xi: Option<Vec<u32>> = self.xi.iter().map(|&i| fxi(i)).collect();
        Monomial::with_unsorted_xi(x, &xi?)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x_degree()
            .cmp(&other.x_degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.xi.cmp(&other.xi))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x0^2*x1*xi0*xi3`, or `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            Ok(())
        };
        for (k, &e) in self.x.iter().enumerate() {
            match e {
                0 => {}
                1 => {
                    sep(f)?;
                    write!(f, "x{k}")?
                }
                _ => {
                    sep(f)?;
                    write!(f, "x{k}^{e}")?
                }
            }
        }
        for &i in &self.xi {
            sep(f)?;
            write!(f, "xi{i}")?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn product_signs() {
        let (m, s) = Monomial::xi(1).mul(&Monomial::xi(0)).unwrap();
        assert_eq!(m.xi_set(), &[0, 1]);
        assert_eq!(s, -1);
        let (_, s) = Monomial::xi(0).mul(&Monomial::xi(1)).unwrap();
        assert_eq!(s, 1);
        assert!(Monomial::xi(2).mul(&Monomial::xi(2)).is_none());
        let a = Monomial::new(vec![], vec![1, 3]).unwrap();
        let b = Monomial::new(vec![], vec![0, 2]).unwrap();
        // (ξ1ξ3)(ξ0ξ2) = ξ1ξ3ξ0ξ2 → three transpositions
        assert_eq!(a.mul(&b).unwrap().1, -1);
    }

    #[test]
    fn bidegree_identity() {
        let m = Monomial::new(vec![2, 0, 1], vec![0, 3]).unwrap();
        let d = m.bidegree();
        assert_eq!(d, Bidegree::new(4 + 6 + 4 + 10, 4 + 1 + 7));
        assert_eq!(d.q - d.t, 2 * m.x_degree() + 3 * m.xi_degree() as u32);
    }

    #[test]
    fn trimmed_representation() {
        assert_eq!(Monomial::new(vec![1, 0, 0], vec![]), Some(Monomial::x(0)));
        assert!(Monomial::new(vec![], vec![2, 1]).is_none());
    }

    #[test]
    fn display() {
        let m = Monomial::new(vec![2, 1], vec![0, 3]).unwrap();
        assert_eq!(alloc::format!("{m}"), "x0^2*x1*xi0*xi3");
        assert_eq!(alloc::format!("{}", Monomial::one()), "1");
    }
}

//! Coefficient rings.

use core::fmt;

use crate::error::{Error, Result};

/// Coefficient ring of a matrix, element or homology table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ring {
    Integer,
    Rational,
    /// `ℤ/p`, `p` prime.
    Prime(u64),
}

impl Ring {
    /// `ℤ/p`, checking that `p` is prime.
    pub fn prime(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, Ring::Integer)
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Ring::Prime(p) => p,
            _ => 0,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integer => f.write_str("Z"),
            Ring::Rational => f.write_str("Q"),
            Ring::Prime(p) => write!(f, "Z/{p}"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let small: alloc::vec::Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(Ring::prime(9), Err(Error::NotPrime(9)));
        assert_eq!(Ring::prime(7), Ok(Ring::Prime(7)));
    }
}

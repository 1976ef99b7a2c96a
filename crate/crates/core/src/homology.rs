//! Bigraded homology tables.
//!
//! Homology at `(q, t)` uses the outgoing map `C(q,t) → C((q,t)+shift)` and
//! the incoming map `C((q,t)−shift) → C(q,t)`, where `shift` is `(0,−1)` for
//! `d₂` and `(−2,−1)` for `d₁`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::dga::{differential_matrix, enumerate_basis, Bidegree, DifferentialSpec, GeneratorSpec};
use crate::error::{Error, Result};
use crate::linalg::{rank_over_field, smith_normal_form};
use crate::ring::Ring;
use crate::series::{Exponent, MultiSeries};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyEntry {
    pub betti: usize,
    /// Elementary divisors greater than one; only filled over `ℤ`.
    pub torsion: Vec<BigInt>,
}

impl HomologyEntry {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

/// Homology for all bidegrees with `q ≤ q_max`; trivial entries are not
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub spec: GeneratorSpec,
    pub diff: DifferentialSpec,
    pub ring: Ring,
    pub q_max: u32,
    pub entries: BTreeMap<Bidegree, HomologyEntry>,
}

impl HomologyTable {
    pub fn get(&self, deg: Bidegree) -> HomologyEntry {
        self.entries.get(&deg).cloned().unwrap_or_default()
    }

    pub fn betti(&self, q: u32, t: u32) -> usize {
        self.entries
            .get(&Bidegree::new(q, t))
            .map_or(0, |e| e.betti)
    }

    /// `Σ_t (−1)^t betti(q, t)`.
    pub fn euler_column(&self, q: u32) -> Result<i64> {
        if q > self.q_max {
            return Err(Error::IncompleteColumn {
                q,
                q_max: self.q_max,
            });
        }
        Ok(self
            .entries
            .range(Bidegree::new(q, 0)..=Bidegree::new(q, u32::MAX))
            .map(|(d, e)| {
                if d.t % 2 == 0 {
                    e.betti as i64
                } else {
                    -(e.betti as i64)
                }
            })
            .sum())
    }

    /// Poincaré series `Σ betti · q^q t^t` with cutoff `q_max`.
    pub fn to_series(&self) -> MultiSeries {
        MultiSeries::from_terms(
            self.entries
                .iter()
                .filter(|(_, e)| e.betti > 0)
                .map(|(d, e)| (Exponent::qt(d.q, d.t), BigInt::from(e.betti))),
            self.q_max,
        )
    }
}

/// Rank of the differential leaving `deg`, over `ℚ` for `ℤ` coefficients.
pub fn differential_rank(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    deg: Bidegree,
    ring: Ring,
) -> Result<usize> {
    let field = if ring.is_field() {
        ring
    } else {
        Ring::Rational
    };
    rank_over_field(&differential_matrix(spec, diff, deg, field), field)
}

/// Source bidegree of the map landing in `deg`.
fn incoming_source(diff: &DifferentialSpec, deg: Bidegree) -> Bidegree {
    let (dq, dt) = diff.shift();
    deg.shifted(-dq, -dt).expect("shifts only raise degrees")
}

pub fn homology_table(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    ring: Ring,
    q_max: u32,
) -> Result<HomologyTable> {
    let mut ranks: BTreeMap<Bidegree, usize> = BTreeMap::new();
    let mut rank_at = |deg: Bidegree| -> Result<usize> {
        if let Some(&r) = ranks.get(&deg) {
            return Ok(r);
        }
        let r = differential_rank(spec, diff, deg, ring)?;
        ranks.insert(deg, r);
        Ok(r)
    };
    let mut entries = BTreeMap::new();
    for q in 0..=q_max {
        for t in 0..=q {
            let deg = Bidegree::new(q, t);
            let dim = enumerate_basis(spec, deg).len();
            if dim == 0 {
                continue;
            }
            let src = incoming_source(diff, deg);
            let betti = dim - rank_at(deg)? - rank_at(src)?;
            let torsion = if ring == Ring::Integer {
                incoming_torsion(spec, diff, deg)?
            } else {
                Vec::new()
            };
            let e = HomologyEntry { betti, torsion };
            if !e.is_trivial() {
                entries.insert(deg, e);
            }
        }
    }
    Ok(HomologyTable {
        spec: *spec,
        diff: *diff,
        ring,
        q_max,
        entries,
    })
}

fn incoming_torsion(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    deg: Bidegree,
) -> Result<Vec<BigInt>> {
    let src = incoming_source(diff, deg);
    let m = differential_matrix(spec, diff, src, Ring::Integer);
    Ok(smith_normal_form(&m)?.torsion())
}

/// Torsion of the integral homology at `deg` for the standard `d₂`.
///
/// The cycles at `deg` form a saturated sublattice, so the torsion of
/// cycles modulo boundaries is the torsion of the incoming map's cokernel.
pub fn torsion_at(spec: &GeneratorSpec, deg: Bidegree) -> Result<Vec<BigInt>> {
    incoming_torsion(spec, &DifferentialSpec::STANDARD, deg)
}

/// Per-q Euler characteristics as a series in `q`.
pub fn euler_series(table: &HomologyTable) -> Result<MultiSeries> {
    let mut terms = Vec::new();
    for q in 0..=table.q_max {
        terms.push((Exponent::qt(q, 0), BigInt::from(table.euler_column(q)?)));
    }
    Ok(MultiSeries::from_terms(terms, table.q_max))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_small_table() {
        let s = GeneratorSpec::unreduced(2);
        let t = homology_table(&s, &DifferentialSpec::STANDARD, Ring::Rational, 12).unwrap();
        assert_eq!(t.betti(0, 0), 1);
        assert_eq!(t.betti(2, 0), 1);
        assert_eq!(t.betti(4, 0), 0);
        assert_eq!(t.euler_column(2).unwrap(), 1);
        assert_eq!(t.euler_column(6).unwrap(), 0);
        assert!(t.euler_column(13).is_err());
    }

    #[test]
    fn unimodular_has_no_torsion() {
        let s = GeneratorSpec::unreduced(2);
        assert!(torsion_at(&s, Bidegree::new(4, 0)).unwrap().is_empty());
    }
}

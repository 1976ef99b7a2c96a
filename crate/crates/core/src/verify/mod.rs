//! Explicit elements, identities and consistency checks, each reported as
//! a [`CheckReport`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;

mod chain;
mod combinatorics;
mod elements;

pub use chain::{
    anticommutation_check, euler_check, euler_closed_form, euler_product, generic_contrast,
    reduction_check, square_zero_check,
};
pub use combinatorics::{
    presentation_hilbert, presentation_max_mu_degree, presentation_monomials, state_sum,
    state_sum_sequences, MAX_STATE_SUM_LENGTH,
};
pub use elements::{
    epsilon, is_boundary, lee_identity_check, mu_cycle, potential_identity_check, relation_element,
    relation_preimage, relation_range, torsion_witness, torsion_witness_check,
    verify_relation_boundary, RelationKind,
};

use crate::series::MultiSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// Offending data on failure, supporting detail on success.
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(check: &str) -> Self {
        CheckReport {
            check: check.into(),
            params: BTreeMap::new(),
            verdict: Verdict::Pass,
            witness: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl fmt::Display) -> Self {
        self.params.insert(key.into(), value.to_string());
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn pass_with(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Pass;
        self.witness = Some(witness.into());
        self
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.verdict = Verdict::Fail;
        self.witness = Some(witness.into());
        self
    }

    /// Fails with `witness` unless `ok`.
    pub fn require(self, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok || !self.passed() {
            self
        } else {
            self.fail(witness())
        }
    }
}

/// Coefficientwise comparison inside the window `q ≤ q_max`, `t ≤ t_max`.
/// Both series must be known at least up to `q_max`.
pub fn compare_series(
    name: &str,
    lhs: &MultiSeries,
    rhs: &MultiSeries,
    q_max: u32,
    t_max: Option<u32>,
) -> CheckReport {
    let mut report = CheckReport::new(name).param("q_max", q_max);
    if let Some(t) = t_max {
        report = report.param("t_max", t);
    }
    let known = lhs.cutoff().min(rhs.cutoff());
    if known < q_max {
        return report.fail(format!("series only known up to q^{known}"));
    }
    let inside = |s: &MultiSeries| {
        MultiSeries::from_terms(
            s.terms()
                .filter(|(e, _)| t_max.is_none_or(|t| e.t <= t))
                .map(|(e, c)| (*e, c.clone())),
            q_max,
        )
    };
    let (l, r) = (inside(lhs), inside(rhs));
    match crate::series::formulas::first_difference(&l, &r) {
        None => report.pass_with(format!("{} terms agree", l.len())),
        Some((e, a, b)) => report.fail(format!(
            "a^{} q^{} t^{}: left {} right {}",
            e.a, e.q, e.t, a, b
        )),
    }
}

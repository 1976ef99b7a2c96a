//! Named series for `khalg series` and `series:` sources.

use std::fmt;
use std::str::FromStr;

use khalg_core::series::{
    appendix_series, bosonic_full, bosonic_lower, bosonic_reduced, fermionic_limit,
    fermionic_recursive, krr_side, rr_side, z2_closed_form, KrrSide, RrSide, Variant,
};
use khalg_core::verify::{presentation_hilbert, state_sum};
use khalg_core::{Error, MultiSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    Pn,
    PnRed,
    Ln,
    Z2,
    FermionN,
    FermionLimit,
    RrLeft,
    RrRight,
    KrrA,
    KrrB,
    Appendix,
    AppendixReduced,
    StateSum,
    Presentation,
}

const NAMES: &[(&str, Formula)] = &[
    ("pn", Formula::Pn),
    ("pnred", Formula::PnRed),
    ("ln", Formula::Ln),
    ("z2", Formula::Z2),
    ("fermion-n", Formula::FermionN),
    ("fermion-limit", Formula::FermionLimit),
    ("rr-left", Formula::RrLeft),
    ("rr-right", Formula::RrRight),
    ("krr-a", Formula::KrrA),
    ("krr-b", Formula::KrrB),
    ("appendix", Formula::Appendix),
    ("appendix-reduced", Formula::AppendixReduced),
    ("state-sum", Formula::StateSum),
    ("presentation", Formula::Presentation),
];

impl FromStr for Formula {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        NAMES
            .iter()
            .find(|(name, _)| *name == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| {
                let all: Vec<&str> = NAMES.iter().map(|(n, _)| *n).collect();
                format!("unknown formula `{s}`; one of {}", all.join(", "))
            })
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = NAMES
            .iter()
            .find(|(_, g)| g == self)
            .map(|(n, _)| *n)
            .unwrap_or("?");
        f.write_str(name)
    }
}

impl Formula {
    pub fn needs_n(self) -> bool {
        !matches!(
            self,
            Formula::FermionLimit
                | Formula::RrLeft
                | Formula::RrRight
                | Formula::KrrA
                | Formula::KrrB
        )
    }
}

#[derive(Debug)]
pub enum FormulaError {
    MissingN(Formula),
    Core(Error),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::MissingN(k) => write!(f, "formula {k} needs --n"),
            FormulaError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FormulaError {}

pub fn evaluate(formula: Formula, n: Option<u32>, q_max: u32) -> Result<MultiSeries, FormulaError> {
    let n = match (formula.needs_n(), n) {
        (true, None) => return Err(FormulaError::MissingN(formula)),
        (_, n) => n.unwrap_or(0),
    };
    let c = q_max;
    let r = match formula {
        Formula::Pn => bosonic_full(n, c),
        Formula::PnRed => bosonic_reduced(n, c),
        Formula::Ln => bosonic_lower(n, c),
        Formula::Z2 => z2_closed_form(n, c),
        Formula::FermionN => fermionic_recursive(n, c),
        Formula::FermionLimit => Ok(fermionic_limit(c)),
        Formula::RrLeft => Ok(rr_side(RrSide::Left, c)),
        Formula::RrRight => Ok(rr_side(RrSide::Right, c)),
        Formula::KrrA => Ok(krr_side(KrrSide::A, c)),
        Formula::KrrB => Ok(krr_side(KrrSide::B, c)),
        Formula::Appendix => appendix_series(n, Variant::Unreduced, c),
        Formula::AppendixReduced => appendix_series(n, Variant::Reduced, c),
        Formula::StateSum => state_sum(n, c),
        Formula::Presentation => presentation_hilbert(n, c),
    };
    r.map_err(FormulaError::Core)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for (name, f) in NAMES {
            assert_eq!(name.parse::<Formula>().unwrap(), *f);
            assert_eq!(f.to_string(), *name);
        }
        assert!("pm".parse::<Formula>().is_err());
    }

    #[test]
    fn n_required() {
        assert!(matches!(
            evaluate(Formula::Pn, None, 10),
            Err(FormulaError::MissingN(_))
        ));
        assert!(evaluate(Formula::RrLeft, None, 10).is_ok());
        assert!(matches!(
            evaluate(Formula::Appendix, Some(9), 10),
            Err(FormulaError::Core(_))
        ));
    }
}

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two series with different q-cutoffs were combined.
    CutoffMismatch {
        left: u32,
        right: u32,
    },
    /// `1 ∓ m` with `m` of q-degree zero has no truncated inverse.
    NotInvertible,
    /// A substitution that needs `a`-free input saw an `a` exponent.
    NonzeroAGrading,
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    Inhomogeneous,
    OddGeneratorsPresent,
    GeneratorOutOfRange {
        index: u32,
        n: u32,
    },
    NotAField,
    NotPrime(u64),
    IncompleteColumn {
        q: u32,
        q_max: u32,
    },
    Unsupported(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CutoffMismatch { left, right } => {
                write!(f, "series cutoffs differ ({left} vs {right})")
            }
            Error::NotInvertible => {
                f.write_str("factor with zero q-degree has no truncated inverse")
            }
            Error::NonzeroAGrading => f.write_str("series carries a nonzero a-grading"),
            Error::OutOfRange {
                what,
                value,
                min,
                max,
            } => {
                write!(f, "{what} = {value} outside [{min}, {max}]")
            }
            Error::Inhomogeneous => f.write_str("element is not homogeneous"),
            Error::OddGeneratorsPresent => f.write_str("element contains odd generators"),
            Error::GeneratorOutOfRange { index, n } => {
                write!(f, "generator index {index} not present for n = {n}")
            }
            Error::NotAField => f.write_str("operation needs a field (Q or Z/p)"),
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::IncompleteColumn { q, q_max } => {
                write!(f, "column q = {q} lies beyond the table's q_max = {q_max}")
            }
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;

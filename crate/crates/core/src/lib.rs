//! Exact algebra behind the Koszul model of stable Khovanov homology of
//! torus knots `T(n, ∞)`.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`series`]: truncated trigraded power series in `a`, `q`, `t` with
//!   big-integer coefficients, and every closed-form or recursive Poincaré
//!   series of the model (bosonic, fermionic, Rogers–Ramanujan type);
//! * [`dga`]: the free graded-commutative algebra on `x_k` (even) and
//!   `ξ_k` (odd), its monomial bases per bidegree and the matrices of the
//!   differentials `d₂`, generic `d₂′` and the Lee differential `d₁`;
//! * [`linalg`]: sparse exact matrices, ranks over `ℚ` and `ℤ/p`, Smith
//!   normal form over `ℤ`;
//! * [`homology`]: bigraded homology tables with torsion;
//! * [`verify`]: explicit cycles, relations, the torsion witness, the
//!   state-sum model and table comparison, each producing a [`CheckReport`].
//!
//! [`CheckReport`]: verify::CheckReport
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod dga;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod ring;
pub mod series;
pub mod verify;

pub use dga::{Bidegree, DifferentialKind, DifferentialSpec, Element, GeneratorSpec, Monomial};
pub use error::{Error, Result};
pub use homology::{HomologyEntry, HomologyTable};
pub use linalg::{SnfResult, SparseMatrix};
pub use ring::Ring;
pub use series::{Exponent, MultiSeries};

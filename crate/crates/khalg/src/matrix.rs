//! Sparse triplet export of differential matrices.
//!
//! ```text
//! # spec n=3
//! # diff standard
//! # bidegree q^8t^3 -> q^8t^2
//! # ring Q
//! # basis sha256 <hex>
//! rows 4 cols 2 nnz 3
//! 0 0 1
//! ...
//! ```
//!
//! Rows index the target basis and columns the source basis, both in the
//! library's monomial order. The hash covers the source basis, one monomial
//! per line, then a `--` line, then the target basis.

use std::fmt::Write as _;

use khalg_core::dga::{differential_matrix, enumerate_basis};
use khalg_core::{Bidegree, DifferentialSpec, GeneratorSpec, Monomial, Ring};

use crate::fixtures::sha256_hex;

pub fn basis_hash(source: &[Monomial], target: &[Monomial]) -> String {
    let mut s = String::new();
    for m in source {
        writeln!(s, "{m}").unwrap();
    }
    s.push_str("--\n");
    for m in target {
        writeln!(s, "{m}").unwrap();
    }
    sha256_hex(s.as_bytes())
}

/// Export of the map leaving `deg`. With `with_basis` the two bases are
/// listed as comment lines after the header.
pub fn export(
    spec: &GeneratorSpec,
    diff: &DifferentialSpec,
    deg: Bidegree,
    ring: Ring,
    with_basis: bool,
) -> Option<String> {
    let (dq, dt) = diff.shift();
    let target_deg = deg.shifted(dq, dt)?;
    let source = enumerate_basis(spec, deg);
    let target = enumerate_basis(spec, target_deg);
    let m = differential_matrix(spec, diff, deg, ring);
    let mut out = String::new();
    writeln!(out, "# spec {spec}").unwrap();
    writeln!(out, "# diff {}", diff.kind).unwrap();
    writeln!(out, "# bidegree {deg} -> {target_deg}").unwrap();
    writeln!(out, "# ring {ring}").unwrap();
    writeln!(out, "# basis sha256 {}", basis_hash(&source, &target)).unwrap();
    if with_basis {
        for (i, b) in source.iter().enumerate() {
            writeln!(out, "# col {i} {b}").unwrap();
        }
        for (i, b) in target.iter().enumerate() {
            writeln!(out, "# row {i} {b}").unwrap();
        }
    }
    writeln!(out, "rows {} cols {} nnz {}", m.rows(), m.cols(), m.nnz()).unwrap();
    for (r, c, v) in m.entries() {
        writeln!(out, "{r} {c} {v}").unwrap();
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_export() {
        let spec = GeneratorSpec::unreduced(2);
        let text = export(
            &spec,
            &DifferentialSpec::STANDARD,
            Bidegree::new(8, 3),
            Ring::Rational,
            true,
        )
        .unwrap();
        assert!(text.contains("# bidegree q^8t^3 -> q^8t^2"));
        assert!(text.contains("rows 1 cols 2 nnz 2"), "{text}");
        assert!(export(
            &spec,
            &DifferentialSpec::STANDARD,
            Bidegree::new(6, 0),
            Ring::Rational,
            false
        )
        .is_none());
        let a = export(
            &spec,
            &DifferentialSpec::STANDARD,
            Bidegree::new(8, 3),
            Ring::Rational,
            false,
        )
        .unwrap();
        let b = export(
            &spec,
            &DifferentialSpec::STANDARD,
            Bidegree::new(8, 3),
            Ring::Rational,
            false,
        )
        .unwrap();
        assert_eq!(a, b);
    }
}

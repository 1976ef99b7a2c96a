//! Operands of `khalg compare`.
//!
//! ```text
//! fixture:t79-rational
//! file:path/to/series.txt           series text, series JSON or table JSON
//! table:n=7,coeff=zp:2,reduced,diff=generic:42
//! series:formula=pn,n=4
//! ```

use khalg_core::homology::homology_table;
use khalg_core::{DifferentialSpec, GeneratorSpec, MultiSeries, Ring};

use crate::fixtures;
use crate::format::{parse_diff, parse_ring, series_from_any};
use crate::formula::{evaluate, Formula};

fn fields(body: &str) -> Vec<(&str, Option<&str>)> {
    body.split(',')
        .filter(|f| !f.is_empty())
        .map(|f| match f.split_once('=') {
            Some((k, v)) => (k, Some(v)),
            None => (f, None),
        })
        .collect()
}

/// Resolves a source to a series known up to at least `q_max`.
pub fn resolve(source: &str, q_max: u32) -> Result<MultiSeries, String> {
    let (kind, body) = source.split_once(':').unwrap_or((source, ""));
    match kind {
        "fixture" => fixtures::get(body)
            .map(|f| f.series())
            .ok_or_else(|| format!("no bundled fixture `{body}`")),
        "file" => {
            let text = std::fs::read_to_string(body).map_err(|e| format!("{body}: {e}"))?;
            series_from_any(&text).map_err(|e| format!("{body}: {e}"))
        }
        "table" => {
            let mut n = None;
            let mut ring = Ring::Rational;
            let mut reduced = false;
            let mut diff = DifferentialSpec::STANDARD;
            for (k, v) in fields(body) {
                match (k, v) {
                    ("n", Some(v)) => {
                        n = Some(v.parse::<u32>().map_err(|_| format!("bad n `{v}`"))?)
                    }
                    ("coeff", Some(v)) => ring = parse_ring(v).map_err(|e| e.to_string())?,
                    ("diff", Some(v)) => diff.kind = parse_diff(v).map_err(|e| e.to_string())?,
                    ("reduced", None) => reduced = true,
                    _ => return Err(format!("unknown table field `{k}`")),
                }
            }
            let n = n.ok_or("table source needs n=")?;
            let spec = GeneratorSpec { n, reduced };
            homology_table(&spec, &diff, ring, q_max)
                .map(|t| t.to_series())
                .map_err(|e| e.to_string())
        }
        "series" => {
            let mut formula = None;
            let mut n = None;
            for (k, v) in fields(body) {
                match (k, v) {
                    ("formula", Some(v)) => formula = Some(v.parse::<Formula>()?),
                    ("n", Some(v)) => {
                        n = Some(v.parse::<u32>().map_err(|_| format!("bad n `{v}`"))?)
                    }
                    _ => return Err(format!("unknown series field `{k}`")),
                }
            }
            let formula = formula.ok_or("series source needs formula=")?;
            evaluate(formula, n, q_max).map_err(|e| e.to_string())
        }
        _ => Err(format!(
            "unknown source kind `{kind}`; use fixture:, file:, table: or series:"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sources_resolve() {
        let a = resolve("series:formula=pn,n=3", 16).unwrap();
        let b = resolve("table:n=3,coeff=q", 16).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            resolve("fixture:t79-z2", 0).unwrap().coefficient_sum(),
            286.into()
        );
        assert!(resolve("table:coeff=q", 10).is_err());
        assert!(resolve("table:n=3,bogus", 10).is_err());
        assert!(resolve("series:n=3", 10).is_err());
        assert!(resolve("nope:x", 10).is_err());
        assert!(resolve("file:/nonexistent/khalg", 10).is_err());
    }
}

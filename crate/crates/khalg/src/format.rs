//! Canonical serialized forms.
//!
//! Series text form: a `cutoff N` line followed by one `q t a coeff` line
//! per nonzero term, sorted by `(q, t, a)`. Lines starting with `#` and
//! blank lines are ignored on input.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use khalg_core::homology::HomologyTable;
use khalg_core::verify::CheckReport;
use khalg_core::{Bidegree, DifferentialKind, Exponent, MultiSeries, Ring};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Debug)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ParseError {}

fn bad(msg: impl Into<String>) -> ParseError {
    ParseError(msg.into())
}

pub fn series_to_text(s: &MultiSeries) -> String {
    let mut out = format!("cutoff {}\n", s.cutoff());
    for (e, c) in s.terms() {
        writeln!(out, "{} {} {} {}", e.q, e.t, e.a, c).unwrap();
    }
    out
}

pub fn series_from_text(text: &str) -> Result<MultiSeries, ParseError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let cutoff = match lines.next() {
        Some((_, l)) => l
            .strip_prefix("cutoff ")
            .and_then(|v| v.trim().parse::<u32>().ok())
            .ok_or_else(|| bad(format!("expected `cutoff N`, found `{l}`")))?,
        None => return Err(bad("empty series")),
    };
    let mut terms = Vec::new();
    for (no, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let [q, t, a, c] = f[..] else {
            return Err(bad(format!("line {}: expected `q t a coeff`", no + 1)));
        };
        let num = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| bad(format!("line {}: bad exponent `{v}`", no + 1)))
        };
        let e = Exponent::new(num(a)?, num(q)?, num(t)?);
        let c = BigInt::from_str(c)
            .map_err(|_| bad(format!("line {}: bad coefficient `{c}`", no + 1)))?;
        terms.push((e, c));
    }
    Ok(MultiSeries::from_terms(terms, cutoff))
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    a: u32,
    q: u32,
    t: u32,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    cutoff: u32,
    terms: Vec<TermJson>,
}

pub fn series_to_json(s: &MultiSeries) -> String {
    let j = SeriesJson {
        cutoff: s.cutoff(),
        terms: s
            .terms()
            .map(|(e, c)| TermJson {
                a: e.a,
                q: e.q,
                t: e.t,
                coeff: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&j).expect("plain data")
}

pub fn series_from_json(text: &str) -> Result<MultiSeries, ParseError> {
    let j: SeriesJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in j.terms {
        let c = BigInt::from_str(&t.coeff)
            .map_err(|_| bad(format!("bad coefficient `{}`", t.coeff)))?;
        terms.push((Exponent::new(t.a, t.q, t.t), c));
    }
    Ok(MultiSeries::from_terms(terms, j.cutoff))
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    q: u32,
    t: u32,
    betti: usize,
    /// Elementary divisors as decimal strings.
    torsion: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    n: u32,
    reduced: bool,
    ring: String,
    diff: String,
    q_max: u32,
    entries: Vec<EntryJson>,
}

pub fn ring_token(r: Ring) -> String {
    match r {
        Ring::Rational => "q".into(),
        Ring::Integer => "int".into(),
        Ring::Prime(p) => format!("zp:{p}"),
    }
}

pub fn parse_ring(token: &str) -> Result<Ring, ParseError> {
    match token {
        "q" | "Q" => Ok(Ring::Rational),
        "int" | "Z" => Ok(Ring::Integer),
        _ => {
            let p = token
                .strip_prefix("zp:")
                .or_else(|| token.strip_prefix("Z/"))
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| {
                    bad(format!(
                        "unknown coefficient ring `{token}`; use q, int or zp:<p>"
                    ))
                })?;
            Ring::prime(p).map_err(|e| bad(e.to_string()))
        }
    }
}

pub fn parse_diff(token: &str) -> Result<DifferentialKind, ParseError> {
    match token {
        "standard" => Ok(DifferentialKind::Standard),
        "lee" => Ok(DifferentialKind::Lee),
        _ => token
            .strip_prefix("generic:")
            .and_then(|s| s.parse::<u64>().ok())
            .map(|seed| DifferentialKind::Generic { seed })
            .ok_or_else(|| {
                bad(format!(
                    "unknown differential `{token}`; use standard, lee or generic:<seed>"
                ))
            }),
    }
}

/// `{"n", "reduced", "ring", "diff", "q_max", "entries": [{q, t, betti, torsion}]}`
/// with entries sorted by `(q, t)`.
pub fn table_to_json(table: &HomologyTable) -> String {
    let j = TableJson {
        n: table.spec.n,
        reduced: table.spec.reduced,
        ring: ring_token(table.ring),
        diff: table.diff.kind.to_string(),
        q_max: table.q_max,
        entries: table
            .entries
            .iter()
            .map(|(d, e)| EntryJson {
                q: d.q,
                t: d.t,
                betti: e.betti,
                torsion: e.torsion.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    serde_json::to_string(&j).expect("plain data")
}

/// Betti numbers of a serialized table as a series; torsion is dropped.
pub fn table_json_to_series(text: &str) -> Result<MultiSeries, ParseError> {
    let j: TableJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    Ok(MultiSeries::from_terms(
        j.entries
            .into_iter()
            .map(|e| (Exponent::qt(e.q, e.t), BigInt::from(e.betti))),
        j.q_max,
    ))
}

/// Reads any of the three file forms: series text, series JSON, table JSON.
pub fn series_from_any(text: &str) -> Result<MultiSeries, ParseError> {
    let head = text.trim_start();
    if !head.starts_with('{') {
        return series_from_text(text);
    }
    let v: serde_json::Value = serde_json::from_str(head).map_err(|e| bad(e.to_string()))?;
    if v.get("entries").is_some() {
        table_json_to_series(head)
    } else {
        series_from_json(head)
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    params: &'a BTreeMap<String, String>,
    verdict: String,
    witness: &'a Option<String>,
}

/// One JSON object per line, no trailing newline.
pub fn report_to_json(r: &CheckReport) -> String {
    serde_json::to_string(&ReportJson {
        check: &r.check,
        params: &r.params,
        verdict: r.verdict.to_string(),
        witness: &r.witness,
    })
    .expect("plain data")
}

/// The `q × t` grid; a cell shows the Betti number followed by bracketed
/// elementary divisors, e.g. `1[5]`, `[2,2]`; `.` is zero.
pub fn table_to_grid(table: &HomologyTable) -> String {
    let t_max = table.entries.keys().map(|d| d.t).max().unwrap_or(0);
    let cell = |q: u32, t: u32| {
        let e = table.get(Bidegree::new(q, t));
        if e.is_trivial() {
            return ".".to_string();
        }
        let mut s = if e.betti > 0 || e.torsion.is_empty() {
            e.betti.to_string()
        } else {
            String::new()
        };
        if !e.torsion.is_empty() {
            let ds: Vec<String> = e.torsion.iter().map(|d| d.to_string()).collect();
            write!(s, "[{}]", ds.join(",")).unwrap();
        }
        s
    };
    let rows: Vec<(u32, Vec<String>)> = (0..=table.q_max)
        .filter(|&q| table.entries.keys().any(|d| d.q == q))
        .map(|q| (q, (0..=t_max).map(|t| cell(q, t)).collect()))
        .collect();
    let width = rows
        .iter()
        .flat_map(|(_, cs)| cs.iter().map(String::len))
        .chain([t_max.to_string().len()])
        .max()
        .unwrap_or(1);
    let mut out = format!(
        "# {} ring {} diff {} q<={}\n",
        table.spec, table.ring, table.diff.kind, table.q_max
    );
    write!(out, "{:>4} |", "q\\t").unwrap();
    for t in 0..=t_max {
        write!(out, " {t:>width$}").unwrap();
    }
    out.push('\n');
    for (q, cells) in rows {
        write!(out, "{q:>4} |").unwrap();
        for c in cells {
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use khalg_core::homology::homology_table;
    use khalg_core::{DifferentialSpec, GeneratorSpec};

    #[test]
    fn series_round_trips() {
        let s = MultiSeries::from_terms(
            [
                (Exponent::new(0, 0, 0), 1),
                (Exponent::new(2, 4, 1), -3),
                (Exponent::new(0, 4, 1), 7),
            ]
            .into_iter()
            .map(|(e, c)| (e, BigInt::from(c))),
            10,
        );
        let text = series_to_text(&s);
        assert_eq!(text, "cutoff 10\n0 0 0 1\n4 1 0 7\n4 1 2 -3\n");
        assert_eq!(series_from_text(&text).unwrap(), s);
        let json = series_to_json(&s);
        assert!(json.starts_with(r#"{"cutoff":10,"terms":[{"a":0,"q":0,"t":0,"coeff":"1"}"#));
        assert_eq!(series_from_json(&json).unwrap(), s);
        assert_eq!(series_from_any(&json).unwrap(), s);
    }

    #[test]
    fn malformed_series() {
        assert!(series_from_text("").is_err());
        assert!(series_from_text("cutoff x").is_err());
        assert!(series_from_text("cutoff 3\n1 2 3").is_err());
        assert!(series_from_text("cutoff 3\n1 2 0 1.5").is_err());
    }

    #[test]
    fn tokens() {
        assert_eq!(parse_ring("zp:7").unwrap(), Ring::Prime(7));
        assert!(parse_ring("zp:8").is_err());
        assert!(parse_ring("r").is_err());
        for r in [Ring::Rational, Ring::Integer, Ring::Prime(3)] {
            assert_eq!(parse_ring(&ring_token(r)).unwrap(), r);
        }
        assert_eq!(
            parse_diff("generic:42").unwrap(),
            DifferentialKind::Generic { seed: 42 }
        );
        assert!(parse_diff("generic:").is_err());
    }

    #[test]
    fn table_json_and_grid() {
        let spec = GeneratorSpec::unreduced(3);
        let t = homology_table(&spec, &DifferentialSpec::STANDARD, Ring::Integer, 12).unwrap();
        let json = table_to_json(&t);
        assert!(json.starts_with(r#"{"n":3,"reduced":false,"ring":"int","diff":"standard","q_max":12,"entries":[{"q":0,"t":0,"betti":1,"torsion":[]}"#));
        assert_eq!(table_json_to_series(&json).unwrap(), t.to_series());
        let grid = table_to_grid(&t);
        assert!(grid.contains("[2]"), "{grid}");
    }
}

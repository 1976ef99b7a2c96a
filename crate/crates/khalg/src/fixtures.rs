//! Bundled reference polynomials, compiled into the binary.

use khalg_core::verify::CheckReport;
use khalg_core::{MultiSeries, Ring};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::format::{parse_ring, series_from_text, series_to_text};

const MANIFEST: &str = include_str!("../fixtures/manifest.json");

const FILES: &[(&str, &str)] = &[
    (
        "t79-rational.series",
        include_str!("../fixtures/t79-rational.series"),
    ),
    ("t79-z2.series", include_str!("../fixtures/t79-z2.series")),
];

/// The window in which the T(7,9) polynomials agree with the stable
/// limit: `t ≤ 13` and `q ≤ 18`.
pub const T79_WINDOW: (u32, u32) = (18, 13);

#[derive(Clone, Debug, Deserialize)]
pub struct FixtureSet {
    pub name: String,
    pub file: String,
    pub location: String,
    pub convention: String,
    pub ring: String,
    pub sha256: String,
    pub coefficient_total: u64,
    #[serde(skip)]
    pub text: &'static str,
}

impl FixtureSet {
    pub fn series(&self) -> MultiSeries {
        series_from_text(self.text).expect("bundled fixture parses")
    }

    pub fn ring(&self) -> Ring {
        parse_ring(&self.ring).expect("bundled fixture ring")
    }

    /// Checksum, coefficient total and serializer round trip.
    pub fn check(&self) -> CheckReport {
        let report = CheckReport::new("fixture_integrity").param("name", &self.name);
        let digest = sha256_hex(self.text.as_bytes());
        if digest != self.sha256 {
            return report.fail(format!("sha256 {digest}, manifest {}", self.sha256));
        }
        let s = match series_from_text(self.text) {
            Ok(s) => s,
            Err(e) => return report.fail(e.to_string()),
        };
        if series_to_text(&s) != self.text {
            return report.fail("serializer does not reproduce the file");
        }
        let total = s.coefficient_sum();
        if total != self.coefficient_total.into() {
            return report.fail(format!(
                "coefficients sum to {total}, expected {}",
                self.coefficient_total
            ));
        }
        report.pass_with(format!("{} terms, total {total}", s.len()))
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

pub fn bundled() -> Vec<FixtureSet> {
    let mut sets: Vec<FixtureSet> =
        serde_json::from_str(MANIFEST).expect("bundled manifest parses");
    for s in &mut sets {
        s.text = FILES
            .iter()
            .find(|(f, _)| *f == s.file)
            .map(|(_, t)| *t)
            .expect("manifest names a bundled file");
    }
    sets
}

pub fn get(name: &str) -> Option<FixtureSet> {
    bundled().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_fixtures_are_intact() {
        let all = bundled();
        assert_eq!(all.len(), 2);
        for f in &all {
            let r = f.check();
            assert!(r.passed(), "{}: {:?}", f.name, r.witness);
        }
        assert_eq!(get("t79-z2").unwrap().ring(), Ring::Prime(2));
        assert!(get("nope").is_none());
    }

    #[test]
    fn tampered_text_fails() {
        let mut f = get("t79-rational").unwrap();
        f.text = "cutoff 46\n0 0 0 1\n";
        assert!(!f.check().passed());
    }
}

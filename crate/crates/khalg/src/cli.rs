//! The `khalg` command line.
//!
//! Exit status: 0 when every verdict passes, 1 when any fails, 2 on a usage
//! error. Output is collected and written once.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use khalg_core::homology::homology_table;
use khalg_core::verify::{compare_series, CheckReport};
use khalg_core::{Bidegree, DifferentialKind, DifferentialSpec, GeneratorSpec, Ring};

use crate::fixtures;
use crate::format::{
    parse_diff, parse_ring, report_to_json, series_to_json, series_to_text, table_to_grid,
    table_to_json,
};
use crate::formula::{evaluate, Formula};
use crate::matrix;
use crate::source::resolve;
use crate::suites::{self, Options, Suite, SuiteError};

#[derive(Parser, Debug)]
#[command(
    name = "khalg",
    version,
    about = "Koszul model of stable Khovanov homology of torus knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableOut {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SeriesOut {
    Text,
    Json,
}

fn ring_arg(s: &str) -> Result<Ring, String> {
    parse_ring(s).map_err(|e| e.to_string())
}

fn diff_arg(s: &str) -> Result<DifferentialKind, String> {
    parse_diff(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bigraded homology table.
    Homology {
        #[arg(long)]
        n: u32,
        /// q, int or zp:<p>
        #[arg(long, default_value = "q", value_parser = ring_arg)]
        coeff: Ring,
        #[arg(long, default_value_t = 20)]
        qmax: u32,
        #[arg(long)]
        reduced: bool,
        /// standard, lee or generic:<seed>
        #[arg(long, default_value = "standard", value_parser = diff_arg)]
        diff: DifferentialKind,
        #[arg(long, value_enum, default_value_t = TableOut::Table)]
        out: TableOut,
        /// Allow integer tables with n >= 6.
        #[arg(long)]
        slow: bool,
    },
    /// Expansion of a named series.
    Series {
        #[arg(long, value_parser = |s: &str| s.parse::<Formula>())]
        formula: Formula,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 20)]
        qmax: u32,
        #[arg(long, value_enum, default_value_t = SeriesOut::Text)]
        out: SeriesOut,
    },
    /// Run a verification suite; one JSON report per line.
    Verify {
        /// mu, relations, lee, potential, torsion:<p>, identities, reduction,
        /// generic-contrast, chain, euler, homology, fixtures or all
        #[arg(long, value_parser = |s: &str| s.parse::<Suite>())]
        suite: Suite,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        qmax: Option<u32>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Include the slow checks.
        #[arg(long)]
        slow: bool,
    },
    /// Compare two sources coefficientwise.
    ///
    /// A source is fixture:<name>, file:<path>, table:n=<n>[,coeff=..][,reduced][,diff=..]
    /// or series:formula=<name>[,n=<n>].
    Compare {
        left: String,
        right: String,
        #[arg(long)]
        qmax: u32,
        #[arg(long)]
        tmax: Option<u32>,
    },
    /// Export one differential matrix as sparse triplets.
    Matrix {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        reduced: bool,
        #[arg(long, default_value = "standard", value_parser = diff_arg)]
        diff: DifferentialKind,
        #[arg(long, default_value = "q", value_parser = ring_arg)]
        coeff: Ring,
        /// List both bases as comment lines.
        #[arg(long)]
        with_basis: bool,
    },
    /// Check the bundled fixtures, or print one.
    Fixtures {
        #[arg(long)]
        show: Option<String>,
    },
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn output(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn reports(reports: &[CheckReport]) -> Self {
        let mut stdout = String::new();
        for r in reports {
            writeln!(stdout, "{}", report_to_json(r)).unwrap();
        }
        let code = if reports.iter().all(CheckReport::passed) {
            0
        } else {
            1
        };
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::output(text)
            };
        }
    };
    match cli.command {
        Command::Homology {
            n,
            coeff,
            qmax,
            reduced,
            diff,
            out,
            slow,
        } => {
            if coeff == Ring::Integer && n >= 6 && !slow {
                return Outcome::usage("integer tables with n >= 6 are slow; pass --slow");
            }
            let spec = GeneratorSpec { n, reduced };
            match homology_table(&spec, &DifferentialSpec { kind: diff }, coeff, qmax) {
                Ok(t) => Outcome::output(match out {
                    TableOut::Json => table_to_json(&t) + "\n",
                    TableOut::Table => table_to_grid(&t),
                }),
                Err(e) => Outcome::usage(e),
            }
        }
        Command::Series {
            formula,
            n,
            qmax,
            out,
        } => match evaluate(formula, n, qmax) {
            Ok(s) => Outcome::output(match out {
                SeriesOut::Text => series_to_text(&s),
                SeriesOut::Json => series_to_json(&s) + "\n",
            }),
            Err(e) => Outcome::usage(e),
        },
        Command::Verify {
            suite,
            n,
            qmax,
            seed,
            slow,
        } => {
            let opts = Options {
                n,
                q_max: qmax,
                seed,
                slow,
            };
            match suites::run(suite, &opts) {
                Ok(r) => Outcome::reports(&r),
                Err(SuiteError::Usage(m)) => Outcome::usage(m),
                Err(SuiteError::Core(e)) => Outcome::usage(e),
            }
        }
        Command::Compare {
            left,
            right,
            qmax,
            tmax,
        } => {
            let l = match resolve(&left, qmax) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(e),
            };
            let r = match resolve(&right, qmax) {
                Ok(s) => s,
                Err(e) => return Outcome::usage(e),
            };
            // fixtures are exact polynomials; read them as known past the window
            let widen = |s: khalg_core::MultiSeries, src: &str| {
                if src.starts_with("fixture:") {
                    s.polynomial_with_cutoff(qmax.max(s.cutoff()))
                } else {
                    s
                }
            };
            let report = compare_series("compare", &widen(l, &left), &widen(r, &right), qmax, tmax)
                .param("left", &left)
                .param("right", &right);
            Outcome::reports(&[report])
        }
        Command::Matrix {
            n,
            q,
            t,
            reduced,
            diff,
            coeff,
            with_basis,
        } => {
            let spec = GeneratorSpec { n, reduced };
            match matrix::export(
                &spec,
                &DifferentialSpec { kind: diff },
                Bidegree::new(q, t),
                coeff,
                with_basis,
            ) {
                Some(text) => Outcome::output(text),
                None => {
                    Outcome::usage(format!("the differential leaving q^{q}t^{t} has no target"))
                }
            }
        }
        Command::Fixtures { show: Some(name) } => match fixtures::get(&name) {
            Some(f) => Outcome::output(f.text.to_string()),
            None => Outcome::usage(format!("no bundled fixture `{name}`")),
        },
        Command::Fixtures { show: None } => {
            let reports: Vec<CheckReport> = fixtures::bundled()
                .iter()
                .map(|f| {
                    f.check()
                        .param("location", &f.location)
                        .param("convention", &f.convention)
                        .param("sha256", &f.sha256)
                })
                .collect();
            Outcome::reports(&reports)
        }
    }
}

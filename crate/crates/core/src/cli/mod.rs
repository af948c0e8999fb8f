//! Command-line front end: `eval`, `table` and `verify`.
//!
//! Exit codes: 0 success, 1 usage, 2 region (or other domain) error,
//! 3 non-convergence, 4 I/O, 5 verification failure.

pub mod verify;

use std::fmt;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::products::{Breakdown, EvalPoint, Evaluator, ProductValue, Representation, Settings};

pub use verify::{run_suites, Suite, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REGION: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

/// A representation tag, or `dneg` for the (4.3)/(4.4) dispatcher.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    Rep(Representation),
    Dneg,
}

impl Selector {
    pub fn tag(self) -> &'static str {
        match self {
            Selector::Rep(r) => r.tag(),
            Selector::Dneg => "dneg",
        }
    }

    fn needs_nu(self) -> bool {
        !matches!(self, Selector::Rep(Representation::KK | Representation::Erfc2))
    }

    fn needs_mu(self) -> bool {
        !matches!(self, Selector::Rep(Representation::KK | Representation::Erfc2 | Representation::DI | Representation::DnegErfc))
    }

    pub fn eval(self, ev: &Evaluator, pt: EvalPoint) -> crate::Result<ProductValue> {
        self.terms(ev, pt)?.total()
    }

    pub fn terms(self, ev: &Evaluator, pt: EvalPoint) -> crate::Result<Breakdown> {
        match self {
            Selector::Rep(r) => ev.eval_terms(r, pt),
            Selector::Dneg => ev.dneg_dispatch_terms(pt),
        }
    }
}

impl FromStr for Selector {
    type Err = String;
    fn from_str(s: &str) -> Result<Selector, String> {
        if s == "dneg" {
            return Ok(Selector::Dneg);
        }
        s.parse::<Representation>().map(Selector::Rep).map_err(|_| {
            format!("unknown representation {s:?}; expected one of 4.1, 4.2, 4.3, 4.4, 5.1, kk, erfc2, di, dneg-erfc, dneg")
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// `start:stop:count` (inclusive, evenly spaced) or a single number.
#[derive(Debug, Clone, PartialEq)]
pub struct Range {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Range {
    pub fn single(v: f64) -> Range {
        Range { start: v, stop: v, count: 1 }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| if i + 1 == self.count { self.stop } else { self.start + step * i as f64 })
            .collect()
    }
}

impl FromStr for Range {
    type Err = String;
    fn from_str(s: &str) -> Result<Range, String> {
        let num = |p: &str| p.trim().parse::<f64>().map_err(|e| format!("bad number {p:?} in range {s:?}: {e}"));
        let parts: Vec<&str> = s.split(':').collect();
        let r = match parts.as_slice() {
            [v] => Range::single(num(v)?),
            [a, b, n] => {
                let count = n.trim().parse::<usize>().map_err(|e| format!("bad count {n:?} in range {s:?}: {e}"))?;
                if count == 0 {
                    return Err(format!("range {s:?} has zero points"));
                }
                Range { start: num(a)?, stop: num(b)?, count }
            }
            _ => return Err(format!("range {s:?} is not start:stop:count or a number")),
        };
        if !(r.start.is_finite() && r.stop.is_finite()) {
            return Err(format!("range {s:?} is not finite"));
        }
        Ok(r)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Products,
    Laplace,
    All,
}

impl SuiteArg {
    pub fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Identities => vec![Suite::Identities],
            SuiteArg::Products => vec![Suite::Products],
            SuiteArg::Laplace => vec![Suite::Laplace],
            SuiteArg::All => vec![Suite::Identities, Suite::Products, Suite::Laplace],
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "pcfprod", version, about = "Products of parabolic cylinder functions via integral representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one product.
    #[command(allow_negative_numbers = true)]
    Eval {
        #[arg(long)]
        rep: Selector,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        mu: Option<f64>,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        y: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Sweep a grid and write one row per point.
    #[command(allow_negative_numbers = true)]
    Table {
        #[arg(long)]
        rep: Selector,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        nu: Range,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        mu: Range,
        #[arg(long, allow_hyphen_values = true)]
        x: Range,
        #[arg(long, allow_hyphen_values = true)]
        y: Range,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Run verification suites and write a JSON report.
    #[command(allow_negative_numbers = true)]
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parameter(_) | Error::Spec(_) => EXIT_USAGE,
        Error::SeriesBudget { .. } | Error::Quadrature { .. } | Error::NonFinite { .. } => EXIT_CONVERGENCE,
        Error::Region(_) | Error::Domain(_) | Error::Range(_) | Error::Pole(_) | Error::Divergent(_) => EXIT_REGION,
    }
}

/// One row of `table` output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub rep: String,
    pub nu: f64,
    pub mu: f64,
    pub x: f64,
    pub y: f64,
    pub value: Option<f64>,
    pub abs_err_est: Option<f64>,
    pub status: String,
}

/// Evaluate `sel` on the Cartesian grid in (ν, μ, x, y) order.
pub fn table_rows(ev: &Evaluator, sel: Selector, nu: &Range, mu: &Range, x: &Range, y: &Range) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for &n in &nu.values() {
        for &m in &mu.values() {
            for &a in &x.values() {
                for &b in &y.values() {
                    let (value, abs_err_est, status) = match sel.eval(ev, EvalPoint::new(n, m, a, b)) {
                        Ok(v) => (Some(v.value), Some(v.abs_err_est), "ok"),
                        Err(e) if e.is_region() => (None, None, "skipped"),
                        Err(_) => (None, None, "error"),
                    };
                    rows.push(TableRow { rep: sel.tag().into(), nu: n, mu: m, x: a, y: b, value, abs_err_est, status: status.into() });
                }
            }
        }
    }
    rows
}

fn sci(v: Option<f64>) -> String {
    v.map(|v| format!("{v:.16e}")).unwrap_or_default()
}

fn write_csv(rows: &[TableRow], w: impl Write) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["rep", "nu", "mu", "x", "y", "value", "abs_err_est", "status"])?;
    for r in rows {
        out.write_record([
            r.rep.clone(),
            format!("{:?}", r.nu),
            format!("{:?}", r.mu),
            format!("{:?}", r.x),
            format!("{:?}", r.y),
            sci(r.value),
            sci(r.abs_err_est),
            r.status.clone(),
        ])?;
    }
    out.flush()
}

/// Read back a CSV written by `table`.
pub fn read_table_csv(path: &std::path::Path) -> Result<Vec<TableRow>, csv::Error> {
    csv::Reader::from_path(path)?.deserialize().collect()
}

#[derive(Serialize)]
struct EvalJson<'a> {
    rep: &'a str,
    nu: Option<f64>,
    mu: Option<f64>,
    x: f64,
    y: f64,
    #[serde(flatten)]
    result: &'a ProductValue,
}

/// Run the CLI on `args` (including the program name) and return the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let ev = Evaluator::new(Settings::from_env());
    match cli.command {
        Command::Eval { rep, nu, mu, x, y, format } => eval_cmd(&ev, rep, nu, mu, x, y, format, stdout, stderr),
        Command::Table { rep, nu, mu, x, y, out, format } => {
            let rows = table_rows(&ev, rep, &nu, &mu, &x, &y);
            let written = File::create(&out).and_then(|f| {
                let mut f = io::BufWriter::new(f);
                match format {
                    TableFormat::Csv => write_csv(&rows, &mut f)?,
                    TableFormat::Json => serde_json::to_writer_pretty(&mut f, &rows)?,
                }
                f.flush()
            });
            match written {
                Ok(()) => {
                    let n = |s: &str| rows.iter().filter(|r| r.status == s).count();
                    let _ = writeln!(stderr, "{} rows ({} ok, {} skipped, {} error) -> {}", rows.len(), n("ok"), n("skipped"), n("error"), out.display());
                    EXIT_OK
                }
                Err(e) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", out.display());
                    EXIT_IO
                }
            }
        }
        Command::Verify { suite, tol, out } => {
            if !(tol > 0.0 && tol.is_finite()) {
                let _ = writeln!(stderr, "error: --tol must be positive");
                return EXIT_USAGE;
            }
            let report = run_suites(&suite.suites(), &ev, tol);
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            let written = match &out {
                Some(p) => std::fs::write(p, json.as_bytes() ),
                None => writeln!(stdout, "{json}"),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write report: {e}");
                return EXIT_IO;
            }
            let s = &report.summary;
            let _ = writeln!(
                stderr,
                "{}/{} checks passed, {} audit terms ({} failed), max rel diff {:.3e}",
                s.passed, s.total, s.audit_terms, s.audit_failed, s.max_rel_diff
            );
            if report.all_passed() { EXIT_OK } else { EXIT_VERIFY }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn eval_cmd(
    ev: &Evaluator,
    rep: Selector,
    nu: Option<f64>,
    mu: Option<f64>,
    x: f64,
    y: f64,
    format: TextFormat,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let need = |flag: &str, v: Option<f64>, needed: bool| -> Result<f64, String> {
        match (v, needed) {
            (Some(v), _) => Ok(v),
            (None, false) => Ok(0.0),
            (None, true) => Err(format!("error: --{flag} is required for --rep {rep}")),
        }
    };
    let pt = match (need("nu", nu, rep.needs_nu()), need("mu", mu, rep.needs_mu())) {
        (Ok(n), Ok(m)) => EvalPoint::new(n, m, x, y),
        (Err(e), _) | (_, Err(e)) => {
            let _ = writeln!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    match rep.eval(ev, pt) {
        Ok(v) => {
            let _ = match format {
                TextFormat::Text => writeln!(
                    stdout,
                    "value: {:?}\nabs_err_est: {:e}\nrepresentation: {}\nswapped: {}",
                    v.value, v.abs_err_est, v.representation, v.swapped
                ),
                TextFormat::Json => {
                    let j = EvalJson { rep: rep.tag(), nu, mu, x, y, result: &v };
                    writeln!(stdout, "{}", serde_json::to_string(&j).expect("value serializes"))
                }
            };
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!("2.5".parse::<Range>().unwrap().values(), vec![2.5]);
        assert_eq!("-1:1:3".parse::<Range>().unwrap().values(), vec![-1.0, 0.0, 1.0]);
        assert!("0:1:0".parse::<Range>().is_err());
        assert!("0:1".parse::<Range>().is_err());
        assert!("a:1:2".parse::<Range>().is_err());
    }

    #[test]
    fn selectors() {
        assert_eq!("dneg".parse::<Selector>().unwrap(), Selector::Dneg);
        assert_eq!("dneg-erfc".parse::<Selector>().unwrap(), Selector::Rep(Representation::DnegErfc));
        assert!("4.5".parse::<Selector>().is_err());
    }
}

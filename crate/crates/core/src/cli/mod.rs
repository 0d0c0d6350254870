//! The `gr3937` command line.
//!
//! Exit codes: 0 success, 1 verification failure (or a numerical failure),
//! 2 usage error, 3 domain error.

mod audit;
mod input;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

pub use audit::{audit_point, AuditRecord, Verdict};
pub use input::{parse_complex, parse_grid, Axis, Coefficient};
pub use output::{ComplexValue, Num};

use crate::catalog::EntryId;
use crate::conditions::build_report;
use crate::error::Error;
use crate::formulas::{
    eval_complex, eval_corrected_original, eval_improved, eval_original, EvalResult, Kind,
};
use crate::params::{ComplexParams, RealParams};
use crate::quadrature::{oracle_cos, oracle_f, oracle_sin};
use crate::verify::{random_cross_check, verify_entry, Tolerance};
use output::{to_json_line, ParamsOut};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gr3937",
    version,
    about = "Evaluate and audit exp(p cos x + q sin x) trigonometric integrals over a full period"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one integral by one method.
    Eval(EvalArgs),
    /// Compare the original formulas against the oracle, as JSON lines.
    Audit(AuditArgs),
    /// Sign-error predicates over a 2-D parameter grid, as CSV.
    Scan(ScanArgs),
    /// Check the catalog and random points against the oracle.
    Verify(VerifyArgs),
    /// List the catalog entries.
    List(ListArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Sin,
    Cos,
    F,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sin => Kind::Sin,
            KindArg::Cos => Kind::Cos,
            KindArg::F => Kind::F,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Original,
    Corrected,
    Improved,
    Complex,
    Oracle,
}

#[derive(Debug, Clone, Args)]
struct ParamArgs {
    /// Coefficient of cos x in the exponent ("re" or "re+imi").
    #[arg(short = 'p', default_value = "0", allow_hyphen_values = true, value_parser = parse_complex)]
    p: Complex<f64>,
    /// Coefficient of sin x in the exponent.
    #[arg(short = 'q', default_value = "0", allow_hyphen_values = true, value_parser = parse_complex)]
    q: Complex<f64>,
    /// Coefficient of cos x in the phase.
    #[arg(short = 'a', default_value = "0", allow_hyphen_values = true, value_parser = parse_complex)]
    a: Complex<f64>,
    /// Coefficient of sin x in the phase.
    #[arg(short = 'b', default_value = "0", allow_hyphen_values = true, value_parser = parse_complex)]
    b: Complex<f64>,
    /// Order m >= 0.
    #[arg(short = 'm', default_value_t = 0)]
    m: u32,
}

impl ParamArgs {
    fn complex(&self) -> ComplexParams<f64> {
        ComplexParams::new(self.p, self.q, self.a, self.b, self.m)
    }

    fn real(&self) -> Result<RealParams<f64>, String> {
        self.complex()
            .to_real()
            .ok_or_else(|| "this method requires real p, q, a, b".to_string())
    }
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long, value_enum, default_value = "f")]
    kind: KindArg,
    #[arg(long, value_enum, default_value = "improved")]
    method: MethodArg,
    #[command(flatten)]
    params: ParamArgs,
    /// JSON output (the default and only format).
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct AuditArgs {
    #[arg(long, value_enum, default_value = "cos")]
    kind: KindArg,
    #[command(flatten)]
    params: ParamArgs,
    /// Grid over up to four coefficients, e.g. "p=-3:3:61,b=-3:3:61"; the
    /// other coefficients come from -p/-q/-a/-b.
    #[arg(long)]
    grid: Option<String>,
    /// Relative tolerance for the original-vs-oracle comparison.
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// JSON lines (default).
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// One CSV row per point instead of JSON lines.
    #[arg(long)]
    csv: bool,
}

#[derive(Debug, Args)]
struct ScanArgs {
    #[command(flatten)]
    params: ParamArgs,
    /// Exactly two axes, e.g. "p=-3:3:61,b=-3:3:61".
    #[arg(long)]
    grid: String,
    /// CSV (default).
    #[arg(long, conflicts_with = "json")]
    csv: bool,
    /// JSON lines instead of CSV.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random oracle cross-checks after the catalog.
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Sample complex parameters instead of real ones.
    #[arg(long)]
    complex: bool,
    /// Override the relative tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Check a single catalog entry (and skip the random points).
    #[arg(long)]
    entry: Option<EntryId>,
    /// Sample the real 3.937 entries at p < 0 only, where the table's atan
    /// forms carry the sign error.
    #[arg(long)]
    p_negative: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ListArgs {
    #[arg(long)]
    json: bool,
}

/// Parses `args` (including the program name), runs the command, and
/// returns the exit code.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Audit(a) => cmd_audit(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::List(a) => cmd_list(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            if !message.is_empty() {
                let _ = writeln!(err, "error: {message}");
            }
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_domain() {
            EXIT_DOMAIN
        } else {
            EXIT_FAILURE
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed pipe (`gr3937 scan … | head`) is not an error.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure {
            code: EXIT_FAILURE,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<i32, Failure>;

fn params_out(p: &ComplexParams<f64>) -> ParamsOut {
    ParamsOut {
        p: p.p.into(),
        q: p.q.into(),
        a: p.a.into(),
        b: p.b.into(),
        m: p.m,
    }
}

#[derive(Serialize)]
struct EvalOut {
    kind: &'static str,
    method: &'static str,
    params: ParamsOut,
    value: ComplexValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_estimate: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error_estimate: Option<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    evaluations: Option<usize>,
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> CmdResult {
    let kind = Kind::from(args.kind);
    let cp = args.params.complex();
    let closed = |r: EvalResult<f64>| EvalOut {
        kind: kind.as_str(),
        method: r.method.as_str(),
        params: params_out(&cp),
        value: r.value.into(),
        terms_used: Some(r.terms_used),
        truncation_estimate: Some(Num(r.truncation_estimate)),
        error_estimate: None,
        evaluations: None,
    };
    let rendered = match args.method {
        MethodArg::Oracle => {
            let r = match kind {
                Kind::Sin => oracle_sin(&cp)?,
                Kind::Cos => oracle_cos(&cp)?,
                Kind::F => oracle_f(&cp)?,
            };
            EvalOut {
                kind: kind.as_str(),
                method: "Oracle",
                params: params_out(&cp),
                value: r.value.into(),
                terms_used: None,
                truncation_estimate: None,
                error_estimate: Some(Num(r.error_estimate)),
                evaluations: Some(r.evaluations),
            }
        }
        MethodArg::Complex => closed(eval_complex(&cp, kind)?),
        method => {
            let rp = args.params.real().map_err(Failure::usage)?;
            closed(match method {
                MethodArg::Original => eval_original(&rp, kind)?,
                MethodArg::Corrected => eval_corrected_original(&rp, kind)?,
                _ => eval_improved(&rp, kind)?,
            })
        }
    };
    writeln!(out, "{}", to_json_line(&rendered))?;
    Ok(EXIT_OK)
}

/// Every point of the grid (first axis varying slowest), or the single
/// point given by the flags.
fn grid_points(
    base: &RealParams<f64>,
    grid: Option<&str>,
) -> Result<Vec<RealParams<f64>>, Failure> {
    let Some(spec) = grid else {
        return Ok(vec![*base]);
    };
    let axes = parse_grid(spec).map_err(Failure::usage)?;
    let mut points = vec![*base];
    for axis in &axes {
        points = points
            .iter()
            .flat_map(|p| {
                axis.values()
                    .map(move |v| with_coefficient(*p, axis.coefficient, v))
            })
            .collect();
    }
    Ok(points)
}

fn with_coefficient(mut p: RealParams<f64>, c: Coefficient, v: f64) -> RealParams<f64> {
    match c {
        Coefficient::P => p.p = v,
        Coefficient::Q => p.q = v,
        Coefficient::A => p.a = v,
        Coefficient::B => p.b = v,
    }
    p
}

fn cmd_audit(args: &AuditArgs, out: &mut dyn Write) -> CmdResult {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(Failure::usage("--tol must be positive"));
    }
    let base = args.params.real().map_err(Failure::usage)?;
    let points = grid_points(&base, args.grid.as_deref())?;
    let tol = Tolerance {
        rtol: args.tol,
        atol: args.tol * 1e-2,
    };
    let kind = Kind::from(args.kind);
    let records: Vec<AuditRecord> = points
        .par_iter()
        .map(|p| audit_point(p, kind, tol))
        .collect();
    if args.csv {
        writeln!(
            out,
            "p,q,a,b,m,kind,overall,flip_applies,verdict,abs_discrepancy"
        )?;
        for (p, r) in points.iter().zip(&records) {
            let disc = r
                .abs_discrepancy
                .map_or(String::new(), |d| format!("{:e}", d.0));
            writeln!(
                out,
                "{},{},{},{},{},{},{},{},{:?},{}",
                p.p,
                p.q,
                p.a,
                p.b,
                p.m,
                r.kind,
                r.report.overall,
                r.report.flip_applies,
                r.verdict,
                disc
            )?;
        }
    } else {
        for r in &records {
            writeln!(out, "{}", to_json_line(r))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct ScanRow {
    x: Num,
    y: Num,
    case1: bool,
    case2: bool,
    case3: bool,
    overall: bool,
    flip_applies: bool,
}

fn cmd_scan(args: &ScanArgs, out: &mut dyn Write) -> CmdResult {
    let base = args.params.real().map_err(Failure::usage)?;
    let axes = parse_grid(&args.grid).map_err(Failure::usage)?;
    let [x_axis, y_axis] = axes[..] else {
        return Err(Failure::usage("scan needs exactly two grid axes"));
    };
    if !args.json {
        writeln!(out, "x,y,case1,case2,case3,overall,flip_applies")?;
    }
    for x in x_axis.values() {
        for y in y_axis.values() {
            let point = with_coefficient(
                with_coefficient(base, x_axis.coefficient, x),
                y_axis.coefficient,
                y,
            );
            let r = build_report(&point);
            if args.json {
                let row = ScanRow {
                    x: Num(x),
                    y: Num(y),
                    case1: r.case1,
                    case2: r.case2,
                    case3: r.case3,
                    overall: r.overall,
                    flip_applies: r.flip_applies,
                };
                writeln!(out, "{}", to_json_line(&row))?;
            } else {
                writeln!(
                    out,
                    "{x},{y},{},{},{},{},{}",
                    r.case1, r.case2, r.case3, r.overall, r.flip_applies
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EntryOut {
    id: &'static str,
    points: usize,
    inapplicable: usize,
    sign_flips: usize,
    max_rel_error: Num,
    passed: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct RandomOut {
    seed: u64,
    samples: usize,
    complex: bool,
    max_rel_error: Num,
    corrected_checked: usize,
    corrected_max_rel_error: Num,
    passed: bool,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct VerifyOut {
    p_negative: bool,
    rtol: Num,
    entries: Vec<EntryOut>,
    random: Option<RandomOut>,
    passed: bool,
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(t) = args.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(Failure::usage("--tol must be positive"));
        }
    }
    let real_tol = args
        .tol
        .map_or(Tolerance::REAL, |t| Tolerance::REAL.with_rtol(t));
    let entries: Vec<EntryId> = args.entry.map_or(EntryId::ALL.to_vec(), |id| vec![id]);
    let reports: Vec<_> = entries
        .iter()
        .map(|&id| verify_entry(id, args.p_negative, real_tol))
        .collect();
    let random = args.entry.is_none().then(|| {
        let base = if args.complex {
            Tolerance::COMPLEX
        } else {
            Tolerance::REAL
        };
        let tol = args.tol.map_or(base, |t| base.with_rtol(t));
        random_cross_check(args.seed, args.samples, args.complex, tol)
    });
    let passed = reports.iter().all(|r| r.passed()) && random.as_ref().is_none_or(|r| r.passed());

    if args.json {
        let doc = VerifyOut {
            p_negative: args.p_negative,
            rtol: Num(real_tol.rtol),
            entries: reports
                .iter()
                .map(|r| EntryOut {
                    id: r.id.as_str(),
                    points: r.points,
                    inapplicable: r.inapplicable,
                    sign_flips: r.sign_flips,
                    max_rel_error: Num(r.max_error),
                    passed: r.passed(),
                    failures: r.failures.clone(),
                })
                .collect(),
            random: random.as_ref().map(|r| RandomOut {
                seed: args.seed,
                samples: r.samples,
                complex: r.complex,
                max_rel_error: Num(r.max_error),
                corrected_checked: r.corrected_checked,
                corrected_max_rel_error: Num(r.corrected_max_error),
                passed: r.passed(),
                failures: r.failures.clone(),
            }),
            passed,
        };
        writeln!(out, "{}", to_json_line(&doc))?;
    } else {
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        if args.p_negative {
            writeln!(
                out,
                "expected-failure mode: real 3.937 entries sampled at p < 0"
            )?;
        }
        writeln!(out, "catalog (rtol {:e})", real_tol.rtol)?;
        for r in &reports {
            let mut extra = String::new();
            if r.inapplicable > 0 {
                extra.push_str(&format!("  inapplicable={}", r.inapplicable));
            }
            if r.sign_flips > 0 {
                extra.push_str(&format!(
                    "  sign_flips={} (expected: odd m, p < 0)",
                    r.sign_flips
                ));
            }
            writeln!(
                out,
                "  {:<22} points={:<4} max_rel_err={:.2e}{extra}  {}",
                r.id.as_str(),
                r.points,
                r.max_error,
                verdict(r.passed())
            )?;
            for f in &r.failures {
                writeln!(out, "    offender: {f}")?;
            }
        }
        if let Some(r) = &random {
            let what = if r.complex { "complex" } else { "real" };
            write!(
                out,
                "random {what} sweep: seed={} samples={} max_rel_err={:.2e}",
                args.seed, r.samples, r.max_error
            )?;
            if !r.complex {
                write!(
                    out,
                    " corrected_vs_improved={} max_rel_err={:.2e}",
                    r.corrected_checked, r.corrected_max_error
                )?;
            }
            writeln!(out, "  {}", verdict(r.passed()))?;
            for f in &r.failures {
                writeln!(out, "    offender: {f}")?;
            }
        }
        writeln!(out, "result: {}", verdict(passed))?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_FAILURE })
}

#[derive(Serialize)]
struct ListOut {
    id: &'static str,
    integral: &'static str,
    closed_form: &'static str,
    original_restriction: &'static str,
    corrected: bool,
}

fn cmd_list(args: &ListArgs, out: &mut dyn Write) -> CmdResult {
    for id in EntryId::ALL {
        let e = id.info();
        if args.json {
            let row = ListOut {
                id: id.as_str(),
                integral: e.integral,
                closed_form: e.closed_form,
                original_restriction: e.original_restriction,
                corrected: e.corrected,
            };
            writeln!(out, "{}", to_json_line(&row))?;
        } else {
            let tag = if e.corrected {
                "corrected"
            } else {
                "as printed"
            };
            writeln!(
                out,
                "{:<22} {} = {}",
                id.as_str(),
                e.integral,
                e.closed_form
            )?;
            writeln!(
                out,
                "{:<22} [{tag}] table restriction: {}",
                "", e.original_restriction
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("gr3937").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_improved_cos() {
        let (code, out, _) = run_capture(&[
            "eval", "--kind", "cos", "--method", "improved", "-p", "-2", "-q", "0", "-a", "0",
            "-b", "1", "-m", "1",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"]["re"].as_f64().unwrap() + 4.476_509_869_537_685).abs() < 1e-12);
        assert_eq!(v["method"], "Hyp0F1Real");
    }

    #[test]
    fn eval_domain_error() {
        let (code, _, err) = run_capture(&[
            "eval", "--kind", "cos", "--method", "original", "-p", "1", "-q", "-1", "-a", "1",
            "-b", "1", "-m", "2",
        ]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("Y=0: original formula inapplicable"), "{err}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["eval", "--kind", "tan"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["eval", "-p", "1+xi"]).0, EXIT_USAGE);
        assert_eq!(
            run_capture(&["eval", "--method", "improved", "-p", "1+2i"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_capture(&["scan", "--grid", "p=0:1:2"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["scan", "--grid", "p=0:1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--entry", "GR-0"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn eval_complex_and_oracle() {
        let (code, out, _) = run_capture(&[
            "eval", "--kind", "f", "--method", "complex", "-p", "1+i", "-b", "1+i", "-m", "2",
        ]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!((v["value"]["im"].as_f64().unwrap() - std::f64::consts::TAU).abs() < 1e-13);
        let (code, out, _) = run_capture(&["eval", "--kind", "sin", "--method", "oracle"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"evaluations\""));
    }

    #[test]
    fn audit_and_scan() {
        let (code, out, _) = run_capture(&["audit", "-p", "-2", "-b", "1", "-m", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("\"verdict\":\"SignFlip\""));
        let (code, out, _) = run_capture(&["audit", "-m", "1", "--grid", "p=-1:1:3,b=1:1:1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
        let (code, out, _) = run_capture(&["scan", "-m", "1", "--grid", "p=-3:3:7,b=-3:3:7"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(
            lines.next(),
            Some("x,y,case1,case2,case3,overall,flip_applies")
        );
        for line in lines {
            let f: Vec<&str> = line.split(',').collect();
            let (x, y): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
            assert_eq!(f[5] == "true", x < y, "{line}");
        }
    }

    #[test]
    fn verify_single_entry_in_expected_failure_mode() {
        let (code, out, _) =
            run_capture(&["verify", "--entry", "GR-3.937-3-original", "--p-negative"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("sign_flips=12"), "{out}");
    }

    #[test]
    fn list_entries() {
        let (code, out, _) = run_capture(&["list", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), EntryId::ALL.len());
    }
}

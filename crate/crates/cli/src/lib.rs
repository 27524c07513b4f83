//! Command line front end for the derivpoly library.
//!
//! `run` is the whole program; `main` only forwards process arguments and
//! the standard streams, so tests can drive the binary in process.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error (poles, arguments
//! outside a function's range, precision below the supported floor), 3
//! internal invariant failure (a cross-check that can only fail on a bug).

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use derivpoly::calculus::{
    adamchik_cot_closed_form_with, nth_derivative_exact, nth_derivative_numeric,
    nth_derivative_numeric_parts, taylor_addition_oracle, CalcError,
};
use derivpoly::numbers::{
    build_secant_triangle, build_stirling_subset_triangle, build_tangent_triangle,
};
use derivpoly::polys::{
    derivative_polynomial_closed, poly_to_csv, poly_to_json, poly_to_latex, symmetry_holds,
    transport_holds, PolyError,
};
use derivpoly::zeta::{reflection_identity, ZetaError, LHS_CONVENTION};
use derivpoly::{DerivKind, DerivPolyCache, ExactInt, FloatCtx, PolyFamily, Rational};
use serde_json::{json, Value};

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Default working precision for `derivative --point`.
const DEFAULT_DERIVATIVE_PRECISION: usize = 256;
/// Default working precision for `zeta`.
const DEFAULT_ZETA_PRECISION: usize = 128;
/// Environment variable supplying either default when the flag is absent.
const PRECISION_ENV: &str = "DERIVPOLY_PRECISION_BITS";

/// The verify suites sweep n up to --max-n, except that the numeric oracle
/// suite stops at 30 and the cotangent closed-form suite at 40; past those
/// the extra runtime buys no additional coverage.
const ORACLE_SUITE_CAP: usize = 30;
const ADAMCHIK_SUITE_CAP: usize = 40;
/// Working precision and relative tolerance for the oracle suite.
const ORACLE_SUITE_PRECISION: usize = 256;
const ORACLE_SUITE_REL_BITS: i32 = -208;

#[derive(Parser)]
#[command(
    name = "derivpoly",
    version,
    about = "Tangent/secant number triangles, derivative polynomials, closed-form \
             higher derivatives, and a Hurwitz zeta reflection check"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Adamchik,
    Divisibility,
    Dual,
    Oracle,
    Symmetry,
    Transport,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a number triangle
    Numbers {
        /// Triangle kind: tangent, secant, or stirling_subset
        #[arg(long)]
        kind: String,
        /// Largest row index to build
        #[arg(long = "max-n")]
        max_n: usize,
        /// Output format (text, json, or csv)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one derivative polynomial or a table of them
    Poly {
        /// Family: P, Q, HyperP, or HyperQ
        #[arg(long)]
        family: String,
        /// Single index to print
        #[arg(long)]
        n: Option<usize>,
        /// Print the whole table for 0..=max-n instead of a single index
        #[arg(long = "max-n")]
        max_n: Option<usize>,
        /// Output format (text, json, csv, or latex)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate an n-th derivative exactly or numerically
    Derivative {
        /// Function: tan, sec, cot, csc, tanh, sech, coth, or csch
        #[arg(long)]
        kind: String,
        /// Derivative order
        #[arg(long)]
        n: usize,
        /// Exact mode: value of the substitution variable (tan x, cot x,
        /// tanh x, or coth x per kind), written as an integer or p/q
        #[arg(long = "exact-u", allow_hyphen_values = true)]
        exact_u: Option<String>,
        /// Numeric mode: the evaluation point, written in decimal
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Numeric working precision in bits (numeric mode only; default
        /// 256, or DERIVPOLY_PRECISION_BITS if set)
        #[arg(long = "precision-bits")]
        precision_bits: Option<usize>,
        /// Output format (text or json)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the Hurwitz zeta reflection identity at order n and rational x
    Zeta {
        /// Zeta order, an integer >= 2
        #[arg(long)]
        n: u32,
        /// Rational point strictly between 0 and 1, written as p/q
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Working precision in bits (default 128, or
        /// DERIVPOLY_PRECISION_BITS if set)
        #[arg(long = "precision-bits")]
        precision_bits: Option<usize>,
        /// Output format (text or json)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run cross-validation suites; exits 0 only if every case passes
    Verify {
        /// Suite to run, or all of them
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest n the suites sweep; oracle stops at 30 and adamchik at
        /// 40 regardless
        #[arg(long = "max-n", default_value_t = 40)]
        max_n: usize,
        /// Output format (text, json, or csv)
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum CmdError {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl CmdError {
    fn code(&self) -> u8 {
        match self {
            CmdError::Usage(_) => EXIT_USAGE,
            CmdError::Domain(_) => EXIT_DOMAIN,
            CmdError::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CmdError::Usage(m) | CmdError::Domain(m) | CmdError::Internal(m) => m,
        }
    }
}

impl From<std::io::Error> for CmdError {
    fn from(e: std::io::Error) -> CmdError {
        CmdError::Internal(format!("write failed: {e}"))
    }
}

fn calc_error(e: CalcError) -> CmdError {
    match e {
        CalcError::NonRealResult { .. } => CmdError::Internal(e.to_string()),
        _ => CmdError::Domain(e.to_string()),
    }
}

fn poly_error(e: PolyError) -> CmdError {
    match e {
        PolyError::UnknownFamily(_) | PolyError::Parse(_) => CmdError::Usage(e.to_string()),
        _ => CmdError::Internal(e.to_string()),
    }
}

fn zeta_error(e: ZetaError) -> CmdError {
    CmdError::Domain(e.to_string())
}

/// Runs the program on the given argument list (the first element is the
/// program name) and returns the exit code. All data goes to `out`,
/// diagnostics to `err`.
pub fn run<'a, I, O, E>(args: I, out: &mut O, err: &mut E) -> u8
where
    I: IntoIterator<Item = &'a str>,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            _ => {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
        },
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch<O: Write>(cmd: Cmd, out: &mut O) -> Result<(), CmdError> {
    match cmd {
        Cmd::Numbers { kind, max_n, format } => cmd_numbers(&kind, max_n, format, out),
        Cmd::Poly {
            family,
            n,
            max_n,
            format,
        } => cmd_poly(&family, n, max_n, format, out),
        Cmd::Derivative {
            kind,
            n,
            exact_u,
            point,
            precision_bits,
            format,
        } => cmd_derivative(&kind, n, exact_u, point, precision_bits, format, out),
        Cmd::Zeta {
            n,
            x,
            precision_bits,
            format,
        } => cmd_zeta(n, &x, precision_bits, format, out),
        Cmd::Verify {
            suite,
            max_n,
            format,
        } => cmd_verify(suite, max_n, format, out),
    }
}

fn parse_rational(s: &str) -> Result<Rational, CmdError> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s.trim(), "1"),
    };
    let bad = || CmdError::Usage(format!("invalid rational `{s}` (expected an integer or p/q)"));
    let n: ExactInt = num.parse().map_err(|_| bad())?;
    let d: ExactInt = den.parse().map_err(|_| bad())?;
    if d == ExactInt::from(0) {
        return Err(CmdError::Usage(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

fn resolve_precision(flag: Option<usize>, default: usize) -> Result<usize, CmdError> {
    if let Some(p) = flag {
        return Ok(p);
    }
    match std::env::var(PRECISION_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            CmdError::Usage(format!("{PRECISION_ENV} must be a positive integer, got `{s}`"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(default),
        Err(e) => Err(CmdError::Usage(format!("{PRECISION_ENV}: {e}"))),
    }
}

fn require_min_precision(precision: usize) -> Result<(), CmdError> {
    if precision < derivpoly::algebra::MIN_PRECISION {
        return Err(CmdError::Domain(format!(
            "precision must be at least {} bits, got {precision}",
            derivpoly::algebra::MIN_PRECISION
        )));
    }
    Ok(())
}

fn cmd_numbers<O: Write>(
    kind: &str,
    max_n: usize,
    format: Format,
    out: &mut O,
) -> Result<(), CmdError> {
    let triangle = match kind {
        "tangent" => build_tangent_triangle(max_n),
        "secant" => build_secant_triangle(max_n),
        "stirling_subset" => build_stirling_subset_triangle(max_n),
        _ => {
            return Err(CmdError::Usage(format!(
                "unknown triangle kind `{kind}` (expected tangent, secant, or stirling_subset)"
            )))
        }
    };
    match format {
        Format::Text => {
            for n in 0..=triangle.max_n() {
                let cells: Vec<String> = triangle.row(n).iter().map(|v| v.to_string()).collect();
                writeln!(out, "{n}: {}", cells.join(" "))?;
            }
        }
        Format::Json => writeln!(out, "{}", triangle.to_json())?,
        Format::Csv => write!(out, "{}", triangle.to_csv())?,
        Format::Latex => {
            return Err(CmdError::Usage(
                "latex output is only available for poly".into(),
            ))
        }
    }
    Ok(())
}

fn cmd_poly<O: Write>(
    family: &str,
    n: Option<usize>,
    max_n: Option<usize>,
    format: Format,
    out: &mut O,
) -> Result<(), CmdError> {
    let family: PolyFamily = family.parse().map_err(poly_error)?;
    let range: Vec<usize> = match (n, max_n) {
        (Some(k), None) => vec![k],
        (None, Some(m)) => (0..=m).collect(),
        _ => {
            return Err(CmdError::Usage(
                "give exactly one of --n or --max-n".into(),
            ))
        }
    };
    let single = n.is_some();
    let cache = DerivPolyCache::new();
    match format {
        Format::Text => {
            for &k in &range {
                let p = cache.get(family, k);
                writeln!(out, "{family}_{k} = {}", poly_to_latex(&p))?;
            }
        }
        Format::Latex => {
            for &k in &range {
                let p = cache.get(family, k);
                if single {
                    writeln!(out, "{}", poly_to_latex(&p))?;
                } else {
                    writeln!(out, "{family}_{k} = {}", poly_to_latex(&p))?;
                }
            }
        }
        Format::Json => {
            let items: Vec<Value> = range
                .iter()
                .map(|&k| poly_to_json(family, k, &cache.get(family, k)))
                .collect();
            if single {
                writeln!(out, "{}", items[0])?;
            } else {
                writeln!(out, "{}", Value::Array(items))?;
            }
        }
        Format::Csv => {
            for (i, &k) in range.iter().enumerate() {
                let csv = poly_to_csv(family, k, &cache.get(family, k));
                if i == 0 {
                    write!(out, "{csv}")?;
                } else {
                    // one shared header line for the whole table
                    for line in csv.lines().skip(1) {
                        writeln!(out, "{line}")?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_derivative<O: Write>(
    kind: &str,
    n: usize,
    exact_u: Option<String>,
    point: Option<String>,
    precision_bits: Option<usize>,
    format: Format,
    out: &mut O,
) -> Result<(), CmdError> {
    let kind: DerivKind = kind
        .parse()
        .map_err(|e: String| CmdError::Usage(e))?;
    if matches!(format, Format::Csv | Format::Latex) {
        return Err(CmdError::Usage(
            "derivative supports text or json output".into(),
        ));
    }
    let cache = DerivPolyCache::new();
    match (exact_u, point) {
        (Some(u_str), None) => {
            if precision_bits.is_some() {
                return Err(CmdError::Usage(
                    "--precision-bits applies to numeric mode (--point)".into(),
                ));
            }
            let u = parse_rational(&u_str)?;
            let d = nth_derivative_exact(kind, n, &u, &cache);
            match format {
                Format::Json => {
                    let v = json!({
                        "kind": kind.name(),
                        "n": n,
                        "mode": "exact",
                        "u": u.to_string(),
                        "coefficient": d.coefficient.to_string(),
                        "prefactor": d.prefactor.name(),
                    });
                    writeln!(out, "{v}")?;
                }
                _ => {
                    writeln!(out, "kind {}", kind.name())?;
                    writeln!(out, "n {n}")?;
                    writeln!(out, "mode exact")?;
                    writeln!(out, "u {u}")?;
                    writeln!(out, "coefficient {}", d.coefficient)?;
                    writeln!(out, "prefactor {}", d.prefactor.name())?;
                }
            }
        }
        (None, Some(p_str)) => {
            let precision = resolve_precision(precision_bits, DEFAULT_DERIVATIVE_PRECISION)?;
            require_min_precision(precision)?;
            let parse_ctx = FloatCtx::guarded(precision, 32);
            let x = parse_ctx
                .parse(&p_str)
                .filter(|v| v.is_finite())
                .ok_or_else(|| CmdError::Usage(format!("invalid point `{p_str}`")))?;
            let parts =
                nth_derivative_numeric_parts(kind, n, &x, precision, &cache).map_err(calc_error)?;
            match format {
                Format::Json => {
                    let v = json!({
                        "kind": kind.name(),
                        "n": n,
                        "mode": "numeric",
                        "point": p_str,
                        "precision": precision,
                        "coefficient": parts.coefficient.to_decimal_string(),
                        "prefactor": parts.prefactor.to_decimal_string(),
                        "value": parts.value.to_decimal_string(),
                    });
                    writeln!(out, "{v}")?;
                }
                _ => {
                    writeln!(out, "kind {}", kind.name())?;
                    writeln!(out, "n {n}")?;
                    writeln!(out, "mode numeric")?;
                    writeln!(out, "point {p_str}")?;
                    writeln!(out, "precision {precision}")?;
                    writeln!(out, "coefficient {}", parts.coefficient)?;
                    writeln!(out, "prefactor {}", parts.prefactor)?;
                    writeln!(out, "value {}", parts.value)?;
                }
            }
        }
        _ => {
            return Err(CmdError::Usage(
                "give exactly one of --exact-u (exact mode) or --point (numeric mode)".into(),
            ))
        }
    }
    Ok(())
}

fn cmd_zeta<O: Write>(
    n: u32,
    x_str: &str,
    precision_bits: Option<usize>,
    format: Format,
    out: &mut O,
) -> Result<(), CmdError> {
    if matches!(format, Format::Csv | Format::Latex) {
        return Err(CmdError::Usage("zeta supports text or json output".into()));
    }
    let x = parse_rational(x_str)?;
    let precision = resolve_precision(precision_bits, DEFAULT_ZETA_PRECISION)?;
    let check = reflection_identity(n, &x, precision).map_err(zeta_error)?;
    match format {
        Format::Json => {
            let v = json!({
                "n": n,
                "x": x.to_string(),
                "precision": precision,
                "convention": LHS_CONVENTION,
                "lhs": check.lhs.to_decimal_string(),
                "rhs": check.rhs.to_decimal_string(),
                "residual": check.residual.to_decimal_string(),
            });
            writeln!(out, "{v}")?;
        }
        _ => {
            writeln!(out, "n {n}")?;
            writeln!(out, "x {x}")?;
            writeln!(out, "precision {precision}")?;
            writeln!(out, "convention {LHS_CONVENTION}")?;
            writeln!(out, "lhs {}", check.lhs)?;
            writeln!(out, "rhs {}", check.rhs)?;
            writeln!(out, "residual {}", check.residual)?;
        }
    }
    Ok(())
}

struct Case {
    key: String,
    detail: Option<String>,
}

struct SuiteReport {
    name: &'static str,
    cases: usize,
    failures: Vec<Case>,
}

fn cmd_verify<O: Write>(
    suite: SuiteArg,
    max_n: usize,
    format: Format,
    out: &mut O,
) -> Result<(), CmdError> {
    if format == Format::Latex {
        return Err(CmdError::Usage(
            "verify supports text, json, or csv output".into(),
        ));
    }
    let names: Vec<&'static str> = match suite {
        SuiteArg::Adamchik => vec!["adamchik"],
        SuiteArg::Divisibility => vec!["divisibility"],
        SuiteArg::Dual => vec!["dual"],
        SuiteArg::Oracle => vec!["oracle"],
        SuiteArg::Symmetry => vec!["symmetry"],
        SuiteArg::Transport => vec!["transport"],
        SuiteArg::All => vec![
            "adamchik",
            "divisibility",
            "dual",
            "oracle",
            "symmetry",
            "transport",
        ],
    };
    let cache = DerivPolyCache::new();
    let mut reports = Vec::new();
    for name in names {
        let (cases, mut failures) = match name {
            "adamchik" => suite_adamchik(max_n, &cache),
            "divisibility" => suite_divisibility(max_n),
            "dual" => suite_dual(max_n, &cache),
            "oracle" => suite_oracle(max_n, &cache),
            "symmetry" => suite_symmetry(max_n, &cache),
            "transport" => suite_transport(max_n, &cache),
            _ => unreachable!(),
        };
        failures.sort_by(|a, b| a.key.cmp(&b.key));
        reports.push(SuiteReport {
            name,
            cases,
            failures,
        });
    }
    let failed: usize = reports.iter().map(|r| r.failures.len()).sum();
    match format {
        Format::Json => {
            let suites: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "cases": r.cases,
                        "failures": r.failures.iter().map(|c| {
                            json!({
                                "key": c.key,
                                "detail": c.detail.as_deref().unwrap_or(""),
                            })
                        }).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let v = json!({
                "max_n": max_n,
                "ok": failed == 0,
                "suites": suites,
            });
            writeln!(out, "{v}")?;
        }
        Format::Csv => {
            writeln!(out, "suite,cases,failures")?;
            for r in &reports {
                writeln!(out, "{},{},{}", r.name, r.cases, r.failures.len())?;
            }
        }
        _ => {
            for r in &reports {
                writeln!(
                    out,
                    "suite {}: {} cases, {} failures",
                    r.name,
                    r.cases,
                    r.failures.len()
                )?;
                for c in &r.failures {
                    writeln!(out, "FAIL {}: {}", c.key, c.detail.as_deref().unwrap_or(""))?;
                }
            }
        }
    }
    if failed > 0 {
        return Err(CmdError::Internal(format!(
            "{failed} verification case(s) failed"
        )));
    }
    Ok(())
}

/// Recurrence route vs triangle-backed closed form,
/// one case per (family, n).
fn suite_dual(max_n: usize, cache: &DerivPolyCache) -> (usize, Vec<Case>) {
    let tangent = build_tangent_triangle(max_n + 1);
    let secant = build_secant_triangle(max_n + 1);
    let mut cases = 0;
    let mut failures = Vec::new();
    for family in PolyFamily::ALL {
        let triangle = if family.trig_base() == PolyFamily::P {
            &tangent
        } else {
            &secant
        };
        for n in 0..=max_n {
            cases += 1;
            let key = format!("dual/{family}/n={n:04}");
            let recurrence = cache.get(family, n);
            match derivative_polynomial_closed(family, n, triangle) {
                Ok(closed) if closed == *recurrence => {}
                Ok(_) => failures.push(Case {
                    key,
                    detail: Some("closed form disagrees with recurrence".into()),
                }),
                Err(e) => failures.push(Case {
                    key,
                    detail: Some(e.to_string()),
                }),
            }
        }
    }
    (cases, failures)
}

/// k divides T(n+1, k), one case per n.
fn suite_divisibility(max_n: usize) -> (usize, Vec<Case>) {
    let tangent = build_tangent_triangle(max_n + 1);
    let zero = ExactInt::from(0);
    let mut failures = Vec::new();
    for n in 0..=max_n {
        let row = tangent.row(n + 1);
        for (k, value) in row.iter().enumerate().skip(1) {
            if value % ExactInt::from(k as u64) != zero {
                failures.push(Case {
                    key: format!("divisibility/n={n:04}"),
                    detail: Some(format!("k={k} does not divide {value}")),
                });
                break;
            }
        }
    }
    (max_n + 1, failures)
}

/// Parity vanishing pattern of every polynomial, one case per (family, n).
fn suite_symmetry(max_n: usize, cache: &DerivPolyCache) -> (usize, Vec<Case>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for family in PolyFamily::ALL {
        for n in 0..=max_n {
            cases += 1;
            if !symmetry_holds(family, n, &cache.get(family, n)) {
                failures.push(Case {
                    key: format!("symmetry/{family}/n={n:04}"),
                    detail: Some("parity pattern violated".into()),
                });
            }
        }
    }
    (cases, failures)
}

/// Coefficient transport between each trig family and its hyperbolic
/// counterpart, one case per (family, n).
fn suite_transport(max_n: usize, cache: &DerivPolyCache) -> (usize, Vec<Case>) {
    let mut cases = 0;
    let mut failures = Vec::new();
    for hyper in [PolyFamily::HyperP, PolyFamily::HyperQ] {
        let trig = hyper.trig_base();
        for n in 0..=max_n {
            cases += 1;
            if !transport_holds(hyper, n, &cache.get(trig, n), &cache.get(hyper, n)) {
                failures.push(Case {
                    key: format!("transport/{hyper}/n={n:04}"),
                    detail: Some("transport relation violated".into()),
                });
            }
        }
    }
    (cases, failures)
}

/// Stirling-subset closed form for cotangent derivatives vs the polynomial
/// route, one case per n over a fixed rational grid.
fn suite_adamchik(max_n: usize, cache: &DerivPolyCache) -> (usize, Vec<Case>) {
    let cap = max_n.min(ADAMCHIK_SUITE_CAP);
    if cap == 0 {
        return (0, Vec::new());
    }
    let stirling = build_stirling_subset_triangle(cap);
    let grid: Vec<Rational> = [(0, 1), (1, 1), (-1, 1), (1, 2), (-1, 2), (2, 1), (-2, 1), (3, 7)]
        .iter()
        .map(|&(p, q)| Rational::new(ExactInt::from(p), ExactInt::from(q)))
        .collect();
    let mut failures = Vec::new();
    for n in 1..=cap {
        let key = format!("adamchik/n={n:04}");
        for u in &grid {
            match adamchik_cot_closed_form_with(n, u, &stirling) {
                Ok(value) => {
                    let expected = nth_derivative_exact(DerivKind::Cot, n, u, cache);
                    if value != expected.coefficient {
                        failures.push(Case {
                            key: key.clone(),
                            detail: Some(format!(
                                "mismatch at u={u}: {value} vs {}",
                                expected.coefficient
                            )),
                        });
                        break;
                    }
                }
                Err(e) => {
                    failures.push(Case {
                        key: key.clone(),
                        detail: Some(e.to_string()),
                    });
                    break;
                }
            }
        }
    }
    (cap, failures)
}

/// Taylor addition oracle vs numeric evaluation, one case per (kind, point).
fn suite_oracle(max_n: usize, cache: &DerivPolyCache) -> (usize, Vec<Case>) {
    let cap = max_n.min(ORACLE_SUITE_CAP);
    let precision = ORACLE_SUITE_PRECISION;
    let points = ["0.25", "0.5", "0.75", "1.0", "1.25", "1.9", "2.15", "2.4", "2.65", "2.9"];
    let ctx = FloatCtx::guarded(precision, 32);
    let tol = ctx.two_pow(ORACLE_SUITE_REL_BITS);
    let one = ctx.one();
    let mut cases = 0;
    let mut failures = Vec::new();
    for kind in DerivKind::ALL {
        for p in points {
            cases += 1;
            let key = format!("oracle/{kind}/x={p}");
            let x = ctx.parse(p).expect("grid point parses");
            let derivs = match taylor_addition_oracle(kind, &x, cap, precision) {
                Ok(d) => d,
                Err(e) => {
                    failures.push(Case {
                        key,
                        detail: Some(e.to_string()),
                    });
                    continue;
                }
            };
            for (n, reference) in derivs.iter().enumerate() {
                let numeric = match nth_derivative_numeric(kind, n, &x, precision, cache) {
                    Ok(v) => v,
                    Err(e) => {
                        failures.push(Case {
                            key: key.clone(),
                            detail: Some(format!("n={n}: {e}")),
                        });
                        break;
                    }
                };
                let denom = if ctx.abs_lt(&one, reference) {
                    reference.abs()
                } else {
                    one.clone()
                };
                let rel = ctx.div(&ctx.sub(&numeric, reference).abs(), &denom);
                if !ctx.abs_lt(&rel, &tol) {
                    failures.push(Case {
                        key: key.clone(),
                        detail: Some(format!("n={n}: relative error {rel}")),
                    });
                    break;
                }
            }
        }
    }
    (cases, failures)
}

//! Command-line front end.
//!
//! Exit codes: 0 success, 1 numerical or verification failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Error;
use crate::geom::{distance, DiscPoint};
use crate::kernels::{
    heat_kernel, heat_radial, resolvent_kernel, resolvent_radial, wave_kernel, Convention, RadialArg, SpectralParams,
};
use crate::quad::QuadratureSpec;
use crate::verify::{resolve_conventions, run_named, ResidualReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const TOL_ENV: &str = "HYPERKERNEL_TOL";
pub const DEFAULT_TOL: f64 = 1e-10;
const TOL_RANGE: (f64, f64) = (1e-12, 1e-3);

/// Parses `a+bi`, `a-bi`, `bi`, `a`, `i` with optional whitespace and
/// scientific notation (`j` is accepted for `i`).
pub fn parse_complex(input: &str) -> Result<Complex64, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("malformed complex literal '{input}' (expected a+bi)");
    if s.is_empty() {
        return Err(bad());
    }
    let num = |t: &str| -> Result<f64, String> {
        let v: f64 = t.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return Ok(Complex64::new(num(&s)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| (bytes[p] == b'+' || bytes[p] == b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (num(&body[..p])?, &body[p..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        t => num(t)?,
    };
    Ok(Complex64::new(re, im))
}

#[derive(Debug, Parser)]
#[command(name = "hyperkernel", version, about = "Magnetic resolvent, wave and heat kernels on the hyperbolic disc")]
pub struct Cli {
    /// Quadrature tolerance in [1e-12, 1e-3]; overrides HYPERKERNEL_TOL
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Resolvent kernel G_k(lambda) at distance r or between two points
    Resolvent(ResolventArgs),
    /// Wave kernel W_k(r, rho)
    Wave(WaveArgs),
    /// Heat kernel H_k(t) at distance r or between two points
    Heat(HeatArgs),
    /// A kernel tabulated over a grid, for plotting
    Table(TableArgs),
    /// Run verification suites
    Verify(VerifyArgs),
    /// Score the candidate conventions and print the verdict
    Conventions(ConventionsArgs),
}

#[derive(Debug, Args)]
pub struct Points {
    /// Geodesic distance
    #[arg(long, conflicts_with_all = ["w", "wp"])]
    pub r: Option<f64>,
    /// First disc point, as a+bi
    #[arg(long, value_parser = parse_complex, requires = "wp")]
    pub w: Option<Complex64>,
    /// Second disc point, as a+bi
    #[arg(long, value_parser = parse_complex, requires = "w")]
    pub wp: Option<Complex64>,
}

#[derive(Debug, Args)]
pub struct ResolventArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    /// Spectral parameter, as a+bi
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Complex64,
    #[command(flatten)]
    pub at: Points,
}

#[derive(Debug, Args)]
pub struct WaveArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    #[arg(long)]
    pub r: f64,
    #[arg(long)]
    pub rho: f64,
}

#[derive(Debug, Args)]
pub struct HeatArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    #[arg(long)]
    pub t: f64,
    #[command(flatten)]
    pub at: Points,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelKind {
    Resolvent,
    Wave,
    Heat,
}

impl KernelKind {
    fn name(&self) -> &'static str {
        match self {
            KernelKind::Resolvent => "resolvent",
            KernelKind::Wave => "wave",
            KernelKind::Heat => "heat",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kernel: KernelKind,
    #[arg(long, allow_negative_numbers = true)]
    pub k: f64,
    /// Spectral parameter (resolvent)
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub lambda: Option<Complex64>,
    /// Time (heat, when tabulating over r)
    #[arg(long)]
    pub t: Option<f64>,
    /// Second radius (wave)
    #[arg(long)]
    pub rho: Option<f64>,
    /// Fixed distance (heat, when tabulating over t)
    #[arg(long)]
    pub r: Option<f64>,
    #[arg(long)]
    pub r_min: Option<f64>,
    #[arg(long)]
    pub r_max: Option<f64>,
    #[arg(long, requires = "t_max")]
    pub t_min: Option<f64>,
    #[arg(long, requires = "t_min")]
    pub t_max: Option<f64>,
    /// Number of rows
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// hypergeometric, geometry, ode, pairing, integral, chebyshev,
    /// fractional, heat, asymptotics, conventions or all
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ConventionsArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

/// Failure of a command, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical { context: String, source: Error },
    Verification(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numerical { context, source } => write!(f, "{context} failed: {source}"),
            CliError::Verification(m) => write!(f, "verification failed: {m}"),
            CliError::Io(e) => write!(f, "output error: {e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_FAILURE,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

fn numerical(context: &str) -> impl Fn(Error) -> CliError + '_ {
    move |source| match source {
        Error::OutsideDisc(_) | Error::InvalidSpec(_) => CliError::Usage(format!("{context}: {source}")),
        _ => CliError::Numerical { context: context.to_string(), source },
    }
}

/// Tolerance from the flag, else the environment, else the default.
pub fn resolve_tol(flag: Option<f64>, env: Option<&str>) -> Result<f64, CliError> {
    let tol = match (flag, env) {
        (Some(t), _) => t,
        (None, Some(s)) => s
            .trim()
            .parse::<f64>()
            .map_err(|_| CliError::Usage(format!("{TOL_ENV}='{s}' is not a number")))?,
        (None, None) => DEFAULT_TOL,
    };
    if !(tol >= TOL_RANGE.0 && tol <= TOL_RANGE.1) {
        return Err(CliError::Usage(format!("tolerance {tol:e} outside [1e-12, 1e-3]")));
    }
    Ok(tol)
}

/// Rounds to 15 significant digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// Plain decimal in the usual range, exponent form outside it.
pub fn fmt_num(x: f64) -> String {
    let v = sig15(x);
    if !v.is_finite() {
        return if v.is_nan() { "nan".into() } else if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 || (1e-5..1e16).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn jnum(x: f64) -> Value {
    let v = sig15(x);
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

fn jcomplex(z: Complex64) -> Value {
    json!({"re": jnum(z.re), "im": jnum(z.im)})
}

fn spec_for(tol: f64) -> Result<QuadratureSpec, CliError> {
    QuadratureSpec::with_tol(tol).map_err(|e| CliError::Usage(e.to_string()))
}

fn convention_json() -> Value {
    json!(Convention::default().labels())
}

fn disc_point(z: Complex64, flag: &str) -> Result<DiscPoint, CliError> {
    DiscPoint::new(z).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn write_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string(v).map_err(|e| CliError::Io(e.into()))?)?;
    Ok(())
}

fn pretty<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), CliError> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.into()))?)?;
    Ok(())
}

fn tol_check(r: f64, flag: &str) -> Result<(), CliError> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(CliError::Usage(format!("--{flag} must be a finite non-negative number, got {r}")));
    }
    Ok(())
}

fn run_resolvent(a: &ResolventArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let sp = SpectralParams::new(a.k, a.lambda);
    let mut obj = json!({"kernel": "resolvent", "k": jnum(a.k), "lambda": jcomplex(a.lambda)});
    let value = match (a.at.r, a.at.w, a.at.wp) {
        (Some(r), _, _) => {
            tol_check(r, "r")?;
            obj["r"] = jnum(r);
            let ra = RadialArg::new(r).map_err(numerical("resolvent"))?;
            resolvent_radial(&sp, &ra, tol).map_err(numerical("resolvent"))?
        }
        (None, Some(w), Some(wp)) => {
            let (p, q) = (disc_point(w, "w")?, disc_point(wp, "wp")?);
            obj["w"] = jcomplex(w);
            obj["wp"] = jcomplex(wp);
            obj["r"] = jnum(distance(p, q));
            resolvent_kernel(&sp, p, q, tol).map_err(numerical("resolvent"))?.value
        }
        _ => return Err(CliError::Usage("resolvent needs --r or both --w and --wp".into())),
    };
    obj["value"] = jcomplex(value);
    obj["convention"] = convention_json();
    obj["tol"] = jnum(tol);
    write_json(out, &obj)
}

fn run_wave(a: &WaveArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    tol_check(a.r, "r")?;
    let ra = RadialArg::new(a.r).map_err(numerical("wave"))?;
    let value = wave_kernel(a.k, &ra, a.rho).map_err(numerical("wave"))?;
    let obj = json!({
        "kernel": "wave", "k": jnum(a.k), "r": jnum(a.r), "rho": jnum(a.rho),
        "value": jcomplex(Complex64::new(value, 0.0)), "convention": convention_json(), "tol": jnum(tol),
    });
    write_json(out, &obj)
}

fn run_heat(a: &HeatArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_for(tol)?;
    let mut obj = json!({"kernel": "heat", "k": jnum(a.k), "t": jnum(a.t)});
    let value = match (a.at.r, a.at.w, a.at.wp) {
        (Some(r), _, _) => {
            tol_check(r, "r")?;
            obj["r"] = jnum(r);
            Complex64::new(heat_radial(a.k, a.t, r, &spec).map_err(numerical("heat"))?, 0.0)
        }
        (None, Some(w), Some(wp)) => {
            let (p, q) = (disc_point(w, "w")?, disc_point(wp, "wp")?);
            obj["w"] = jcomplex(w);
            obj["wp"] = jcomplex(wp);
            obj["r"] = jnum(distance(p, q));
            heat_kernel(a.k, a.t, p, q, &spec).map_err(numerical("heat"))?.value
        }
        _ => return Err(CliError::Usage("heat needs --r or both --w and --wp".into())),
    };
    obj["value"] = jcomplex(value);
    obj["convention"] = convention_json();
    obj["tol"] = jnum(tol);
    write_json(out, &obj)
}

fn grid(lo: f64, hi: f64, n: usize, name: &str) -> Result<Vec<f64>, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(CliError::Usage(format!("--{name}-min must not exceed --{name}-max")));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    Ok((0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect())
}

fn need<T: Copy>(v: Option<T>, flag: &str, kernel: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("table --kernel {kernel} needs --{flag}")))
}

fn run_table(a: &TableArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_for(tol)?;
    let name = a.kernel.name();
    let over_t = a.kernel == KernelKind::Heat && a.t_min.is_some();
    let (column, xs) = if over_t {
        ("t", grid(need(a.t_min, "t-min", name)?, need(a.t_max, "t-max", name)?, a.n, "t")?)
    } else {
        ("r", grid(need(a.r_min, "r-min", name)?, need(a.r_max, "r-max", name)?, a.n, "r")?)
    };
    if !over_t && xs[0] < 0.0 {
        return Err(CliError::Usage("--r-min must be non-negative".into()));
    }
    let eval = |x: f64| -> Result<Complex64, CliError> {
        match a.kernel {
            KernelKind::Resolvent => {
                let lambda = need(a.lambda, "lambda", name)?;
                let ra = RadialArg::new(x).map_err(numerical("table"))?;
                resolvent_radial(&SpectralParams::new(a.k, lambda), &ra, tol).map_err(numerical("table"))
            }
            KernelKind::Wave => {
                let rho = need(a.rho, "rho", name)?;
                let ra = RadialArg::new(x).map_err(numerical("table"))?;
                Ok(Complex64::new(wave_kernel(a.k, &ra, rho).map_err(numerical("table"))?, 0.0))
            }
            KernelKind::Heat => {
                let (t, r) = if over_t { (x, need(a.r, "r", name)?) } else { (need(a.t, "t", name)?, x) };
                Ok(Complex64::new(heat_radial(a.k, t, r, &spec).map_err(numerical("table"))?, 0.0))
            }
        }
    };
    // rows are independent; scoped threads keep the output order
    let rows: Vec<Result<Complex64, CliError>> = std::thread::scope(|scope| {
        let chunk = xs.len().div_ceil(std::thread::available_parallelism().map_or(1, |n| n.get()));
        let handles: Vec<_> = xs
            .chunks(chunk.max(1))
            .map(|part| scope.spawn(|| part.iter().map(|&x| eval(x)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("table worker panicked")).collect()
    });
    let rows: Vec<Complex64> = rows.into_iter().collect::<Result<_, _>>()?;
    match a.format {
        Format::Csv => {
            writeln!(out, "{column},re,im")?;
            for (x, v) in xs.iter().zip(&rows) {
                writeln!(out, "{},{},{}", fmt_num(*x), fmt_num(v.re), fmt_num(v.im))?;
            }
            Ok(())
        }
        Format::Json => {
            let data: Vec<Value> = xs.iter().zip(&rows).map(|(x, v)| json!({column: jnum(*x), "value": jcomplex(*v)})).collect();
            let mut obj = json!({"kernel": name, "k": jnum(a.k), "rows": data, "convention": convention_json(), "tol": jnum(tol)});
            if let Some(l) = a.lambda {
                obj["lambda"] = jcomplex(l);
            }
            write_json(out, &obj)
        }
    }
}

fn text_line(r: &ResidualReport) -> String {
    format!(
        "{} {:<44} residual {:<11} tol {:<9} {}",
        if r.pass { "PASS" } else { "FAIL" },
        r.identity,
        fmt_num(r.residual),
        fmt_num(r.tolerance),
        r.parameters
    )
}

fn run_verify(a: &VerifyArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_for(tol)?;
    let report = run_named(&a.suite, &spec).map_err(|e| CliError::Usage(format!("--suite: {e}")))?;
    match a.format {
        ReportFormat::Json => pretty(out, &report)?,
        ReportFormat::Text => {
            writeln!(out, "hyperkernel {} verify --suite {}", report.version, a.suite)?;
            for r in &report.reports {
                writeln!(out, "{}", text_line(r))?;
            }
            let failed = report.reports.iter().filter(|r| !r.pass).count();
            writeln!(out, "{} checks, {} failed", report.reports.len(), failed)?;
        }
    }
    let failing: Vec<&str> = report.reports.iter().filter(|r| !r.pass).map(|r| r.identity.as_str()).collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failing.join(", ")))
    }
}

fn run_conventions(a: &ConventionsArgs, tol: f64, out: &mut dyn Write) -> Result<(), CliError> {
    let spec = spec_for(tol)?;
    let verdict = resolve_conventions(&spec).map_err(numerical("conventions"))?;
    let reports = verdict.reports();
    match a.format {
        ReportFormat::Json => pretty(out, &verdict)?,
        ReportFormat::Text => {
            writeln!(out, "selected: {}", verdict.selected.join(", "))?;
            writeln!(out, "margin:   {}", fmt_num(verdict.margin))?;
            writeln!(out, "{:<3} {:<62} {:>11} {:>11} {:>11} {:>11}", "", "tuple", "helmholtz", "integral", "log-law", "total")?;
            for c in &verdict.table {
                writeln!(
                    out,
                    "{:<3} {:<62} {:>11} {:>11} {:>11} {:>11}",
                    if c.selected { "*" } else { "" },
                    c.convention.join(" "),
                    fmt_num(c.helmholtz),
                    fmt_num(c.integral),
                    fmt_num(c.log_law),
                    fmt_num(c.total)
                )?;
            }
            for aux in &verdict.auxiliary {
                writeln!(
                    out,
                    "{}: {} ({}) over {} ({})",
                    aux.question,
                    aux.selected,
                    fmt_num(aux.selected_residual),
                    aux.rejected,
                    fmt_num(aux.rejected_residual)
                )?;
            }
            for r in &reports {
                writeln!(out, "{}", text_line(r))?;
            }
        }
    }
    let failing: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.identity.as_str()).collect();
    if failing.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failing.join(", ")))
    }
}

/// Executes a parsed command line; `env_tol` is the value of HYPERKERNEL_TOL.
pub fn run(cli: &Cli, env_tol: Option<&str>, out: &mut dyn Write) -> Result<(), CliError> {
    let tol = resolve_tol(cli.tol, env_tol)?;
    match &cli.command {
        Command::Resolvent(a) => run_resolvent(a, tol, out),
        Command::Wave(a) => run_wave(a, tol, out),
        Command::Heat(a) => run_heat(a, tol, out),
        Command::Table(a) => run_table(a, tol, out),
        Command::Verify(a) => run_verify(a, tol, out),
        Command::Conventions(a) => run_conventions(a, tol, out),
    }
}

/// Parses `args`, runs, and returns the exit code. Output goes to `out`,
/// diagnostics to `err`.
pub fn main_with<I, T>(args: I, env_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if code == EXIT_OK { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match run(&cli, env_tol, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "hyperkernel: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        let z = |s| parse_complex(s).unwrap();
        assert_eq!(z("0.5+0.5i"), Complex64::new(0.5, 0.5));
        assert_eq!(z("0.5 - 2i"), Complex64::new(0.5, -2.0));
        assert_eq!(z("i"), Complex64::new(0.0, 1.0));
        assert_eq!(z("-i"), Complex64::new(0.0, -1.0));
        assert_eq!(z("3"), Complex64::new(3.0, 0.0));
        assert_eq!(z("1e-3+2.5E+1i"), Complex64::new(1e-3, 25.0));
        assert_eq!(z("-1e-2-1e-2j"), Complex64::new(-0.01, -0.01));
        assert_eq!(z("2i"), Complex64::new(0.0, 2.0));
        for bad in ["", "1+", "abc", "1+2k", "1++2i", "nan"] {
            assert!(parse_complex(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn tolerance_sources() {
        assert_eq!(resolve_tol(None, None).unwrap(), DEFAULT_TOL);
        assert_eq!(resolve_tol(None, Some("1e-8")).unwrap(), 1e-8);
        assert_eq!(resolve_tol(Some(1e-6), Some("1e-8")).unwrap(), 1e-6);
        assert_eq!(resolve_tol(Some(1e-13), None).unwrap_err().exit_code(), EXIT_USAGE);
        assert_eq!(resolve_tol(None, Some("x")).unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn fifteen_digits() {
        assert_eq!(sig15(0.1 + 0.2), 0.3);
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333333");
        assert_eq!(fmt_num(2.5e-300), "2.5e-300");
    }

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["hyperkernel"];
        full.extend_from_slice(args);
        let code = main_with(full, None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn resolvent_request() {
        let (code, out, _) = run_args(&["resolvent", "--k", "1", "--lambda", "0.5+0.5i", "--r", "1.2"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["kernel"], "resolvent");
        assert_eq!(v["convention"].as_array().unwrap().len(), 4);
        let (code, _, err) = run_args(&["resolvent", "--k", "1", "--r", "1.2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--lambda"));
    }

    #[test]
    fn wave_k0_closed_form() {
        let (code, out, _) = run_args(&["wave", "--k", "0", "--r", "1", "--rho", "2"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        let expected = 1.0 / (2.0 * std::f64::consts::PI * (1f64.cosh().powi(2) - 0.5f64.cosh().powi(2)).sqrt());
        assert!((v["value"]["re"].as_f64().unwrap() - expected).abs() < 1e-14);
    }

    #[test]
    fn heat_table_shape() {
        let args = ["table", "--kernel", "heat", "--k", "1", "--t", "0.5", "--r-min", "0.1", "--r-max", "3", "--n", "30", "--format", "csv"];
        let (code, out, _) = run_args(&args);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 31);
        assert_eq!(lines[0], "r,re,im");
        let rs: Vec<f64> = lines[1..].iter().map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
        assert!(rs.windows(2).all(|p| p[0] < p[1]));
        assert!(lines.iter().all(|l| l.split(',').count() == 3));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["resolvent", "--k", "1", "--lambda", "1+", "--r", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["bogus"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["wave", "--k", "0", "--r", "1", "--rho", "2", "--tol", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["resolvent", "--k", "1", "--lambda", "i", "--w", "1.5", "--wp", "0"]).0, EXIT_USAGE);
    }

    #[test]
    fn numerical_failure_is_exit_1() {
        // (k, lambda) = (1.5, i) sits on a pole of Γ(s − k)
        let (code, _, err) = run_args(&["resolvent", "--k", "1.5", "--lambda", "i", "--r", "1"]);
        assert_eq!(code, EXIT_FAILURE);
        assert!(err.contains("resolvent"));
    }
}

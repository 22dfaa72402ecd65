//! Command-line front end.
//!
//! Subcommands: `eval`, `verify`, `verify-all`, `flow`, `sample`. Exit codes
//! are 0 when everything checked passes, 1 on a verification failure, a pole
//! or a blow-up, and 2 on a usage error. [`run`] takes explicit writers so the
//! whole contract can be driven in-process.

use std::io::Write;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::ck::{
    catalog, find, format_signature, fractional_curvatures, intrinsic_casimir, scalar_value, signature_search,
    verify_limit, verify_realization, CasimirReport, CkType, Curvatures, Family, LimitFlag, LimitValue,
    VerificationReport, VerifyOptions, CASIMIR_FIELD_TOLERANCE, DEFAULT_TOLERANCE, MATRIX_TOLERANCE,
};
use crate::flow::compare_closed_form;
use crate::jacobi::{quarter_periods, EllipticFn, Jacobi, ModulusLimit};
use crate::modular::{kprime_value, lambda_value};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Moduli used by `verify-all` when none are given.
pub const DEFAULT_MODULI: [f64; 3] = [0.3, 0.6, 0.9];

#[derive(Debug, Parser)]
#[command(
    name = "ckwitt",
    version,
    about = "Jacobi elliptic functions and Cayley-Klein realizations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval(EvalArgs),
    /// Verify one catalog realization and print its JSON report.
    Verify(VerifyArgs),
    /// Run the whole catalog, Casimir checks and limits.
    VerifyAll(VerifyAllArgs),
    /// Integrate the ODE triplet and compare with the closed form.
    Flow(FlowArgs),
    /// Tabulate a function on a rectangular grid as CSV.
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct Transform {
    /// Evaluate at the complementary modulus k′ via the interchange table.
    #[arg(long, conflicts_with = "lambda")]
    pub kprime: bool,
    /// Evaluate at the imaginary modulus ik/k′ (sn, cn, dn only).
    #[arg(long)]
    pub lambda: bool,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "fn")]
    pub function: EllipticFn,
    #[arg(long)]
    pub modulus: f64,
    /// Complex point, e.g. `0.5`, `0.3+0.2i`.
    #[arg(long, allow_hyphen_values = true)]
    pub z: Complex64,
    #[command(flatten)]
    pub transform: Transform,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "type")]
    pub ck_type: CkType,
    #[arg(long)]
    pub family: Family,
    #[arg(long)]
    pub modulus: f64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Grid size `WxH`.
    #[arg(long, value_parser = parse_grid)]
    pub grid: Option<(usize, usize)>,
    /// Strip the prefactors and use curvatures (γ², ω²).
    #[arg(long)]
    pub unnormalized: bool,
    /// Explicit curvatures `κ1,κ2`; overrides the type and `--unnormalized`.
    #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
    pub kappa: Option<(f64, f64)>,
}

#[derive(Debug, Args)]
pub struct VerifyAllArgs {
    /// Comma-separated moduli.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Vec<f64>,
    /// Also write the report array to this path (`-` for standard output).
    #[arg(long)]
    pub json: Option<String>,
}

#[derive(Debug, Args)]
pub struct FlowArgs {
    #[arg(long)]
    pub gamma: f64,
    /// End point in units of K.
    #[arg(long, default_value_t = 2.0)]
    pub z_end: f64,
    #[arg(long, default_value_t = 2048)]
    pub steps: usize,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long = "fn")]
    pub function: EllipticFn,
    #[arg(long)]
    pub modulus: f64,
    /// `a:b:h`, inclusive of both ends.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub re: Range,
    /// `c` or `c:d:h`.
    #[arg(long, value_parser = parse_range, allow_hyphen_values = true)]
    pub im: Range,
    #[command(flatten)]
    pub transform: Transform,
}

/// Inclusive arithmetic range.
#[derive(Debug, Clone, PartialEq)]
pub struct Range {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl Range {
    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|i| self.start + i as f64 * self.step)
    }
}

pub fn parse_range(s: &str) -> Result<Range, String> {
    let parts = s
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    match parts[..] {
        [c] if c.is_finite() => Ok(Range {
            start: c,
            step: 0.0,
            count: 1,
        }),
        [a, b, h] if a.is_finite() && b.is_finite() && h.is_finite() => {
            if h <= 0.0 || b < a {
                return Err(format!("range {s:?} needs a ≤ b and h > 0"));
            }
            let n = ((b - a) / h + 1e-9).floor() as usize + 1;
            Ok(Range {
                start: a,
                step: h,
                count: n,
            })
        }
        _ => Err(format!("expected `c` or `a:b:h`, got {s:?}")),
    }
}

pub fn parse_grid(s: &str) -> Result<(usize, usize), String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WxH, got {s:?}"))?;
    let w: usize = w.parse().map_err(|e| format!("{w:?}: {e}"))?;
    let h: usize = h.parse().map_err(|e| format!("{h:?}: {e}"))?;
    if w == 0 || h == 0 {
        return Err("grid dimensions must be positive".into());
    }
    Ok((w, h))
}

fn parse_pair(s: &str) -> Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected k1,k2, got {s:?}"))?;
    let a: f64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

/// Real number with 15 significant digits, trailing zeros dropped.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `a`, `bi`, `a+bi` or `a-bi` with [`format_real`] parts.
pub fn format_complex(z: Complex64) -> String {
    match (z.re == 0.0, z.im == 0.0) {
        (_, true) => format_real(z.re),
        (true, false) => format!("{}i", format_real(z.im)),
        _ => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{}{sign}{}i", format_real(z.re), format_real(z.im.abs()))
        }
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::ModulusOutOfRange(_)
        | Error::GammaOutOfRange(_)
        | Error::InvalidLambda(_)
        | Error::TooFewSteps { .. }
        | Error::UnsupportedFunction(_)
        | Error::EmptyGrid => EXIT_USAGE,
        _ => EXIT_FAIL,
    }
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(&a, out),
        Command::Verify(a) => cmd_verify(&a, out, err),
        Command::VerifyAll(a) => cmd_verify_all(&a, out, err),
        Command::Flow(a) => cmd_flow(&a, out, err),
        Command::Sample(a) => cmd_sample(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_for(&e)
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAIL
        }
    }
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn evaluate(f: EllipticFn, z: Complex64, k: f64, t: &Transform) -> crate::Result<Complex64> {
    if t.kprime {
        kprime_value(f, z, k)
    } else if t.lambda {
        lambda_value(f, z, k)
    } else {
        Jacobi::new(k)?.eval(f, z)
    }
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> CliResult {
    let v = evaluate(a.function, a.z, a.modulus, &a.transform)?;
    writeln!(out, "{}", format_complex(v))?;
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let mut entry = find(a.ck_type, a.family);
    let mut curvatures = None;
    if a.unnormalized {
        entry = entry.unnormalized();
        curvatures = Some(fractional_curvatures(a.modulus)?);
    }
    if let Some((k1, k2)) = a.kappa {
        curvatures = Some(Curvatures::new(k1, k2));
    }
    let (nx, ny) = a
        .grid
        .unwrap_or((crate::witt::STANDARD_SIZE, crate::witt::STANDARD_SIZE));
    let opts = VerifyOptions {
        tolerance: a.tol,
        nx,
        ny,
        curvatures,
    };
    let report = verify_realization(&entry, a.modulus, &opts)?;
    serde_json::to_writer_pretty(&mut *out, &report)?;
    writeln!(out)?;
    let c = report.curvatures;
    writeln!(
        err,
        "{} at k = {}: curvatures ({}, {}), max residual {:.3e} → {}",
        entry.id(),
        a.modulus,
        format_real(c.kappa1),
        format_real(c.kappa2),
        report.max_residual(),
        verdict(report.pass)
    )?;
    Ok(if report.pass { EXIT_OK } else { EXIT_FAIL })
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Entries checked by `verify-all` at each modulus: the k′ and λ families
/// only at 0.6.
fn runs_at(family: Family, k: f64) -> bool {
    !matches!(family, Family::Kprime | Family::Lambda) || k == 0.6
}

/// All reports `verify-all` produces, in catalog order.
pub fn verify_all_reports(moduli: &[f64]) -> crate::Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for &k in moduli {
        for e in catalog().iter().filter(|e| runs_at(e.family, k)) {
            let opts = VerifyOptions {
                tolerance: if e.is_matrix() {
                    MATRIX_TOLERANCE
                } else {
                    DEFAULT_TOLERANCE
                },
                ..Default::default()
            };
            reports.push(verify_realization(e, k, &opts)?);
        }
    }
    Ok(reports)
}

fn casimir_ok(r: &VerificationReport) -> bool {
    match &r.casimir {
        CasimirReport::Field(_) => r.casimir.worst() <= CASIMIR_FIELD_TOLERANCE,
        CasimirReport::Matrix(_) => r.casimir.worst() <= MATRIX_TOLERANCE,
    }
}

fn cmd_verify_all(a: &VerifyAllArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let moduli = if a.modulus.is_empty() {
        DEFAULT_MODULI.to_vec()
    } else {
        a.modulus.clone()
    };
    let reports = verify_all_reports(&moduli)?;
    let mut failures = 0;
    writeln!(
        out,
        "{:<34} {:>5} {:>10} {:>10}  result",
        "entry", "k", "residual", "casimir"
    )?;
    for r in &reports {
        let pass = r.pass && casimir_ok(r);
        failures += usize::from(!pass);
        writeln!(
            out,
            "{:<34} {:>5} {:>10.2e} {:>10.2e}  {}",
            format!("{}/{}", r.entry.ck_type, r.entry.family),
            r.modulus,
            r.max_residual(),
            r.casimir.worst(),
            verdict(pass)
        )?;
    }
    writeln!(out)?;
    for t in CkType::ALL {
        let m = intrinsic_casimir(t, [1, 1, 1]);
        let value = match scalar_value(&m) {
            Some(c) => format!("{c}·I"),
            None => format!("not scalar {m:?}"),
        };
        writeln!(out, "intrinsic casimir {t} (+,+,+) → {value}")?;
    }
    for t in CkType::ALL {
        let found = signature_search(t)
            .into_iter()
            .map(|(s, c)| format!("{} → {c}·I", format_signature(s)))
            .collect::<Vec<_>>();
        writeln!(out, "signature search {t}: {}", found.join(", "))?;
    }
    writeln!(out)?;
    let mut closed = Vec::new();
    for e in catalog()
        .iter()
        .filter(|e| e.ck_type == CkType::Elliptic && !e.is_matrix())
    {
        if e.limit_k0 == LimitFlag::Prohibited && e.limit_k1 == LimitFlag::Prohibited {
            closed.push((e.family, "prohibited"));
        } else if e.limit_k0 == LimitFlag::NotApplicable && e.limit_k1 == LimitFlag::NotApplicable {
            closed.push((e.family, "not applicable"));
        }
    }
    for e in catalog().iter().filter(|e| !e.is_matrix()) {
        for which in [ModulusLimit::Zero, ModulusLimit::One] {
            if e.limit_flag(which) != LimitFlag::Allowed {
                continue;
            }
            if let LimitValue::Value { residuals, points } = verify_limit(e, which)? {
                let worst = residuals.iter().copied().fold(0.0, f64::max);
                let pass = worst <= DEFAULT_TOLERANCE;
                failures += usize::from(!pass);
                writeln!(
                    out,
                    "limit {} {}: {:.2e} on {points} points  {}",
                    e.id(),
                    which.label(),
                    worst,
                    verdict(pass)
                )?;
            }
        }
    }
    for (f, why) in closed {
        writeln!(out, "{f}: limits {why}")?;
    }
    writeln!(out)?;
    writeln!(out, "{} reports, {} failures", reports.len(), failures)?;
    if let Some(path) = &a.json {
        let text = serde_json::to_string_pretty(&reports)?;
        if path == "-" {
            writeln!(out, "{text}")?;
        } else {
            std::fs::write(path, text + "\n")?;
            writeln!(err, "wrote {path}")?;
        }
    }
    Ok(if failures == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_flow(a: &FlowArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let big_k = quarter_periods(a.gamma)?.real;
    let (cmp, traj) = compare_closed_form(a.gamma, a.z_end * big_k, a.steps)?;
    let l = crate::flow::LambdaTriple::from_gamma(a.gamma)?;
    traj.write_csv(&l, &mut *out)?;
    writeln!(
        err,
        "gamma {} over [0, {}] in {} steps: max deviation {:.3e}, endpoint {:.3e}, integral drift {:.3e}",
        a.gamma,
        format_real(cmp.z_end),
        cmp.steps,
        cmp.max_deviation,
        cmp.endpoint_error,
        cmp.integral_drift
    )?;
    Ok(EXIT_OK)
}

fn cmd_sample(a: &SampleArgs, out: &mut dyn Write) -> CliResult {
    if a.transform.lambda && !matches!(a.function, EllipticFn::Sn | EllipticFn::Cn | EllipticFn::Dn) {
        return Err(Error::UnsupportedFunction(a.function).into());
    }
    crate::theta::check_modulus(a.modulus)?;
    let mut w = csv::Writer::from_writer(&mut *out);
    w.write_record(["re_z", "im_z", "re_f", "im_f"])?;
    for y in a.im.values() {
        for x in a.re.values() {
            let z = Complex64::new(x, y);
            let (re, im) = match evaluate(a.function, z, a.modulus, &a.transform) {
                Ok(v) => (v.re.to_string(), v.im.to_string()),
                Err(Error::NearPole { .. }) => (String::new(), String::new()),
                Err(e) => return Err(e.into()),
            };
            w.write_record([x.to_string(), y.to_string(), re, im])?;
        }
    }
    w.flush()?;
    Ok(EXIT_OK)
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_range(s)
    }
}

//! Batch front end. Every command writes one report (JSON, or DOT for
//! cycles) to `--out` or standard output and returns an exit code:
//! 0 success, 1 numeric or verification failure, 2 usage error.

use crate::error::Error;
use crate::functional_system::{compatibility_det, riccati_coefficients, riccati_residual};
use crate::lie_symmetry::{self, classify_algebra, generators_n1, generators_n2, solve_symmetries, RiccatiModel};
use crate::model_core::{lambda_pm_curve, Family, ModelParams, Sign};
use crate::report::{complex_pair, round_sig};
use crate::riccati_forms::alt_riccati_residual;
use crate::spectral_maps::build_cycle_graph;
use crate::transfer_oracle::{diagonalize_sector, SpectralCurve};
use crate::zero_solver::{boundary_conditions, quadratic_residual, solve_zeroes};
use crate::{calculus, C64};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const DEFAULT_TOL: f64 = 1e-6;
const SEED: u64 = 0x5157_4E43;

#[derive(Parser, Debug)]
#[command(name = "sixvertex", version, about = "Six-vertex transfer-matrix spectra, Riccati checks and symmetry analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum CommandKind {
    Spectrum,
    Verify,
    Zeroes,
    Symmetry,
    Cycles,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalue curves of one sector
    Spectrum(Flags),
    /// Residual suites on every eigenvalue
    Verify(Flags),
    /// Zero-fixing solves seeded from perturbed oracle zeroes
    Zeroes(Flags),
    /// Lie symmetry algebra of the sector's Riccati equation
    Symmetry(Flags),
    /// Cycle graph of the spectral map on sector one (DOT)
    Cycles(Flags),
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum FamilyArg {
    Rational,
    Trigonometric,
}

#[derive(Args, Debug, Default)]
struct Flags {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    gamma: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    phi1: Option<C64>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    phi2: Option<C64>,
    /// comma-separated list of re+imi
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long = "L")]
    l: Option<usize>,
    #[arg(long)]
    sector: Option<usize>,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    u1: Option<C64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Configuration file contents; every field is optional and flags win.
#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    command: Option<CommandKind>,
    #[serde(default)]
    params: FileParams,
    sector: Option<usize>,
    u1: Option<C64>,
    tol: Option<f64>,
    out: Option<PathBuf>,
}

#[derive(Deserialize, Debug, Default)]
#[serde(deny_unknown_fields)]
struct FileParams {
    family: Option<Family>,
    gamma: Option<C64>,
    phi1: Option<C64>,
    phi2: Option<C64>,
    mu: Option<Vec<C64>>,
    #[serde(rename = "L")]
    l: Option<usize>,
}

/// Fully resolved settings for one command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: ModelParams,
    pub sector: Option<usize>,
    pub u1: Option<C64>,
    pub tol: f64,
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Numeric(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::InvalidParams(_) | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            other => Failure::Numeric(other.to_string()),
        }
    }
}

/// Parses "re", "imi", "re+imi" or "re-imi" (also "i", "-i").
pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot parse complex number {s:?}; expected re+imi");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    let re: f64 = re.parse().map_err(|_| bad())?;
    let im: f64 = im.parse().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}

fn parse_mu(s: &str) -> Result<Vec<C64>, Failure> {
    s.split(',').map(|p| parse_complex(p).map_err(Failure::Usage)).collect()
}

fn resolve(kind: CommandKind, flags: Flags) -> Result<RunConfig, Failure> {
    let file = match &flags.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
            let cfg: FileConfig = serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("bad config {}: {e}", path.display())))?;
            if cfg.command.is_some_and(|c| c != kind) {
                return Err(Failure::Usage("config file names a different command".into()));
            }
            cfg
        }
        None => FileConfig::default(),
    };
    let family = match flags.family {
        Some(FamilyArg::Rational) => Family::Rational,
        Some(FamilyArg::Trigonometric) => Family::Trigonometric,
        None => file.params.family.ok_or_else(|| Failure::Usage("--family is required".into()))?,
    };
    let l = flags.l.or(file.params.l).ok_or_else(|| Failure::Usage("--L is required".into()))?;
    let one = C64::new(1.0, 0.0);
    let mu = match &flags.mu {
        Some(s) => parse_mu(s)?,
        None => file.params.mu.unwrap_or_else(|| vec![C64::new(0.0, 0.0); l]),
    };
    if mu.len() != l {
        return Err(Failure::Usage(format!("--mu lists {} values for L = {l}", mu.len())));
    }
    let gamma = flags.gamma.or(file.params.gamma);
    if family == Family::Trigonometric && gamma.is_none() {
        return Err(Failure::Usage("--gamma is required for the trigonometric family".into()));
    }
    let params = ModelParams {
        family,
        gamma: gamma.unwrap_or_default(),
        phi1: flags.phi1.or(file.params.phi1).unwrap_or(one),
        phi2: flags.phi2.or(file.params.phi2).unwrap_or(one),
        mu,
        l,
    };
    params.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    let sector = flags.sector.or(file.sector);
    if let Some(n) = sector {
        if n > l {
            return Err(Failure::Usage(format!("sector {n} exceeds L = {l}")));
        }
    }
    let tol = flags.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0) {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    Ok(RunConfig { params, sector, u1: flags.u1.or(file.u1), tol, out: flags.out.or(file.out) })
}

fn require_sector(cfg: &RunConfig) -> Result<usize, Failure> {
    cfg.sector.ok_or_else(|| Failure::Usage("--sector is required".into()))
}

fn params_json(p: &ModelParams) -> Value {
    json!({
        "family": p.family,
        "gamma": complex_pair(p.gamma),
        "phi1": complex_pair(p.phi1),
        "phi2": complex_pair(p.phi2),
        "mu": p.mu.iter().map(|&z| complex_pair(z)).collect::<Vec<_>>(),
        "L": p.l,
    })
}

fn pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|&z| complex_pair(z)).collect()
}

pub fn spectrum_report(p: &ModelParams, n: usize) -> crate::Result<Value> {
    let curves = diagonalize_sector(p, n)?;
    let curves: Vec<Value> = curves
        .iter()
        .map(|c| json!({"coeffs": pairs(&c.curve.coeffs), "lambda0": complex_pair(c.lambda0), "zeroes": pairs(&c.zeroes)}))
        .collect();
    Ok(json!({"params": params_json(p), "sector": n, "curves": curves}))
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    Ok((spectrum_report(&cfg.params, require_sector(cfg)?)?, true))
}

fn sample_point(r: &mut ChaCha8Rng, avoid: &[C64], period: Option<f64>) -> C64 {
    loop {
        let x = C64::new(r.gen_range(-0.8..0.8), r.gen_range(-0.8..0.8));
        if avoid.iter().all(|&u| calculus::periodic_distance(x, u, period) > 0.05) {
            return x;
        }
    }
}

/// Zero subsets of size k used by the residual suites (at most `max`).
fn zero_subsets(zeroes: &[C64], k: usize, max: usize) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|s| {
                let start = s.last().map_or(0, |&v| v + 1);
                (start..zeroes.len()).map(move |j| [s.clone(), vec![j]].concat())
            })
            .collect();
    }
    out.into_iter().take(max).map(|s| s.iter().map(|&j| zeroes[j]).collect()).collect()
}

/// Maximum relative residuals of every applicable suite on one eigenvalue.
fn verify_curve(curve: &SpectralCurve, p: &ModelParams, r: &mut ChaCha8Rng) -> crate::Result<Value> {
    let n = curve.n;
    let period = p.period();
    let lam = |x: C64| curve.eval(x);
    let mut cc = 0.0_f64;
    for _ in 0..10 {
        let mut pts: Vec<C64> = Vec::new();
        for _ in 0..=n {
            let x = sample_point(r, &pts, period);
            pts.push(x);
        }
        cc = cc.max(compatibility_det(&pts, &lam, p)?.normalized());
    }
    let mut out = json!({ "cc": round_sig(cc) });
    if n == 0 || !curve.complete {
        return Ok(out);
    }
    let (mut ric, mut quad) = (0.0_f64, 0.0_f64);
    for subset in zero_subsets(&curve.zeroes, n - 1, 4) {
        for _ in 0..3 {
            let x = sample_point(r, &curve.zeroes, period);
            let co = riccati_coefficients(n, &subset, x, p)?;
            let (v, s) = riccati_residual(&co, curve.eval(x), curve.derivative(x));
            ric = ric.max(v.norm() / s);
            let (v, s) = quadratic_residual(curve, &subset, x, p)?;
            quad = quad.max(v.norm() / s);
        }
    }
    let bc = boundary_conditions(&curve.zeroes, curve.lambda0, n, p)?;
    out["riccati"] = json!(round_sig(ric));
    out["quad"] = json!(round_sig(quad));
    out["boundary"] = json!(round_sig(bc.lambda0.max(bc.phase)));
    if n == 2 && p.family == Family::Trigonometric {
        let mut alt = 0.0_f64;
        for _ in 0..5 {
            let x = sample_point(r, &curve.zeroes, period);
            let (v, s) = alt_riccati_residual(curve, x, p)?;
            alt = alt.max(v.norm() / s);
        }
        out["riccati2"] = json!(round_sig(alt));
    }
    Ok(out)
}

fn cmd_verify(cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    let p = &cfg.params;
    let sectors: Vec<usize> = match cfg.sector {
        Some(n) => vec![n],
        None => (0..=p.l).collect(),
    };
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    let mut reports = Vec::new();
    for n in sectors {
        let mut rows = Vec::new();
        for curve in diagonalize_sector(p, n)? {
            let row = verify_curve(&curve, p, &mut r)?;
            let worst = row.as_object().expect("object").values().filter_map(Value::as_f64).fold(0.0, f64::max);
            ok &= worst < cfg.tol;
            rows.push(row);
        }
        reports.push(json!({"sector": n, "eigenvalues": rows}));
    }
    Ok((json!({"params": params_json(p), "tol": cfg.tol, "passed": ok, "sectors": reports}), ok))
}

fn cmd_zeroes(cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    let p = &cfg.params;
    let n = require_sector(cfg)?;
    if n == 0 {
        return Err(Failure::Usage("sector 0 has no zero-fixing system".into()));
    }
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut ok = true;
    let mut solutions = Vec::new();
    for curve in diagonalize_sector(p, n)? {
        let seed: Vec<C64> =
            curve.zeroes.iter().map(|u| u * C64::new(1.0 + r.gen_range(-0.01..0.01), r.gen_range(-0.01..0.01))).collect();
        match solve_zeroes(p, n, &seed) {
            Ok(sol) => {
                let mut rep = sol.report();
                let d = sol.curve(p).map(|c| c.relative_distance(&curve.curve)).unwrap_or(f64::INFINITY);
                ok &= sol.converged && d < cfg.tol;
                rep["curve_distance"] = json!(round_sig(d));
                solutions.push(rep);
            }
            Err(e) => {
                ok = false;
                solutions.push(json!({"converged": false, "error": e.to_string()}));
            }
        }
    }
    Ok((json!({"params": params_json(p), "sector": n, "solutions": solutions}), ok))
}

/// 5×5 (x, Λ) grid clear of `avoid`.
fn symmetry_grid(avoid: &[C64]) -> Vec<(C64, C64)> {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let xs: Vec<C64> = (0..5).map(|_| sample_point(&mut r, avoid, None)).collect();
    let ls: Vec<C64> = (0..5).map(|k| C64::new(0.5 * k as f64 - 1.0, 0.3)).collect();
    xs.iter().flat_map(|&x| ls.iter().map(move |&l| (x, l))).collect()
}

fn interval_grid(sols: &lie_symmetry::SymmetrySolutions) -> Vec<(C64, C64)> {
    let (a, b) = sols.interval;
    (0..5)
        .flat_map(|k| {
            let x = C64::new(a + 0.2 + (b - a - 0.4) * k as f64 / 4.0, 0.0);
            [0.3, -0.7, 1.1].map(|l| (x, C64::new(l, 0.2)))
        })
        .collect()
}

fn cmd_symmetry(cfg: &RunConfig) -> Result<(Value, bool), Failure> {
    let p = &cfg.params;
    let n = require_sector(cfg)?;
    let report = match (n, p.family) {
        (1, Family::Rational) => {
            let minus = lambda_pm_curve(Sign::Minus, p).zeroes()?;
            classify_algebra(1, &generators_n1(p)?, &symmetry_grid(&minus)).to_json()
        }
        (1, Family::Trigonometric) => {
            let model = Arc::new(RiccatiModel::new(1, &[], p)?);
            let sols = solve_symmetries(model, None)?;
            classify_algebra(1, &sols.fields, &interval_grid(&sols)).to_json()
        }
        (2, _) => {
            let u1 = match cfg.u1 {
                Some(u) => u,
                None => diagonalize_sector(p, 2)?[0].zeroes[0],
            };
            let model = Arc::new(RiccatiModel::new(2, &[u1], p)?);
            let sols = solve_symmetries(model, None)?;
            let grid = interval_grid(&sols);
            let mut rep = classify_algebra(2, &sols.fields, &grid).to_json();
            if p.family == Family::Rational {
                let gens = generators_n2(u1, p)?;
                rep["closed_form"] = classify_algebra(2, &gens.fields, &grid).to_json();
                rep["discrepancy_report"] = serde_json::to_value(gens.check(&grid, Some(&sols), cfg.tol))
                    .map_err(|e| Failure::Numeric(e.to_string()))?;
                round_floats(&mut rep["discrepancy_report"]);
            }
            rep
        }
        _ => return Err(Failure::Usage(format!("symmetry analysis covers sectors 1 and 2, got {n}"))),
    };
    let ok = report["verdict"] == "sl2";
    Ok((report, ok))
}

fn round_floats(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => *v = json!(round_sig(num.as_f64().expect("f64"))),
        Value::Array(a) => a.iter_mut().for_each(round_floats),
        Value::Object(o) => o.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn cmd_cycles(cfg: &RunConfig) -> Result<(String, Value), Failure> {
    if cfg.params.family != Family::Rational {
        return Err(Failure::Usage("cycle graphs are defined for the rational family".into()));
    }
    if cfg.sector.is_some_and(|n| n != 1) {
        return Err(Failure::Usage("cycle graphs live in sector 1".into()));
    }
    let g = build_cycle_graph(&cfg.params)?;
    Ok((g.to_dot(), g.to_json()))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::Numeric(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::Numeric(e.to_string())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable report");
    s.push('\n');
    s
}

fn execute(kind: CommandKind, flags: Flags, stdout: &mut dyn Write) -> Result<bool, Failure> {
    let cfg = resolve(kind, flags)?;
    if kind == CommandKind::Cycles {
        let (dot, mirror) = cmd_cycles(&cfg)?;
        emit(&cfg.out, &dot, stdout)?;
        if let Some(path) = &cfg.out {
            emit(&Some(path.with_extension("json")), &pretty(&mirror), stdout)?;
        }
        return Ok(true);
    }
    let (report, ok) = match kind {
        CommandKind::Spectrum => cmd_spectrum(&cfg)?,
        CommandKind::Verify => cmd_verify(&cfg)?,
        CommandKind::Zeroes => cmd_zeroes(&cfg)?,
        CommandKind::Symmetry => cmd_symmetry(&cfg)?,
        CommandKind::Cycles => unreachable!("handled above"),
    };
    emit(&cfg.out, &pretty(&report), stdout)?;
    Ok(ok)
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
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
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let (kind, flags) = match cli.command {
        Command::Spectrum(f) => (CommandKind::Spectrum, f),
        Command::Verify(f) => (CommandKind::Verify, f),
        Command::Zeroes(f) => (CommandKind::Zeroes, f),
        Command::Symmetry(f) => (CommandKind::Symmetry, f),
        Command::Cycles(f) => (CommandKind::Cycles, f),
    };
    let out = flags.out.clone();
    match execute(kind, flags, stdout) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            let _ = emit(&out, &pretty(&json!({"error": msg})), stdout);
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

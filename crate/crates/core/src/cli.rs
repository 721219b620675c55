//! Command-line front end emitting CSV and JSON for external plotting.
//!
//! Exit codes: 0 success, 1 i/o failure, 2 invalid parameters or usage,
//! 3 numerical failure, 4 a check exceeded its tolerance.

use crate::cdi::{cdi_residual, cdi_rhs, cdi_rhs_beta_form};
use crate::error::{Error, Result};
use crate::finitekernel::{rescaled_kernel, rescaled_kernel_gauge, rescaled_r1, skew_kernel_tilde, SkewOpSystem};
use crate::limits::{kappa_origin, kappa_origin_alt, ode_residual, sup_error, EdgeSide, LimitKernelSpec};
use crate::linstat::{asymptotic_mean, asymptotic_variance, char_function, ks_normal, mc_linear_statistic, RadialStatistic};
use crate::params::{EnsembleParams, RegimeSpec};
use crate::sampler::export::{csv_with_header, fmt_f64};
use crate::sampler::{sample_ensemble, write_batch};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Debug, Parser)]
#[command(name = "sphefaffian", version, about = "Induced spherical symplectic Ginibre ensemble toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample eigenvalues of the matrix model.
    Sample(SampleArgs),
    /// Tabulate finite-N or limiting kernels on a grid.
    Kernel(KernelArgs),
    /// Run identity and equivalence checks.
    Check(CheckArgs),
    /// Linear statistics: moments, Monte Carlo and characteristic function.
    Linstat(LinstatArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeKind {
    Strong,
    Weak,
    Origin,
}

/// Raw `(N, n, L)` or one of the three regimes.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Size; a comma list is accepted by `kernel --compare`.
    #[arg(long = "N", value_delimiter = ',')]
    pub big_n: Vec<usize>,
    /// Exponent `n > N` of the Wishart factor.
    #[arg(long)]
    pub n: Option<f64>,
    /// Charge `L ≥ 0` at the origin; also selects the origin limit.
    #[arg(long = "L")]
    pub l: Option<f64>,
    /// Derive `(n, L)` from a scaling regime instead of `--n`/`--L`.
    #[arg(long, value_enum)]
    pub regime: Option<RegimeKind>,
    /// Strong regime: `L = aN`.
    #[arg(long)]
    pub a: Option<f64>,
    /// Strong regime zoom point; defaults to the middle of the droplet.
    #[arg(long)]
    pub p: Option<f64>,
    /// Weak regime: `n = N²/ρ²`.
    #[arg(long)]
    pub rho: Option<f64>,
    /// Weak non-unitarity: `n = N²/ρ²`, `L = n - N`.
    #[arg(long = "n-over-N-sq")]
    pub n_over_n_sq: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Strong and origin regimes: `n = (b+1)N`.
    #[arg(long = "b-param")]
    pub b: Option<f64>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Add `(theta, phi)` columns.
    #[arg(long)]
    pub sphere: bool,
    /// Output prefix; writes `<out>.csv` and `<out>.json`.
    #[arg(long, default_value = "sample")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LimitKind {
    StrongBulk,
    StrongEdge,
    StrongEdgeInner,
    Weak,
    Origin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// `κ̃_N` (finite) or `κ` (limit).
    Kernel,
    /// `e^{z²+w²} κ̃_N`, directly comparable with the limit.
    Gauge,
    /// One-point function.
    R1,
}

#[derive(Debug, Clone, Args)]
pub struct KernelArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Strong and origin regimes: `n = (b+1)N`.
    #[arg(long)]
    pub b: Option<f64>,
    /// Evaluate a limiting kernel instead of the finite-N one.
    #[arg(long, value_enum)]
    pub limit: Option<LimitKind>,
    /// `lo:hi:step`, applied to both real and imaginary parts of `z`.
    #[arg(long, default_value = "-1:1:0.5", allow_hyphen_values = true)]
    pub grid: String,
    /// Second argument `w` as `re,im`.
    #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
    pub w: String,
    #[arg(long, value_enum, default_value_t = Quantity::Kernel)]
    pub quantity: Quantity,
    /// Sup-error summary over the sizes listed in `--N`.
    #[arg(long)]
    pub compare: bool,
    #[arg(long, default_value = "kernel.csv")]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Cdi,
    BetaForm,
    Ode,
    SopEquiv,
    OriginForms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OdeVariant {
    StrongBulk,
    StrongEdge,
    Weak,
    Origin,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub kind: CheckKind,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Limit family for `ode`.
    #[arg(long, value_enum)]
    pub variant: Option<OdeVariant>,
    /// Override the default tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for randomly drawn test points.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LinstatArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Strong and origin regimes: `n = (b+1)N`.
    #[arg(long = "b-param")]
    pub b_param: Option<f64>,
    /// Statistic: `r2`, `r^p`, `const:c`, `sin`, `log1p2`.
    #[arg(long, default_value = "r2")]
    pub b: String,
    /// Monte Carlo trials; 0 evaluates the formulas only.
    #[arg(long, default_value_t = 0)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sweep the characteristic function instead.
    #[arg(long)]
    pub charfn: bool,
    /// `lo:hi:step` for the sweep.
    #[arg(long, default_value = "0:1:0.1")]
    pub k: String,
    /// Output prefix for the report and per-trial table, or the sweep CSV with `--charfn`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Failure of a CLI invocation with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Dimension(_) => 2,
            Error::Io(_) => 1,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

fn usage_error(msg: impl Into<String>) -> CliError {
    let usage = Cli::command().render_usage();
    CliError { code: 2, message: format!("{}\n\n{usage}\nRun `sphefaffian help <COMMAND>` for its flags.", msg.into()) }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `lo:hi:step` into an inclusive list.
pub fn parse_range(s: &str) -> Result<Vec<f64>> {
    let parts: Vec<f64> =
        s.split(':').map(|t| t.trim().parse::<f64>().map_err(|_| Error::domain(format!("bad range '{s}'")))).collect::<Result<_>>()?;
    let (lo, hi, step) = match parts[..] {
        [x] => (x, x, 1.0),
        [lo, hi, step] => (lo, hi, step),
        _ => return Err(Error::domain(format!("range '{s}' is not lo:hi:step"))),
    };
    if !(step > 0.0) || hi < lo {
        return Err(Error::domain(format!("range '{s}' needs lo ≤ hi and step > 0")));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| Error::domain(format!("bad complex '{s}'")));
    match parts[..] {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(Error::domain(format!("complex '{s}' is not re,im"))),
    }
}

/// Strong-regime `p` when the command does not zoom: the midpoint of the limiting annulus.
fn default_p(a: f64, b: f64) -> f64 {
    0.5 * ((a / (b + 1.0)).sqrt() + ((a + 1.0) / b).sqrt())
}

fn regime_of(p: &ParamArgs, b: Option<f64>, need_p: bool) -> CliResult<Option<RegimeSpec>> {
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| usage_error(format!("missing --{name} for this regime")));
    let r = match p.regime {
        Some(RegimeKind::Strong) => {
            let (a, b) = (need(p.a, "a")?, need(b, "b")?);
            let pp = if need_p { need(p.p, "p")? } else { p.p.unwrap_or_else(|| default_p(a, b)) };
            Some(RegimeSpec::Strong { a, b, p: pp })
        }
        Some(RegimeKind::Weak) => Some(RegimeSpec::Weak { rho: need(p.rho, "rho")? }),
        Some(RegimeKind::Origin) => Some(RegimeSpec::Origin { l: need(p.l, "L")?, b: need(b, "b")? }),
        None if p.n_over_n_sq => Some(RegimeSpec::Weak { rho: need(p.rho, "rho")? }),
        None => None,
    };
    if let Some(r) = &r {
        r.validate()?;
    }
    Ok(r)
}

fn resolve(p: &ParamArgs, b: Option<f64>, integer: bool, need_p: bool) -> CliResult<(EnsembleParams, Option<RegimeSpec>)> {
    let big_n = match p.big_n[..] {
        [n] => n,
        [] => return Err(usage_error("missing --N")),
        _ => return Err(usage_error("a list of sizes is only accepted by kernel --compare")),
    };
    if let Some(r) = regime_of(p, b, need_p)? {
        let e = if integer { r.integer_params(big_n)? } else { r.params(big_n)? };
        return Ok((e, Some(r)));
    }
    let n = p.n.ok_or_else(|| usage_error("missing --n (or a --regime)"))?;
    let e = EnsembleParams::new(big_n, n, p.l.unwrap_or(0.0))?;
    if integer && !e.is_integral() {
        return Err(usage_error(format!("sampling needs integer n and L, got n = {n}, L = {}", e.l)));
    }
    Ok((e, None))
}

fn params_json(e: &EnsembleParams) -> Value {
    let d = e.droplet();
    json!({ "N": e.big_n, "n": e.n, "L": e.l, "r1": d.r1, "r2": d.r2 })
}

fn meta(command: &str, seed: Option<u64>, e: Option<&EnsembleParams>, extra: Value) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    m.insert("command".into(), json!(command));
    if let Some(s) = seed {
        m.insert("seed".into(), json!(s));
    }
    if let Some(e) = e {
        m.insert("params".into(), params_json(e));
    }
    if let Value::Object(x) = extra {
        m.extend(x);
    }
    Value::Object(m)
}

fn write_json(path: &Path, v: &impl Serialize) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

fn cmd_sample(a: &SampleArgs) -> CliResult<()> {
    let (e, _) = resolve(&a.params, a.b, true, false)?;
    let batch = sample_ensemble(&e, a.trials, a.seed)?;
    let csv = a.out.with_extension("csv");
    let js = a.out.with_extension("json");
    write_batch(&batch, &csv, &js, a.sphere)?;
    println!("sampled {} trials of N = {} (n = {}, L = {}) into {}", a.trials, e.big_n, e.n, e.l, csv.display());
    Ok(())
}

fn limit_spec(kind: LimitKind, p: &ParamArgs) -> CliResult<LimitKernelSpec> {
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| usage_error(format!("missing --{name} for this limit")));
    let s = match kind {
        LimitKind::StrongBulk => LimitKernelSpec::StrongBulk,
        LimitKind::StrongEdge => LimitKernelSpec::StrongEdge { side: EdgeSide::Outer },
        LimitKind::StrongEdgeInner => LimitKernelSpec::StrongEdge { side: EdgeSide::Inner },
        LimitKind::Weak => LimitKernelSpec::Weak { rho: need(p.rho, "rho")? },
        LimitKind::Origin => LimitKernelSpec::Origin { l: need(p.l, "L")? },
    };
    s.validate()?;
    Ok(s)
}

fn grid_points(spec: &str) -> Result<Vec<Complex64>> {
    let xs = parse_range(spec)?;
    Ok(xs.iter().flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, y))).collect())
}

fn cmd_kernel(a: &KernelArgs) -> CliResult<()> {
    let points = grid_points(&a.grid)?;
    let w = parse_complex(&a.w)?;
    if a.compare {
        return cmd_kernel_compare(a, &points);
    }
    let (label, eval): (Value, Box<dyn Fn(Complex64) -> Result<Complex64>>) = if let Some(kind) = a.limit {
        let s = limit_spec(kind, &a.params)?;
        let f: Box<dyn Fn(Complex64) -> Result<Complex64>> = match a.quantity {
            Quantity::R1 => Box::new(move |z| crate::limits::limit_rk(&s, &[z]).map(|v| Complex64::new(v, 0.0))),
            _ => Box::new(move |z| s.kernel(z, w)),
        };
        (json!({ "limit": s }), f)
    } else {
        let (e, r) = resolve(&a.params, a.b, false, true)?;
        let f: Box<dyn Fn(Complex64) -> Result<Complex64>> = match (r, a.quantity) {
            (Some(r), Quantity::Kernel) => Box::new(move |z| rescaled_kernel(&e, &r, z, w)),
            (Some(r), Quantity::Gauge) => Box::new(move |z| rescaled_kernel_gauge(&e, &r, z, w)),
            (Some(r), Quantity::R1) => Box::new(move |z| rescaled_r1(&e, &r, z).map(|v| Complex64::new(v, 0.0))),
            (None, Quantity::R1) => Box::new(move |z| crate::finitekernel::correlation_rk(&e, &[z]).map(|v| Complex64::new(v, 0.0))),
            (None, _) => Box::new(move |z| skew_kernel_tilde(&e, z, w)),
        };
        (json!({ "params": params_json(&e), "regime": r }), f)
    };
    let header = meta("kernel", None, None, json!({ "source": label, "w": [w.re, w.im], "quantity": format!("{:?}", a.quantity) }));
    let mut out = csv_with_header(&a.out, &header)?;
    out.write_record(["re_z", "im_z", "re_val", "im_val"]).map_err(Error::from)?;
    for z in &points {
        let v = eval(*z)?;
        out.write_record([fmt_f64(z.re), fmt_f64(z.im), fmt_f64(v.re), fmt_f64(v.im)]).map_err(Error::from)?;
    }
    out.flush().map_err(Error::from)?;
    println!("wrote {} grid points to {}", points.len(), a.out.display());
    Ok(())
}

fn cmd_kernel_compare(a: &KernelArgs, points: &[Complex64]) -> CliResult<()> {
    let r = regime_of(&a.params, a.b, true)?.ok_or_else(|| usage_error("--compare needs a --regime"))?;
    let sizes = &a.params.big_n;
    if sizes.is_empty() {
        return Err(usage_error("--compare needs --N sizes"));
    }
    let errors: Vec<f64> = sizes.iter().map(|&n| sup_error(&r.params(n)?, &r, points)).collect::<Result<_>>()?;
    let monotone = errors.windows(2).all(|w| w[1] < w[0]);
    let ratio = errors.last().unwrap() / errors[0];
    let report = meta(
        "kernel-compare",
        None,
        None,
        json!({ "regime": r, "limit": LimitKernelSpec::for_regime(&r)?, "sizes": sizes, "sup_errors": errors, "monotone": monotone, "ratio": ratio }),
    );
    let out = a.out.with_extension("json");
    write_json(&out, &report)?;
    for (n, e) in sizes.iter().zip(&errors) {
        println!("N = {n:5}  sup error = {e:.3e}");
    }
    println!("final/initial = {ratio:.3}, monotone = {monotone}");
    Ok(())
}

fn check_grid(lo: f64, hi: f64, k: usize) -> Vec<Complex64> {
    let step = if k > 1 { (hi - lo) / (k - 1) as f64 } else { 0.0 };
    (0..k).flat_map(|i| (0..k).map(move |j| Complex64::new(lo + i as f64 * step, lo + j as f64 * step))).collect()
}

fn cmd_check(a: &CheckArgs) -> CliResult<()> {
    let (name, tol, worst, extra): (&str, f64, f64, Value) = match a.kind {
        CheckKind::Cdi => {
            let (e, _) = resolve(&a.params, None, false, false)?;
            let tol = a.tol.unwrap_or(1e-8);
            let grid = check_grid(-0.4, 0.4, 5);
            let mut worst: f64 = 0.0;
            for &z in &grid {
                for &w in &grid {
                    worst = worst.max(cdi_residual(&e, z, w)?);
                }
            }
            ("cdi", tol, worst, json!({ "params": params_json(&e) }))
        }
        CheckKind::BetaForm => {
            let (e, _) = resolve(&a.params, None, false, false)?;
            let tol = a.tol.unwrap_or(1e-9);
            let grid = check_grid(0.05, 0.45, 4);
            let mut worst: f64 = 0.0;
            for &z in &grid {
                for &w in &grid {
                    let s = cdi_rhs(&e, z, w)?;
                    let b = cdi_rhs_beta_form(&e, z, w)?;
                    for (x, y) in [(s.term1, b.term1), (s.term2, b.term2), (s.term3, b.term3)] {
                        if x.norm() > 0.0 {
                            worst = worst.max((x - y).norm() / x.norm());
                        }
                    }
                }
            }
            ("beta-form", tol, worst, json!({ "params": params_json(&e) }))
        }
        CheckKind::Ode => {
            let variant = a.variant.ok_or_else(|| usage_error("missing --variant"))?;
            let spec = match variant {
                OdeVariant::StrongBulk => LimitKernelSpec::StrongBulk,
                OdeVariant::StrongEdge => LimitKernelSpec::StrongEdge { side: EdgeSide::Outer },
                OdeVariant::Weak => LimitKernelSpec::Weak { rho: a.params.rho.ok_or_else(|| usage_error("missing --rho"))? },
                OdeVariant::Origin => LimitKernelSpec::Origin { l: a.params.l.unwrap_or(0.0) },
            };
            spec.validate()?;
            let tol = a.tol.unwrap_or(1e-6);
            let grid = check_grid(-0.6, 0.6, 4);
            let mut worst: f64 = 0.0;
            for &z in &grid {
                for &w in &grid {
                    let (d, diag) = ode_residual(&spec, z, w)?;
                    worst = worst.max(d).max(diag);
                }
            }
            ("ode", tol, worst, json!({ "limit": spec }))
        }
        CheckKind::SopEquiv => {
            let (e, _) = resolve(&a.params, None, false, false)?;
            let tol = a.tol.unwrap_or(1e-10);
            let sop = SkewOpSystem::new(e)?;
            let mut rng = crate::sampler::trial_rng(a.seed, 0);
            let mut worst: f64 = 0.0;
            for _ in 0..20 {
                let mut pt = || Complex64::new(rng.random_range(-0.8..0.8), rng.random_range(-0.8..0.8));
                let (z, w) = (pt(), pt());
                let x = skew_kernel_tilde(&e, z, w)?;
                let y = sop.kernel_tilde(z, w)?;
                worst = worst.max((x - y).norm() / x.norm());
            }
            ("sop-equiv", tol, worst, json!({ "params": params_json(&e) }))
        }
        CheckKind::OriginForms => {
            let l = a.params.l.unwrap_or(1.0);
            let tol = a.tol.unwrap_or(1e-8);
            let grid = check_grid(-0.6, 0.6, 4);
            let mut worst: f64 = 0.0;
            for &z in &grid {
                for &w in &grid {
                    let x = kappa_origin(l, z, w)?;
                    let y = kappa_origin_alt(l, z, w)?;
                    worst = worst.max((x - y).norm() / x.norm().max(1e-300));
                }
            }
            ("origin-forms", tol, worst, json!({ "L": l }))
        }
    };
    let pass = worst <= tol;
    let report = meta(
        "check",
        Some(a.seed),
        None,
        json!({ "check": name, "max_residual": worst, "tolerance": tol, "pass": pass, "details": extra }),
    );
    let text = serde_json::to_string_pretty(&report).map_err(Error::from)?;
    if let Some(p) = &a.out {
        std::fs::write(p, text.clone() + "\n").map_err(Error::from)?;
    }
    println!("{text}");
    if pass {
        Ok(())
    } else {
        Err(CliError { code: 4, message: format!("{name}: max residual {worst:e} exceeds {tol:e}") })
    }
}

fn cmd_linstat(a: &LinstatArgs) -> CliResult<()> {
    let b = RadialStatistic::parse(&a.b)?;
    let integer = a.trials > 0;
    let (e, r) = resolve(&a.params, a.b_param, integer, false)?;
    if a.charfn {
        let ks = parse_range(&a.k)?;
        let out = a.out.clone().unwrap_or_else(|| PathBuf::from("charfn.csv"));
        let header = meta("linstat-charfn", None, Some(&e), json!({ "statistic": b.label, "regime": r }));
        let mut w = csv_with_header(&out, &header)?;
        w.write_record(["k", "re", "im"]).map_err(Error::from)?;
        for k in &ks {
            let v = char_function(&e, &b, *k)?;
            w.write_record([fmt_f64(*k), fmt_f64(v.re), fmt_f64(v.im)]).map_err(Error::from)?;
        }
        w.flush().map_err(Error::from)?;
        println!("wrote {} characteristic-function values to {}", ks.len(), out.display());
        return Ok(());
    }
    let mean = asymptotic_mean(&e, &b)?;
    let variance = asymptotic_variance(&e, &b)?;
    let mut body = json!({ "statistic": b.label, "regime": r, "asymptotic_mean": mean, "asymptotic_variance": variance });
    if a.trials > 0 {
        let batch = sample_ensemble(&e, a.trials, a.seed)?;
        let mc = mc_linear_statistic(&batch, &b)?;
        body["trials"] = json!(a.trials);
        body["mc_mean"] = json!(mc.mean);
        body["mc_mean_se"] = json!(mc.mean_se);
        body["mc_variance"] = json!(mc.variance);
        body["mc_variance_se"] = json!(mc.variance_se);
        body["mean_z"] = json!(if mc.mean_se > 0.0 { (mc.mean - mean) / mc.mean_se } else { 0.0 });
        body["variance_rel_err"] = json!(if variance > 0.0 { (mc.variance - variance) / variance } else { mc.variance });
        if mc.variance > 0.0 {
            body["ks"] = serde_json::to_value(ks_normal(&mc.samples)?).map_err(Error::from)?;
        }
        if let Some(out) = &a.out {
            let tbl = out.with_extension("csv");
            let header = meta("linstat-samples", Some(a.seed), Some(&e), json!({ "statistic": b.label }));
            let mut w = csv_with_header(&tbl, &header)?;
            w.write_record(["trial", "B"]).map_err(Error::from)?;
            for (t, v) in mc.samples.iter().enumerate() {
                w.write_record([t.to_string(), fmt_f64(*v)]).map_err(Error::from)?;
            }
            w.flush().map_err(Error::from)?;
        }
    }
    let report = meta("linstat", Some(a.seed), Some(&e), body);
    let text = serde_json::to_string_pretty(&report).map_err(Error::from)?;
    if let Some(out) = &a.out {
        std::fs::write(out.with_extension("json"), text.clone() + "\n").map_err(Error::from)?;
    }
    println!("{text}");
    Ok(())
}

/// Runs a parsed command line.
pub fn execute(cli: &Cli) -> CliResult<()> {
    match &cli.command {
        Command::Sample(a) => cmd_sample(a),
        Command::Kernel(a) => cmd_kernel(a),
        Command::Check(a) => cmd_check(a),
        Command::Linstat(a) => cmd_linstat(a),
    }
}

/// Parses `args` and runs them, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

//! Radial linear statistics `B = Σ b(|ζ_j|)`: exact characteristic function,
//! asymptotic mean and variance, and Monte Carlo estimates.

use crate::error::{Error, Result};
use crate::finitekernel::log_moment_h;
use crate::params::EnsembleParams;
use crate::quad::{gauss_legendre, integrate, integrate_real, integrate_semi_infinite, QuadOptions};
use crate::sampler::SampleBatch;
use crate::specfun::{erfc_c, lgam, reg_inc_beta};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A radial test function with its derivative.
#[derive(Clone)]
pub struct RadialStatistic {
    pub label: String,
    pub b: RealFn,
    pub db: RealFn,
}

impl fmt::Debug for RadialStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RadialStatistic").field("label", &self.label).finish()
    }
}

impl RadialStatistic {
    pub fn new(
        label: impl Into<String>,
        b: impl Fn(f64) -> f64 + Send + Sync + 'static,
        db: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        Self { label: label.into(), b: Arc::new(b), db: Arc::new(db) }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("const:{c}"), move |_| c, |_| 0.0)
    }

    /// `b(r) = r^p`.
    pub fn power(p: f64) -> Self {
        Self::new(format!("r^{p}"), move |r: f64| r.powf(p), move |r: f64| if p == 0.0 { 0.0 } else { p * r.powf(p - 1.0) })
    }

    pub fn sin() -> Self {
        Self::new("sin", f64::sin, f64::cos)
    }

    /// Parses `r2`, `r^p`, `const:c`, `sin` or `log1p2` (`log(1+r²)`).
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "r2" {
            return Ok(Self::power(2.0));
        }
        if s == "sin" {
            return Ok(Self::sin());
        }
        if s == "log1p2" {
            return Ok(Self::new("log1p2", |r: f64| (r * r).ln_1p(), |r: f64| 2.0 * r / (1.0 + r * r)));
        }
        let num = |t: &str| t.parse::<f64>().map_err(|_| Error::domain(format!("bad number in statistic '{s}'")));
        if let Some(c) = s.strip_prefix("const:") {
            return Ok(Self::constant(num(c)?));
        }
        if let Some(p) = s.strip_prefix("r^") {
            return Ok(Self::power(num(p)?));
        }
        Err(Error::domain(format!("unknown statistic '{s}'")))
    }

    pub fn eval(&self, r: f64) -> f64 {
        (self.b)(r)
    }

    pub fn deriv(&self, r: f64) -> f64 {
        (self.db)(r)
    }
}

/// Above this power of `r` the moments `u_l` come from the log-Γ closed form only.
pub const QUADRATURE_MAX_EXPONENT: f64 = 60.0;

fn radial_exponents(params: &EnsembleParams, l: usize) -> Result<(f64, f64)> {
    let a = 2.0 * l as f64 + 2.0 * params.l + 2.0;
    let b = 2.0 * params.n - 2.0 * l as f64;
    if !(b > 0.0) {
        return Err(Error::domain(format!("u_{l} diverges for n = {}", params.n)));
    }
    Ok((a, b))
}

/// `log u_l` with `u_l = ∫₀^∞ r^{4l+3} e^{-2NQ(r)} dr = h_{2l+1}/2`.
pub fn log_ul_closed(params: &EnsembleParams, l: usize) -> Result<f64> {
    let (a, b) = radial_exponents(params, l)?;
    Ok(lgam(a) + lgam(b) - lgam(a + b) - std::f64::consts::LN_2)
}

/// `u_l` by adaptive quadrature of the defining integral.
pub fn ul_quadrature(params: &EnsembleParams, l: usize) -> Result<f64> {
    radial_exponents(params, l)?;
    let e = 4.0 * l as f64 + 4.0 * params.l + 3.0;
    let s = 2.0 * (params.n + params.l + 1.0);
    let f = |r: f64| {
        if r == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::new((e * r.ln() - s * (r * r).ln_1p()).exp(), 0.0)
    };
    integrate_semi_infinite(f, 0.0, QuadOptions::tol(1e-300, 1e-13)).map(|z| z.re)
}

/// `u_l(b)/u_l`, the average of `e^{ikb(r)}` under the normalized `l`-th radial weight.
pub fn ul_ratio(params: &EnsembleParams, b: &RadialStatistic, k: f64, l: usize) -> Result<Complex64> {
    if k == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    beta_average(params, l, true, |r| Complex64::from_polar(1.0, k * b.eval(r)))
}

const TAIL_MASS: f64 = 1e-17;

/// Largest `s` with Beta upper-tail mass `I_s(b, a)` below [`TAIL_MASS`], by bisection in `log s`.
fn upper_cut(a: f64, b: f64) -> Result<f64> {
    let tail = |s: f64| reg_inc_beta(Complex64::new(s, 0.0), b, a).map(|v| v.re);
    let (mut lo, mut hi) = (-745.0f64, 0.0f64);
    if tail(lo.exp())? > TAIL_MASS {
        return Ok(0.0);
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if tail(mid.exp())? > TAIL_MASS {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lo.exp())
}

/// Average of `g(r)` under the weight `r^{4l+3} e^{-2NQ(r)}/u_l`, in the variable `t = r²/(1+r²)`.
///
/// A `bounded` integrand with `|g| ≤ 1` drops the upper tail of mass below [`TAIL_MASS`].
fn beta_average(params: &EnsembleParams, l: usize, bounded: bool, g: impl Fn(f64) -> Complex64) -> Result<Complex64> {
    let (a, b) = radial_exponents(params, l)?;
    let t_max = if bounded { 1.0 - upper_cut(a, b)? } else { 1.0 };
    let log_norm = lgam(a + b) - lgam(a) - lgam(b);
    let f = |t: f64| {
        if t <= 0.0 || t >= 1.0 {
            return Complex64::new(0.0, 0.0);
        }
        let w = (log_norm + (a - 1.0) * t.ln() + (b - 1.0) * (-t).ln_1p()).exp();
        g((t / (1.0 - t)).sqrt()) * w
    };
    let mode = ((a - 1.0) / (a + b - 2.0)).clamp(0.0, 1.0);
    let sd = (a * b / ((a + b) * (a + b) * (a + b + 1.0))).sqrt();
    let mut cuts = vec![0.0];
    for c in [mode - 12.0 * sd, mode, mode + 12.0 * sd] {
        if c > *cuts.last().unwrap() && c < t_max {
            cuts.push(c);
        }
    }
    cuts.push(t_max);
    let opts = QuadOptions::tol(1e-15, 1e-13);
    let mut total = Complex64::new(0.0, 0.0);
    for w in cuts.windows(2) {
        total += integrate(f, w[0], w[1], opts)?;
    }
    Ok(total)
}

/// `(u_l(b), u_l)` for `l = 0, …, N-1`.
pub fn ul_moments(params: &EnsembleParams, b: &RadialStatistic, k: f64) -> Result<(Vec<Complex64>, Vec<f64>)> {
    let mut ub = Vec::with_capacity(params.big_n);
    let mut u = Vec::with_capacity(params.big_n);
    for l in 0..params.big_n {
        let closed = log_ul_closed(params, l)?.exp();
        let e = 4.0 * l as f64 + 4.0 * params.l + 3.0;
        let ul = if e <= QUADRATURE_MAX_EXPONENT {
            let q = ul_quadrature(params, l)?;
            if (q - closed).abs() > 1e-10 * closed {
                return Err(Error::Numerical(format!("u_{l}: quadrature {q:e} disagrees with closed form {closed:e}")));
            }
            q
        } else {
            closed
        };
        ub.push(ul_ratio(params, b, k, l)? * ul);
        u.push(ul);
    }
    Ok((ub, u))
}

/// `P̂_{N,B}(k) = Π_l u_l(b)/u_l`.
///
/// Returns a quadrature error when `e^{ikb(r)}` oscillates too fast to resolve on the heavy tail of the weight.
pub fn char_function(params: &EnsembleParams, b: &RadialStatistic, k: f64) -> Result<Complex64> {
    let mut log_p = Complex64::new(0.0, 0.0);
    for l in 0..params.big_n {
        let r = ul_ratio(params, b, k, l)?;
        if r.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        log_p += r.ln();
    }
    Ok(log_p.exp())
}

/// Exact finite-N mean and variance: `B` is a sum of independent radial variables.
pub fn exact_moments(params: &EnsembleParams, b: &RadialStatistic) -> Result<(f64, f64)> {
    let mut mean = 0.0;
    let mut var = 0.0;
    for l in 0..params.big_n {
        let m1 = beta_average(params, l, false, |r| Complex64::new(b.eval(r), 0.0))?.re;
        let m2 = beta_average(params, l, false, |r| Complex64::new((b.eval(r) - m1).powi(2), 0.0))?.re;
        mean += m1;
        var += m2;
    }
    Ok((mean, var))
}

/// `(n+L) · 2∫_{r1}^{r2} b(r) r (1+r²)^{-2} dr`.
pub fn asymptotic_mean(params: &EnsembleParams, b: &RadialStatistic) -> Result<f64> {
    let d = params.droplet();
    let f = |r: f64| b.eval(r) * 2.0 * r / ((1.0 + r * r) * (1.0 + r * r));
    Ok((params.n + params.l) * integrate_real(f, d.r1, d.r2, 1e-13)?)
}

/// `¼∫_{r1}^{r2} r b′(r)² dr`.
pub fn asymptotic_variance(params: &EnsembleParams, b: &RadialStatistic) -> Result<f64> {
    let d = params.droplet();
    let f = |r: f64| r * b.deriv(r).powi(2);
    Ok(0.25 * integrate_real(f, d.r1, d.r2, 1e-13)?)
}

/// `(1/8)∫_S |∇b(|ζ|)|² dA` with `dA = d²ζ/π`, the gradient taken by Cartesian differences.
pub fn asymptotic_variance_2d(params: &EnsembleParams, b: &RadialStatistic, nodes: usize) -> Result<f64> {
    let d = params.droplet();
    let (x, w) = gauss_legendre(nodes);
    let grad2 = |px: f64, py: f64| {
        let f = |u: f64, v: f64| b.eval((u * u + v * v).sqrt());
        let diff = |h: f64| {
            let gx = (f(px + h, py) - f(px - h, py)) / (2.0 * h);
            let gy = (f(px, py + h) - f(px, py - h)) / (2.0 * h);
            (gx, gy)
        };
        let h = 1e-3 * (px * px + py * py).sqrt().max(1e-3);
        let (ax, ay) = diff(h);
        let (bx, by) = diff(h / 2.0);
        let gx = (4.0 * bx - ax) / 3.0;
        let gy = (4.0 * by - ay) / 3.0;
        gx * gx + gy * gy
    };
    let (hr, cr) = (0.5 * (d.r2 - d.r1), 0.5 * (d.r2 + d.r1));
    let pi = std::f64::consts::PI;
    let mut total = 0.0;
    for (xi, wi) in x.iter().zip(&w) {
        let r = cr + hr * xi;
        for (xj, wj) in x.iter().zip(&w) {
            let phi = pi * (xj + 1.0);
            total += wi * wj * hr * pi * r * grad2(r * phi.cos(), r * phi.sin());
        }
    }
    if !total.is_finite() {
        return Err(Error::Quadrature("non-finite 2D variance integrand".into()));
    }
    Ok(total / pi / 8.0)
}

/// Monte Carlo summary of `B` over a sample batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinstatSample {
    pub mean: f64,
    pub variance: f64,
    pub mean_se: f64,
    pub variance_se: f64,
    pub samples: Vec<f64>,
}

/// `B` per trial over the `N` upper-half representatives.
pub fn mc_linear_statistic(batch: &SampleBatch, b: &RadialStatistic) -> Result<LinstatSample> {
    if batch.eigen_pairs.is_empty() {
        return Err(Error::domain("empty sample batch"));
    }
    let samples: Vec<f64> = batch.eigen_pairs.iter().map(|t| t.iter().map(|z| b.eval(z.norm())).sum()).collect();
    let m = samples.len() as f64;
    let mean = samples.iter().sum::<f64>() / m;
    let c2 = samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / m;
    let c4 = samples.iter().map(|x| (x - mean).powi(4)).sum::<f64>() / m;
    let variance = if m > 1.0 { c2 * m / (m - 1.0) } else { 0.0 };
    let mean_se = (variance / m).sqrt();
    let variance_se = ((c4 - c2 * c2).max(0.0) / m).sqrt();
    Ok(LinstatSample { mean, variance, mean_se, variance_se, samples })
}

/// Saddle `r_l` of the leading exponent `4(L+l)log r - 2(n+L)log(1+r²)` and its curvature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaplaceSaddle {
    pub r_l: f64,
    pub f_pp: f64,
    pub degenerate: bool,
    /// `|f′(r_l)|` relative to the scale `√|f″|`.
    pub stationarity: f64,
}

pub fn laplace_saddle(params: &EnsembleParams, l: usize) -> Result<LaplaceSaddle> {
    let (n, big_l) = (params.n, params.l);
    let lf = l as f64;
    if l >= params.big_n || lf >= n {
        return Err(Error::domain(format!("saddle index {l} outside 0..N with n = {n}")));
    }
    let r_l = ((big_l + lf) / (n - lf)).sqrt();
    let f_pp = -8.0 * (n - lf).powi(2) / (n + big_l);
    let degenerate = r_l == 0.0;
    let stationarity = if degenerate {
        0.0
    } else {
        let fp = 4.0 * (big_l + lf) / r_l - 4.0 * (n + big_l) * r_l / (1.0 + r_l * r_l);
        fp.abs() / f_pp.abs().sqrt()
    };
    Ok(LaplaceSaddle { r_l, f_pp, degenerate, stationarity })
}

/// Leading exponent whose maximum is the Laplace saddle.
pub fn laplace_exponent(params: &EnsembleParams, l: usize, r: f64) -> f64 {
    4.0 * (params.l + l as f64) * r.ln() - 2.0 * (params.n + params.l) * (r * r).ln_1p()
}

/// Kolmogorov–Smirnov test of standardized samples against the standard normal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KsResult {
    pub statistic: f64,
    pub p_value: f64,
}

fn normal_cdf(x: f64) -> f64 {
    0.5 * erfc_c(Complex64::new(-x / std::f64::consts::SQRT_2, 0.0)).re
}

/// Asymptotic Kolmogorov survival function with the Stephens small-sample correction.
pub fn kolmogorov_p(d: f64, m: usize) -> f64 {
    let sm = (m as f64).sqrt();
    let lambda = (sm + 0.12 + 0.11 / sm) * d;
    if lambda < 0.2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for j in 1..=100 {
        let jf = j as f64;
        let t = 2.0 * (-1f64).powi(j - 1) * (-2.0 * jf * jf * lambda * lambda).exp();
        sum += t;
        if t.abs() < 1e-16 {
            break;
        }
    }
    sum.clamp(0.0, 1.0)
}

/// KS test after centering by the sample mean and scaling by the sample standard deviation.
pub fn ks_normal(samples: &[f64]) -> Result<KsResult> {
    let m = samples.len();
    if m < 2 {
        return Err(Error::domain("KS test needs at least two samples"));
    }
    let mean = samples.iter().sum::<f64>() / m as f64;
    let sd = (samples.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (m - 1) as f64).sqrt();
    if !(sd > 0.0) {
        return Err(Error::domain("KS test needs non-degenerate samples"));
    }
    let mut z: Vec<f64> = samples.iter().map(|x| (x - mean) / sd).collect();
    z.sort_by(f64::total_cmp);
    let mf = m as f64;
    let statistic = z
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let c = normal_cdf(x);
            (c - i as f64 / mf).max((i + 1) as f64 / mf - c)
        })
        .fold(0.0, f64::max);
    Ok(KsResult { statistic, p_value: kolmogorov_p(statistic, m) })
}

/// `u_l` against `h_{2l+1}/2`, the largest relative mismatch over `l < N`.
pub fn ul_closed_form_mismatch(params: &EnsembleParams) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for l in 0..params.big_n {
        let a = log_ul_closed(params, l)?;
        let b = log_moment_h(params, 2 * l + 1)? - std::f64::consts::LN_2;
        worst = worst.max((a - b).exp_m1().abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::RegimeSpec;
    use crate::sampler::trial_rng;
    use rand_distr::{Distribution, Normal};

    fn p(nn: usize, n: f64, l: f64) -> EnsembleParams {
        EnsembleParams::new(nn, n, l).unwrap()
    }

    #[test]
    fn u0_two_routes() {
        let e = p(1, 2.0, 0.0);
        let q = ul_quadrature(&e, 0).unwrap();
        assert!((q - 1.0 / 40.0).abs() < 1e-12 * q);
        assert!((log_ul_closed(&e, 0).unwrap().exp() - q).abs() < 1e-12 * q);
        let e = p(4, 7.0, 1.5);
        for l in 0..4 {
            let q = ul_quadrature(&e, l).unwrap();
            assert!((log_ul_closed(&e, l).unwrap().exp() - q).abs() < 1e-12 * q);
        }
        assert!(ul_closed_form_mismatch(&e).unwrap() < 1e-13);
    }

    #[test]
    fn trivial_statistics() {
        let e = p(5, 9.0, 2.0);
        let zero = RadialStatistic::constant(0.0);
        let (ub, u) = ul_moments(&e, &zero, 0.7).unwrap();
        for (a, b) in ub.iter().zip(&u) {
            assert!((a - b).norm() < 1e-12 * b);
        }
        let b = RadialStatistic::power(2.0);
        assert_eq!(char_function(&e, &b, 0.0).unwrap(), Complex64::new(1.0, 0.0));
        let c = RadialStatistic::constant(3.0);
        let k = 0.4;
        let want = Complex64::from_polar(1.0, k * 5.0 * 3.0);
        assert!((char_function(&e, &c, k).unwrap() - want).norm() < 1e-12);
        for k in [0.3, 1.0, 5.0] {
            assert!(char_function(&e, &b, k).unwrap().norm() <= 1.0 + 1e-14);
        }
    }

    #[test]
    fn char_function_gaussian_shape() {
        let r = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
        let e = r.params(20).unwrap();
        let b = RadialStatistic::power(2.0);
        let k = 0.1;
        let lp = char_function(&e, &b, k).unwrap().ln();
        let mu = asymptotic_mean(&e, &b).unwrap();
        let s2 = asymptotic_variance(&e, &b).unwrap();
        assert!((lp.im / k - mu).abs() < 0.05 * mu);
        assert!((-2.0 * lp.re / (k * k) - s2).abs() < 0.05 * s2);
    }

    #[test]
    fn mean_formulas() {
        let e = p(30, 60.0, 30.0);
        let one = RadialStatistic::constant(1.0);
        assert!((asymptotic_mean(&e, &one).unwrap() - 30.0).abs() < 1e-10);
        let r2 = RadialStatistic::power(2.0);
        let d = e.droplet();
        let prim = |r: f64| (1.0 + r * r).ln() + 1.0 / (1.0 + r * r);
        let closed = (e.n + e.l) * (prim(d.r2) - prim(d.r1));
        assert!((asymptotic_mean(&e, &r2).unwrap() - closed).abs() < 1e-10 * closed);
        let s = RadialStatistic::sin();
        let sum = RadialStatistic::new("r2+sin", |r: f64| r * r + r.sin(), |r: f64| 2.0 * r + r.cos());
        let lin = asymptotic_mean(&e, &r2).unwrap() + asymptotic_mean(&e, &s).unwrap();
        assert!((asymptotic_mean(&e, &sum).unwrap() - lin).abs() < 1e-12 * lin);
    }

    #[test]
    fn variance_formulas() {
        let e = p(30, 60.0, 30.0);
        let d = e.droplet();
        assert_eq!(asymptotic_variance(&e, &RadialStatistic::constant(2.0)).unwrap(), 0.0);
        let v = asymptotic_variance(&e, &RadialStatistic::power(2.0)).unwrap();
        assert!((v - (d.r2.powi(4) - d.r1.powi(4)) / 4.0).abs() < 1e-12);
        let s = RadialStatistic::sin();
        let a = asymptotic_variance(&e, &s).unwrap();
        let b = asymptotic_variance_2d(&e, &s, 48).unwrap();
        assert!((a - b).abs() < 1e-10 * a, "{a} vs {b}");
    }

    #[test]
    fn exact_moments_match_char_function() {
        let e = p(6, 11.0, 2.0);
        let b = RadialStatistic::power(2.0);
        let (m, v) = exact_moments(&e, &b).unwrap();
        let h = 1e-3;
        let lp = |k: f64| char_function(&e, &b, k).unwrap().ln();
        let d1 = (lp(h) - lp(-h)) / (2.0 * h);
        let d2 = (lp(h) + lp(-h)) / (h * h);
        assert!((d1.im - m).abs() < 1e-6 * m);
        assert!((-d2.re - v).abs() < 1e-4 * v);
    }

    #[test]
    fn saddles() {
        let e = p(5, 10.0, 5.0);
        let s = laplace_saddle(&e, 3).unwrap();
        assert!((s.r_l - (8.0f64 / 7.0).sqrt()).abs() < 1e-15);
        assert!(s.f_pp < 0.0 && s.stationarity < 1e-12);
        let mut best = (0.0, f64::NEG_INFINITY);
        for i in 1..200_000 {
            let r = i as f64 * 1e-5;
            let f = laplace_exponent(&e, 3, r);
            if f > best.1 {
                best = (r, f);
            }
        }
        assert!((best.0 - s.r_l).abs() < 2e-5);
        let h = 1e-4;
        let fpp =
            (laplace_exponent(&e, 3, s.r_l + h) - 2.0 * laplace_exponent(&e, 3, s.r_l) + laplace_exponent(&e, 3, s.r_l - h)) / (h * h);
        assert!((fpp - s.f_pp).abs() < 1e-4 * s.f_pp.abs());
        assert!(laplace_saddle(&p(3, 6.0, 0.0), 0).unwrap().degenerate);
        assert!(laplace_saddle(&e, 5).is_err());
    }

    #[test]
    fn ks_against_known_samples() {
        let mut rng = trial_rng(1, 0);
        let n = Normal::new(3.0, 2.0).unwrap();
        let s: Vec<f64> = (0..500).map(|_| n.sample(&mut rng)).collect();
        assert!(ks_normal(&s).unwrap().p_value > 0.01);
        let u: Vec<f64> = (0..500).map(|i| ((i as f64 + 0.5) / 500.0).powi(4)).collect();
        assert!(ks_normal(&u).unwrap().p_value < 0.01);
        assert!((kolmogorov_p(0.0, 10) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn parse_statistics() {
        assert_eq!(RadialStatistic::parse("r2").unwrap().eval(3.0), 9.0);
        assert_eq!(RadialStatistic::parse("const:3").unwrap().deriv(1.0), 0.0);
        assert_eq!(RadialStatistic::parse("r^3").unwrap().eval(2.0), 8.0);
        assert!(RadialStatistic::parse("foo").is_err());
    }
}

//! Exact finite-N kernels: skew-orthogonal polynomials, the double sum `Ĝ_N`,
//! the skew-kernel `ϰ̃_N`, correlation functions and the rescaled kernel.

use crate::error::{Error, Result};
use crate::logscaled::{log_pow, LogScaled};
use crate::params::{EnsembleParams, RegimeSpec};
use crate::pfaffian::SkewMatrix;
use crate::specfun::lgam;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const LN_PI: f64 = 1.144_729_885_849_400_2;
const LN_2: f64 = std::f64::consts::LN_2;

/// How a kernel value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    DoubleSum,
    SopSum,
    Limit,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KernelPoint {
    pub zeta: Complex64,
    pub eta: Complex64,
    pub value: Complex64,
    pub route: Route,
}

/// `log h_k` with `h_k = Γ(k+2L+1)Γ(2n-k+1)/Γ(2n+2L+2)`.
pub fn log_moment_h(params: &EnsembleParams, k: usize) -> Result<f64> {
    let kf = k as f64;
    if kf > 2.0 * params.n - 1.0 {
        return Err(Error::domain(format!("h_{k} is not integrable for n = {}", params.n)));
    }
    let (n, l) = (params.n, params.l);
    Ok(lgam(kf + 2.0 * l + 1.0) + lgam(2.0 * n - kf + 1.0) - lgam(2.0 * n + 2.0 * l + 2.0))
}

pub fn moments_h(params: &EnsembleParams, k: usize) -> Result<f64> {
    log_moment_h(params, k).map(f64::exp)
}

/// Skew-orthogonal polynomials `q_m` with norms `r_k`.
#[derive(Debug, Clone)]
pub struct SkewOpSystem {
    pub params: EnsembleParams,
    /// `q_even[k][l]` is the coefficient of `ζ^{2l}` in `q_{2k}`.
    pub q_even: Vec<Vec<f64>>,
    pub log_h: Vec<f64>,
    pub log_r: Vec<f64>,
}

impl SkewOpSystem {
    pub fn new(params: EnsembleParams) -> Result<Self> {
        let big_n = params.big_n;
        let log_h = (0..2 * big_n).map(|k| log_moment_h(&params, k)).collect::<Result<Vec<_>>>()?;
        let log_r = (0..big_n).map(|k| LN_2 + log_h[2 * k + 1]).collect();
        // h_{m+1}/h_m = (m+2L+1)/(2n-m)
        let ratio = |m: usize| (m as f64 + 2.0 * params.l + 1.0) / (2.0 * params.n - m as f64);
        let q_even = (0..big_n)
            .map(|k| {
                let mut c = vec![0.0; k + 1];
                c[k] = 1.0;
                for l in (0..k).rev() {
                    c[l] = c[l + 1] * ratio(2 * l + 1);
                }
                c
            })
            .collect();
        Ok(Self { params, q_even, log_h, log_r })
    }

    pub fn h(&self, k: usize) -> f64 {
        self.log_h[k].exp()
    }

    pub fn r(&self, k: usize) -> f64 {
        self.log_r[k].exp()
    }

    pub fn q(&self, m: usize, zeta: Complex64) -> Complex64 {
        if m % 2 == 1 {
            return zeta.powu(m as u32);
        }
        let z2 = zeta * zeta;
        self.q_even[m / 2].iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z2 + c)
    }

    /// Canonical kernel `ϰ_N = Σ [q_{2k+1}(ζ)q_{2k}(η) - q_{2k}(ζ)q_{2k+1}(η)]/r_k`.
    pub fn kernel_canonical(&self, zeta: Complex64, eta: Complex64) -> LogScaled {
        let mut acc = LogScaled::ZERO;
        for k in 0..self.params.big_n {
            let v = self.q(2 * k + 1, zeta) * self.q(2 * k, eta) - self.q(2 * k, zeta) * self.q(2 * k + 1, eta);
            acc = acc.add(&LogScaled::new(-self.log_r[k], v));
        }
        acc
    }

    /// `ϰ̂_N = (ζη)^{2L} ϰ_N`, the polynomial-route counterpart of `Ĝ(ζ,η) - Ĝ(η,ζ)`.
    pub fn kernel_hat(&self, zeta: Complex64, eta: Complex64) -> LogScaled {
        let l2 = 2.0 * self.params.l;
        self.kernel_canonical(zeta, eta).scale_log(log_pow(zeta, l2) + log_pow(eta, l2))
    }

    pub fn kernel_tilde(&self, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
        let pre = tilde_prefactor(&self.params, zeta, eta)?;
        Ok(self.kernel_hat(zeta, eta).scale_log(pre).to_complex())
    }
}

pub fn skew_op_system(params: &EnsembleParams) -> Result<SkewOpSystem> {
    SkewOpSystem::new(*params)
}

/// `Σ_k Σ_{l≤k} e^{la_k} x^{ea_k} e^{lb_l} y^{eb_l}`, scaled to avoid overflow.
fn triangular_sum(la: &[f64], ea: &[f64], lb: &[f64], eb: &[f64], x: Complex64, y: Complex64) -> LogScaled {
    let n = la.len();
    let v: Vec<Complex64> = (0..n).map(|k| la[k] + log_pow(x, ea[k])).collect();
    let t: Vec<Complex64> = (0..n).map(|l| lb[l] + log_pow(y, eb[l])).collect();
    let mut prefix_max = Vec::with_capacity(n);
    let mut partial = Vec::with_capacity(n);
    let mut m = f64::NEG_INFINITY;
    let mut s = Complex64::new(0.0, 0.0);
    for tl in &t {
        if tl.re > m {
            if m > f64::NEG_INFINITY {
                s *= (m - tl.re).exp();
            }
            m = tl.re;
        }
        if tl.re > f64::NEG_INFINITY {
            s += (tl - m).exp();
        }
        prefix_max.push(m);
        partial.push(s);
    }
    let big_m = (0..n).map(|k| v[k].re + prefix_max[k]).filter(|x| !x.is_nan()).fold(f64::NEG_INFINITY, f64::max);
    if big_m == f64::NEG_INFINITY {
        return LogScaled::ZERO;
    }
    let mut total = Complex64::new(0.0, 0.0);
    for k in 0..n {
        let e = v[k].re + prefix_max[k];
        if e == f64::NEG_INFINITY || e.is_nan() {
            continue;
        }
        total += (v[k] + prefix_max[k] - big_m).exp() * partial[k];
    }
    LogScaled::new(big_m, total)
}

struct GhatCoefficients {
    log_c: f64,
    la: Vec<f64>,
    ea: Vec<f64>,
    lb: Vec<f64>,
    eb: Vec<f64>,
}

fn ghat_coefficients(params: &EnsembleParams) -> GhatCoefficients {
    let (n, l) = (params.n, params.l);
    let big_n = params.big_n;
    let log_c = LN_PI + lgam(2.0 * n + 2.0 * l + 2.0) - (2.0 * l + 2.0 * n + 1.0) * LN_2;
    let la = (0..big_n).map(|k| -lgam(k as f64 + l + 1.5) - lgam(n - k as f64)).collect();
    let ea = (0..big_n).map(|k| 2.0 * k as f64 + 2.0 * l + 1.0).collect();
    let lb = (0..big_n).map(|k| -lgam(n - k as f64 + 0.5) - lgam(k as f64 + l + 1.0)).collect();
    let eb = (0..big_n).map(|k| 2.0 * k as f64 + 2.0 * l).collect();
    GhatCoefficients { log_c, la, ea, lb, eb }
}

/// `Ĝ_N(ζ, η)` in log-scaled form.
pub fn g_hat_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> LogScaled {
    let c = ghat_coefficients(params);
    triangular_sum(&c.la, &c.ea, &c.lb, &c.eb, zeta, eta).scale_log(Complex64::new(c.log_c, 0.0))
}

pub fn g_hat(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    let g = g_hat_log(params, zeta, eta);
    if g.ln_abs() > 700.0 {
        return Err(Error::Overflow(format!("|Ĝ_N| = e^{:.1}; use the log-scaled or rescaled route", g.ln_abs())));
    }
    Ok(g.to_complex())
}

/// `ϰ̂_N(ζ,η) = Ĝ(ζ,η) - Ĝ(η,ζ)`.
pub fn kernel_hat_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> LogScaled {
    let c = ghat_coefficients(params);
    let a = triangular_sum(&c.la, &c.ea, &c.lb, &c.eb, zeta, eta);
    let b = triangular_sum(&c.la, &c.ea, &c.lb, &c.eb, eta, zeta);
    a.sub(&b).scale_log(Complex64::new(c.log_c, 0.0))
}

/// `ζ`-derivative of `ϰ̂_N` from term-by-term differentiation.
pub fn d_zeta_kernel_hat_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> LogScaled {
    let c = ghat_coefficients(params);
    let shift = |l: &[f64], e: &[f64]| -> (Vec<f64>, Vec<f64>) {
        let lw = l.iter().zip(e).map(|(&li, &ei)| if ei == 0.0 { f64::NEG_INFINITY } else { li + ei.ln() }).collect();
        let ew = e.iter().map(|&ei| ei - 1.0).collect();
        (lw, ew)
    };
    let (la1, ea1) = shift(&c.la, &c.ea);
    let (lb1, eb1) = shift(&c.lb, &c.eb);
    let a = triangular_sum(&la1, &ea1, &c.lb, &c.eb, zeta, eta);
    let b = triangular_sum(&c.la, &c.ea, &lb1, &eb1, eta, zeta);
    a.sub(&b).scale_log(Complex64::new(c.log_c, 0.0))
}

fn check_pole(z: Complex64) -> Result<Complex64> {
    let s = Complex64::new(1.0, 0.0) + z * z;
    if s.norm() == 0.0 {
        return Err(Error::Pole(format!("1 + ζ² = 0 at ζ = {z}")));
    }
    Ok(s)
}

/// `log [(1+ζ²)(1+η²)]^{-(n+L-1/2)}` with principal logs of each factor.
fn tilde_prefactor(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    let e = params.n + params.l - 0.5;
    Ok(-(check_pole(zeta)?.ln() + check_pole(eta)?.ln()) * e)
}

pub fn skew_kernel_tilde_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<LogScaled> {
    let pre = tilde_prefactor(params, zeta, eta)?;
    Ok(kernel_hat_log(params, zeta, eta).scale_log(pre))
}

/// `ϰ̃_N(ζ, η)` from the double sum.
pub fn skew_kernel_tilde(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    skew_kernel_tilde_log(params, zeta, eta).map(|v| v.to_complex())
}

pub fn skew_kernel_point(params: &EnsembleParams, zeta: Complex64, eta: Complex64, route: Route) -> Result<KernelPoint> {
    let value = match route {
        Route::DoubleSum => skew_kernel_tilde(params, zeta, eta)?,
        Route::SopSum => SkewOpSystem::new(*params)?.kernel_tilde(zeta, eta)?,
        Route::Limit => return Err(Error::domain("finite-N kernel has no limit route")),
    };
    Ok(KernelPoint { zeta, eta, value, route })
}

/// Exact `∂_ζ ϰ̃_N(ζ, η)`.
pub fn d_zeta_skew_kernel_tilde_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<LogScaled> {
    let pre = tilde_prefactor(params, zeta, eta)?;
    let e = params.n + params.l - 0.5;
    let s = check_pole(zeta)?;
    let hat = kernel_hat_log(params, zeta, eta);
    let dhat = d_zeta_kernel_hat_log(params, zeta, eta);
    let corr = hat.scale_log((zeta * 2.0 * e / s).ln());
    let out = if zeta == Complex64::new(0.0, 0.0) { dhat } else { dhat.sub(&corr) };
    Ok(out.scale_log(pre))
}

pub fn d_zeta_skew_kernel_tilde(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    d_zeta_skew_kernel_tilde_log(params, zeta, eta).map(|v| v.to_complex())
}

/// Assemble `Pf[w_j w_l K(x_a, x_b)] Π (x̄_j - x_j)` for `x = (ζ_1, ζ̄_1, …)`.
pub(crate) fn pfaffian_correlation<K>(points: &[Complex64], log_w: impl Fn(Complex64) -> f64, kernel: K) -> Result<f64>
where
    K: Fn(Complex64, Complex64) -> Result<LogScaled>,
{
    if points.is_empty() {
        return Err(Error::domain("correlation needs at least one point"));
    }
    let xs: Vec<Complex64> = points.iter().flat_map(|&z| [z, z.conj()]).collect();
    let lw: Vec<f64> = xs.iter().map(|&x| log_w(x)).collect();
    let dim = xs.len();
    let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
    for a in 0..dim {
        for b in a + 1..dim {
            let v = if lw[a] == f64::NEG_INFINITY || lw[b] == f64::NEG_INFINITY {
                Complex64::new(0.0, 0.0)
            } else {
                kernel(xs[a], xs[b])?.scale_log(Complex64::new(lw[a] + lw[b], 0.0)).to_complex()
            };
            m[(a, b)] = v;
            m[(b, a)] = -v;
        }
    }
    let hadamard = (0..dim).map(|i| m.row(i).iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()).product::<f64>().sqrt();
    let pf = SkewMatrix::new(m)?.pfaffian();
    let mut factor = Complex64::new(1.0, 0.0);
    for z in points {
        factor *= z.conj() - z;
    }
    let value = pf * factor;
    let tol = 1e-9 * hadamard * factor.norm();
    if value.im.abs() > tol.max(1e-9 * value.norm()) && value.im.abs() > 1e-300 {
        return Err(Error::Numerical(format!("correlation has imaginary residue {:e} (tolerance {tol:e})", value.im)));
    }
    Ok(value.re)
}

/// `R_{N,k}(ζ_1, …, ζ_k)` as a Pfaffian.
pub fn correlation_rk(params: &EnsembleParams, points: &[Complex64]) -> Result<f64> {
    pfaffian_correlation(points, |z| params.log_weight_omega(z), |a, b| skew_kernel_tilde_log(params, a, b))
}

/// `R_{N,1}(ζ) = ω(ζ)² ϰ̃_N(ζ, ζ̄)(ζ̄ - ζ)`.
pub fn correlation_r1_explicit(params: &EnsembleParams, zeta: Complex64) -> Result<f64> {
    if zeta.im == 0.0 {
        return Ok(0.0);
    }
    let k = skew_kernel_tilde_log(params, zeta, zeta.conj())?;
    let w = 2.0 * params.log_weight_omega(zeta);
    Ok((k.scale_log(Complex64::new(w, 0.0)).to_complex() * (zeta.conj() - zeta)).re)
}

/// `R_{N,2}` from the explicit 4×4 Pfaffian expansion.
pub fn correlation_r2_explicit(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<f64> {
    let k = |a: Complex64, b: Complex64| skew_kernel_tilde(params, a, b);
    let w = (2.0 * (params.log_weight_omega(zeta) + params.log_weight_omega(eta))).exp();
    let v = k(zeta, zeta.conj())? * k(eta, eta.conj())? - k(zeta, eta)?.norm_sqr() + k(zeta, eta.conj())?.norm_sqr();
    Ok((v * w * (zeta.conj() - zeta) * (eta.conj() - eta)).re)
}

/// Map microscopic coordinates to `ζ = p + z/√(Nδ)`.
pub fn zoom_point(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64) -> Complex64 {
    Complex64::new(regime.p(), 0.0) + z / regime.zoom(params)
}

fn rescale_log(params: &EnsembleParams, regime: &RegimeSpec) -> f64 {
    let p = regime.p();
    let nd = params.nf() * regime.delta(params);
    -3.0 * (1.0 + p * p).ln() - 1.5 * nd.ln()
}

/// `κ̃_N(z, w)` log-scaled.
pub fn rescaled_kernel_log(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64, w: Complex64) -> Result<LogScaled> {
    let v = skew_kernel_tilde_log(params, zoom_point(params, regime, z), zoom_point(params, regime, w))?;
    Ok(v.scale_log(Complex64::new(rescale_log(params, regime), 0.0)))
}

pub fn rescaled_kernel(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64, w: Complex64) -> Result<Complex64> {
    rescaled_kernel_log(params, regime, z, w).map(|v| v.to_complex())
}

/// `e^{z²+w²} κ̃_N(z, w)`, the quantity that converges to the limiting kernel.
pub fn rescaled_kernel_gauge(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64, w: Complex64) -> Result<Complex64> {
    rescaled_kernel_log(params, regime, z, w).map(|v| v.scale_log(z * z + w * w).to_complex())
}

/// Rescaled `R_{N,k}(z) = (Nδ)^{-k} R_{N,k}(p + z/√(Nδ))`.
pub fn rescaled_rk(params: &EnsembleParams, regime: &RegimeSpec, points: &[Complex64]) -> Result<f64> {
    let zs: Vec<Complex64> = points.iter().map(|&z| zoom_point(params, regime, z)).collect();
    let nd = params.nf() * regime.delta(params);
    Ok(correlation_rk(params, &zs)? / nd.powi(points.len() as i32))
}

pub fn rescaled_r1(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64) -> Result<f64> {
    rescaled_rk(params, regime, &[z])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::integrate_real;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(nn: usize, n: f64, l: f64) -> EnsembleParams {
        EnsembleParams::new(nn, n, l).unwrap()
    }

    #[test]
    fn moments_match_quadrature() {
        let e = p(1, 2.0, 0.0);
        assert_relative_eq!(moments_h(&e, 0).unwrap(), 0.2, epsilon = 1e-15);
        assert_relative_eq!(moments_h(&e, 1).unwrap(), 0.05, epsilon = 1e-15);
        let e = p(3, 6.0, 1.0);
        for k in 0..6 {
            let kf = k as f64;
            let q = integrate_real(
                |t| {
                    if t >= 1.0 {
                        return 0.0;
                    }
                    let r = t / (1.0 - t);
                    2.0 * r.powf(2.0 * kf + 4.0 + 1.0) * (1.0 + r * r).powf(-2.0 * (6.0 + 1.0 + 1.0)) / ((1.0 - t) * (1.0 - t))
                },
                0.0,
                1.0,
                1e-13,
            )
            .unwrap();
            assert_relative_eq!(moments_h(&e, k).unwrap(), q, max_relative = 1e-10);
            let ratio = moments_h(&e, k + 1).unwrap() / moments_h(&e, k).unwrap();
            assert_relative_eq!(ratio, (kf + 3.0) / (12.0 - kf), max_relative = 1e-13);
        }
        assert!(moments_h(&p(1, 2.0, 0.0), 4).is_err());
    }

    #[test]
    fn sop_coefficients() {
        let s = SkewOpSystem::new(p(2, 3.0, 0.0)).unwrap();
        assert_eq!(s.q(0, c(0.3, 0.1)), c(1.0, 0.0));
        assert_relative_eq!(s.q_even[1][0], 0.4, epsilon = 1e-15);
        let s = SkewOpSystem::new(p(4, 7.5, 1.5)).unwrap();
        for k in 0..4 {
            for l in 0..=k {
                let (kf, lf, n, ll) = (k as f64, l as f64, 7.5, 1.5);
                let want = (lgam(kf + ll + 1.0) + lgam(n - kf + 0.5) - lgam(lf + ll + 1.0) - lgam(n - lf + 0.5)).exp();
                assert_relative_eq!(s.q_even[k][l], want, max_relative = 1e-12);
            }
            assert_relative_eq!(s.r(k), 2.0 * s.h(2 * k + 1), max_relative = 1e-15);
        }
    }

    #[test]
    fn ghat_single_term() {
        let e = p(1, 2.0, 0.0);
        let (z, w) = (0.3, 0.2);
        let sp = std::f64::consts::PI.sqrt();
        let want = std::f64::consts::PI * 120.0 / 32.0 * z / ((sp / 2.0) * 1.0 * (0.75 * sp) * 1.0);
        assert_relative_eq!(g_hat(&e, c(z, 0.0), c(w, 0.0)).unwrap().re, want, max_relative = 1e-14);
        let e = p(3, 5.0, 1.0);
        assert_eq!(g_hat(&e, c(0.0, 0.0), c(0.4, 0.2)).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn routes_agree() {
        let e = p(3, 6.0, 1.0);
        let (z, w) = (c(0.4, 0.1), c(-0.2, 0.3));
        let a = skew_kernel_tilde(&e, z, w).unwrap();
        let b = SkewOpSystem::new(e).unwrap().kernel_tilde(z, w).unwrap();
        assert!((a - b).norm() < 1e-10 * a.norm());
    }

    #[test]
    fn antisymmetry_exact() {
        let e = p(5, 8.0, 2.5);
        let (z, w) = (c(0.7, -0.3), c(0.1, 0.9));
        assert_eq!(skew_kernel_tilde(&e, z, w).unwrap(), -skew_kernel_tilde(&e, w, z).unwrap());
        assert_eq!(skew_kernel_tilde(&e, z, z).unwrap(), c(0.0, 0.0));
        assert!(matches!(skew_kernel_tilde(&e, c(0.0, 1.0), w), Err(Error::Pole(_))));
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let e = p(4, 9.0, 1.5);
        let (z, w) = (c(0.3, 0.2), c(0.5, -0.1));
        let h = 1e-5;
        let f = |x: Complex64| skew_kernel_tilde(&e, x, w).unwrap();
        let fd = (f(z + h) - f(z - h)) / (2.0 * h);
        let d = d_zeta_skew_kernel_tilde(&e, z, w).unwrap();
        assert!((fd - d).norm() < 1e-7 * d.norm());
    }

    #[test]
    fn correlation_forms_agree() {
        let e = p(3, 6.0, 1.0);
        let z = c(0.5, 0.4);
        assert_relative_eq!(correlation_rk(&e, &[z]).unwrap(), correlation_r1_explicit(&e, z).unwrap(), max_relative = 1e-12);
        let w = c(-0.3, 0.7);
        let a = correlation_rk(&e, &[z, w]).unwrap();
        let b = correlation_r2_explicit(&e, z, w).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-10);
        assert!(correlation_rk(&e, &[z, z]).unwrap().abs() < 1e-12);
        assert_eq!(correlation_rk(&e, &[c(0.4, 0.0)]).unwrap(), 0.0);
    }

    #[test]
    fn large_parameters_stay_finite() {
        let r = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
        let e = r.params(200).unwrap();
        let v = rescaled_kernel_gauge(&e, &r, c(0.3, 0.2), c(-0.1, 0.4)).unwrap();
        assert!(v.re.is_finite() && v.norm() > 0.1);
        let r1 = rescaled_r1(&e, &r, c(0.0, 1.0)).unwrap();
        assert!(r1 > 0.0 && r1.is_finite());
        assert!(matches!(g_hat(&e, c(1.0, 0.0), c(1.0, 0.0)), Err(Error::Overflow(_))));
    }

    #[test]
    fn rescaled_conjugate_symmetry() {
        let r = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
        let e = r.params(10).unwrap();
        let (z, w) = (c(0.3, 0.5), c(-0.2, -0.1));
        let a = rescaled_kernel(&e, &r, z.conj(), w.conj()).unwrap();
        let b = rescaled_kernel(&e, &r, z, w).unwrap().conj();
        assert!((a - b).norm() < 1e-12 * a.norm());
        assert_eq!(rescaled_kernel(&e, &r, z, z).unwrap(), c(0.0, 0.0));
    }
}

//! Limiting kernels `κ_(s)`, `κ_(w)`, `κ_(o)`, their pre-kernels and ODEs.

use crate::error::{Error, Result};
use crate::finitekernel::pfaffian_correlation;
use crate::logscaled::LogScaled;
use crate::params::{EnsembleParams, RegimeSpec};
use crate::quad::{integrate, QuadOptions};
use crate::specfun::{erf_c, erfc_c, mittag_leffler, reg_inc_gamma_p, rgamma, Precision};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

/// Which edge of the annulus a strong-regime edge limit sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeSide {
    /// `p = r2`, droplet on `Re z < 0`.
    Outer,
    /// `p = r1`, droplet on `Re z > 0`; the kernel is `-κ_edge(-z, -w)`.
    Inner,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitKernelSpec {
    StrongBulk,
    StrongEdge { side: EdgeSide },
    Weak { rho: f64 },
    Origin { l: f64 },
}

impl LimitKernelSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            LimitKernelSpec::Weak { rho } if !(rho > 0.0) => Err(Error::domain(format!("weak limit needs rho > 0, got {rho}"))),
            LimitKernelSpec::Origin { l } if !(l >= 0.0) => Err(Error::domain(format!("origin limit needs L >= 0, got {l}"))),
            _ => Ok(()),
        }
    }

    pub fn kernel(&self, z: Complex64, w: Complex64) -> Result<Complex64> {
        self.validate()?;
        match *self {
            LimitKernelSpec::StrongBulk | LimitKernelSpec::StrongEdge { .. } => kappa_strong(self, z, w),
            LimitKernelSpec::Weak { rho } => kappa_weak(rho, z, w),
            LimitKernelSpec::Origin { l } => kappa_origin(l, z, w),
        }
    }

    /// The limit reached by the rescaled finite-N kernel in `regime`.
    pub fn for_regime(regime: &RegimeSpec) -> Result<Self> {
        regime.validate()?;
        match *regime {
            RegimeSpec::Strong { p, .. } => {
                let d = regime.limiting_radii().ok_or_else(|| Error::domain("strong regime without radii"))?;
                let tol = 1e-9 * d.r2;
                if (p - d.r2).abs() <= tol {
                    Ok(LimitKernelSpec::StrongEdge { side: EdgeSide::Outer })
                } else if (p - d.r1).abs() <= tol {
                    Ok(LimitKernelSpec::StrongEdge { side: EdgeSide::Inner })
                } else if p > d.r1 && p < d.r2 {
                    Ok(LimitKernelSpec::StrongBulk)
                } else {
                    Err(Error::domain(format!("p = {p} lies outside the droplet [{}, {}]", d.r1, d.r2)))
                }
            }
            RegimeSpec::Weak { rho } => Ok(LimitKernelSpec::Weak { rho }),
            RegimeSpec::Origin { l, .. } => Ok(LimitKernelSpec::Origin { l }),
        }
    }

    /// `𝒦 = e^{-z²-w²} κ`.
    pub fn pre_kernel(&self, z: Complex64, w: Complex64) -> Result<Complex64> {
        Ok(self.kernel(z, w)? * (-z * z - w * w).exp())
    }
}

fn quad_opts() -> QuadOptions {
    QuadOptions::tol(1e-14, 1e-12)
}

/// `f_z(u) = ½ erfc(√2 (z - u))`.
pub fn f_profile(z: Complex64, u: f64) -> Complex64 {
    erfc_c((z - u) * SQRT_2) * 0.5
}

/// `∂_u f_z(u) = √(2/π) e^{-2(z-u)²}`.
pub fn f_profile_du(z: Complex64, u: f64) -> Complex64 {
    let d = z - u;
    (-2.0 * d * d).exp() * (2.0 / PI).sqrt()
}

/// `W(f_w, f_z)(u) = f_w f_z' - f_z f_w'`.
pub fn wronskian(z: Complex64, w: Complex64, u: f64) -> Complex64 {
    f_profile(w, u) * f_profile_du(z, u) - f_profile(z, u) * f_profile_du(w, u)
}

fn edge_integral(z: Complex64, w: Complex64) -> Result<Complex64> {
    let cut = 8.0 + z.re.abs() + w.re.abs();
    integrate(|u| wronskian(z, w, u), -cut, 0.0, quad_opts())
}

/// `κ_(s)` in the bulk or at an edge.
pub fn kappa_strong(spec: &LimitKernelSpec, z: Complex64, w: Complex64) -> Result<Complex64> {
    let sp = PI.sqrt();
    match *spec {
        LimitKernelSpec::StrongBulk => Ok((z * z + w * w).exp() * erf_c(z - w) * sp),
        LimitKernelSpec::StrongEdge { side: EdgeSide::Outer } => Ok((z * z + w * w).exp() * edge_integral(z, w)? * sp),
        LimitKernelSpec::StrongEdge { side: EdgeSide::Inner } => {
            kappa_strong(&LimitKernelSpec::StrongEdge { side: EdgeSide::Outer }, -z, -w).map(|v| -v)
        }
        _ => Err(Error::domain("kappa_strong needs a strong-regime spec")),
    }
}

/// `κ_(w)` for the almost-circular regime.
pub fn kappa_weak(rho: f64, z: Complex64, w: Complex64) -> Result<Complex64> {
    weak_parts(rho, z, w).map(|(i, b)| (i + b) * (z * z + w * w).exp() * PI.sqrt())
}

/// Integral and boundary parts of the bracket in `κ_(w)`.
pub fn weak_parts(rho: f64, z: Complex64, w: Complex64) -> Result<(Complex64, Complex64)> {
    if !(rho > 0.0) {
        return Err(Error::domain(format!("rho must be positive, got {rho}")));
    }
    let half_width = rho / (2.0 * SQRT_2);
    let integral = integrate(|u| wronskian(z, w, u), -half_width, half_width, quad_opts())?;
    let boundary = f_profile(w, half_width) * f_profile(z, -half_width) - f_profile(z, half_width) * f_profile(w, -half_width);
    Ok((integral, boundary))
}

/// `κ_(o)` at the singular origin by quadrature over `s ∈ [0, 1]`.
pub fn kappa_origin(l: f64, z: Complex64, w: Complex64) -> Result<Complex64> {
    if !(l >= 0.0) {
        return Err(Error::domain(format!("L must be nonnegative, got {l}")));
    }
    let zw = z * w;
    if zw.re < 0.0 && zw.im == 0.0 && (2.0 * l).fract() != 0.0 {
        log::warn!("(2zw)^(2L) evaluated on its branch cut at zw = {zw}");
    }
    let prec = Precision::default();
    let pow = |x: Complex64, e: f64| if e == 0.0 { Complex64::new(1.0, 0.0) } else { x.powf(e) };
    let inner = integrate(
        |s| {
            let x = zw * (2.0 * s);
            let ml = mittag_leffler(2.0, 1.0 + 2.0 * l, x * x, prec).unwrap_or(Complex64::new(f64::NAN, 0.0));
            let r = 1.0 - s * s;
            let sl = if l == 0.0 { 1.0 } else { s.powf(2.0 * l) };
            (z * (r * z * z).exp() - w * (r * w * w).exp()) * ml * sl
        },
        0.0,
        1.0,
        quad_opts(),
    )?;
    Ok(pow(zw * 2.0, 2.0 * l) * inner * 2.0)
}

/// The incomplete-gamma representation of `κ_(o)`, defined for integer `2L`.
pub fn kappa_origin_alt(l: f64, z: Complex64, w: Complex64) -> Result<Complex64> {
    let c = 2.0 * l;
    if c.fract() != 0.0 || c < 0.0 {
        return Err(Error::domain(format!("alternative form needs integer 2L, got {c}")));
    }
    let zw = z * w;
    integrate(
        |s| {
            let x = zw * (2.0 * s);
            let r = 1.0 - s * s;
            let front = z * (r * z * z).exp() - w * (r * w * w).exp();
            let bracket = if c == 0.0 {
                x.exp() + (-x).exp()
            } else if x == Complex64::new(0.0, 0.0) {
                Complex64::new(0.0, 0.0)
            } else {
                let sign = ((x.ln() - (-x).ln()) * c).exp();
                x.exp() * reg_inc_gamma_p(c, x).unwrap_or(Complex64::new(f64::NAN, 0.0))
                    + sign * (-x).exp() * reg_inc_gamma_p(c, -x).unwrap_or(Complex64::new(f64::NAN, 0.0))
            };
            front * bracket
        },
        0.0,
        1.0,
        quad_opts(),
    )
}

/// The inhomogeneous term `F` of the pre-kernel ODE `∂_z 𝒦 = F`.
pub fn limiting_f(spec: &LimitKernelSpec, z: Complex64, w: Complex64) -> Result<Complex64> {
    spec.validate()?;
    let d = z - w;
    let g = (-d * d).exp();
    Ok(match *spec {
        LimitKernelSpec::StrongBulk => g * 2.0,
        LimitKernelSpec::StrongEdge { side } => {
            let (z, w) = if side == EdgeSide::Outer { (z, w) } else { (-z, -w) };
            let d = z - w;
            (-d * d).exp() * erfc_c(z + w) - (-2.0 * z * z).exp() * erfc_c(w * SQRT_2) * FRAC_1_SQRT_2
        }
        LimitKernelSpec::Weak { rho } => {
            let s = z + w;
            let a = rho * FRAC_1_SQRT_2;
            let first = g * (erfc_c(s - a) - erfc_c(s + a));
            let zr = z * SQRT_2;
            let wr = w * SQRT_2;
            let h = rho / 2.0;
            let e1 = (-(zr - h) * (zr - h)).exp() + (-(zr + h) * (zr + h)).exp();
            first - e1 * (erfc_c(wr - h) - erfc_c(wr + h)) * FRAC_1_SQRT_2
        }
        LimitKernelSpec::Origin { l } => {
            if l == 0.0 {
                g * 2.0
            } else {
                let zero = Complex64::new(0.0, 0.0);
                let p1 = reg_inc_gamma_p(2.0 * l, z * w * 2.0)?;
                let w2 = w * w;
                let second = if w2 == zero {
                    zero
                } else {
                    let entire = reg_inc_gamma_p(l + 0.5, w2)? * (-w2.ln() * (l + 0.5)).exp();
                    let pw = if z != zero {
                        (z * w).powf(2.0 * l) * w / z
                    } else if l == 0.5 {
                        w2
                    } else if l > 0.5 {
                        zero
                    } else {
                        return Err(Error::domain(format!("F is singular at z = 0 for L = {l}")));
                    };
                    pw * entire
                };
                g * p1 * 2.0 - second * (-z * z).exp() * (2.0 * PI.sqrt() * rgamma(l))
            }
        }
    })
}

/// ODE residuals `(|∂_z 𝒦 - F|, |𝒦(w, w)|)`.
pub fn ode_residual(spec: &LimitKernelSpec, z: Complex64, w: Complex64) -> Result<(f64, f64)> {
    let k = |x: Complex64| spec.pre_kernel(x, w);
    let d = central_difference(k, z, 1e-3 * z.norm().max(1.0))?;
    let f = limiting_f(spec, z, w)?;
    Ok(((d - f).norm(), spec.pre_kernel(w, w)?.norm()))
}

/// Central difference with one Richardson step.
pub fn central_difference<F>(f: F, z: Complex64, h: f64) -> Result<Complex64>
where
    F: Fn(Complex64) -> Result<Complex64>,
{
    let d = |h: f64| -> Result<Complex64> { Ok((f(z + h)? - f(z - h)?) / (2.0 * h)) };
    let d1 = d(h)?;
    let d2 = d(h / 2.0)?;
    Ok((d2 * 4.0 - d1) / 3.0)
}

/// `sup |e^{z²+w²} κ̃_N(z, w) - κ(z, w)|` over all pairs drawn from `points`.
pub fn sup_error(params: &EnsembleParams, regime: &RegimeSpec, points: &[Complex64]) -> Result<f64> {
    let spec = LimitKernelSpec::for_regime(regime)?;
    let mut worst: f64 = 0.0;
    for &z in points {
        for &w in points {
            let finite = crate::finitekernel::rescaled_kernel_gauge(params, regime, z, w)?;
            worst = worst.max((finite - spec.kernel(z, w)?).norm());
        }
    }
    Ok(worst)
}

/// [`sup_error`] for each `N` in `sizes`.
pub fn convergence_errors(regime: &RegimeSpec, sizes: &[usize], points: &[Complex64]) -> Result<Vec<f64>> {
    sizes.iter().map(|&n| sup_error(&regime.params(n)?, regime, points)).collect()
}

/// Limiting `R_k`: Pfaffian with weights `e^{-|z|²}`.
pub fn limit_rk(spec: &LimitKernelSpec, points: &[Complex64]) -> Result<f64> {
    spec.validate()?;
    pfaffian_correlation(points, |z| -z.norm_sqr(), |a, b| spec.kernel(a, b).map(LogScaled::from_complex))
}

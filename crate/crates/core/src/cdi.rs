//! The generalized Christoffel–Darboux identity for `ϰ̃_N`, its incomplete
//! beta form and its rescaled version.

use crate::error::{Error, Result};
use crate::finitekernel::{d_zeta_skew_kernel_tilde_log, rescaled_kernel, zoom_point};
use crate::limits::central_difference;
use crate::logscaled::{log_pow, LogScaled};
use crate::params::{EnsembleParams, RegimeSpec};
use crate::specfun::{lgam, reg_inc_beta};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use crate::limits::limiting_f;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const LN_2: f64 = std::f64::consts::LN_2;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// `𝔭 = ζη/(1+ζη)` and `𝔮 = η²/(1+η²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdiFractions {
    pub p_frak: Complex64,
    pub q_frak: Complex64,
}

impl CdiFractions {
    pub fn new(zeta: Complex64, eta: Complex64) -> Result<Self> {
        let a = one() + zeta * eta;
        let b = one() + eta * eta;
        if a.norm() == 0.0 || b.norm() == 0.0 {
            return Err(Error::Pole(format!("1+ζη or 1+η² vanishes at ({zeta}, {eta})")));
        }
        Ok(Self { p_frak: zeta * eta / a, q_frak: eta * eta / b })
    }
}

/// The terms `I_N`, `II_N`, `III_N` with `∂_ζϰ̃_N = (1+ζ²)^{-(n+L+½)} (I - II - III)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CdiTerms {
    pub term1: Complex64,
    pub term2: Complex64,
    pub term3: Complex64,
}

#[derive(Debug, Clone, Copy)]
struct LogTerms([LogScaled; 3]);

impl LogTerms {
    fn combined(&self) -> LogScaled {
        self.0[0].sub(&self.0[1]).sub(&self.0[2])
    }

    fn to_terms(self) -> CdiTerms {
        CdiTerms { term1: self.0[0].to_complex(), term2: self.0[1].to_complex(), term3: self.0[2].to_complex() }
    }
}

fn check(zeta: Complex64, eta: Complex64) -> Result<()> {
    CdiFractions::new(zeta, eta).map(|_| ())
}

/// Log prefactors `πΓ(2n+2L+2)/2^{2L+2n}` shared by `II` and `III`.
fn log_c23(params: &EnsembleParams) -> f64 {
    let (n, l) = (params.n, params.l);
    LN_PI + lgam(2.0 * n + 2.0 * l + 2.0) - (2.0 * l + 2.0 * n) * LN_2
}

fn sum_logs(terms: impl Iterator<Item = Complex64>) -> LogScaled {
    let v: Vec<Complex64> = terms.collect();
    crate::logscaled::log_sum_exp(&v)
}

/// The three sums of the pre-identity
/// `(1+ζ²)∂_ζϰ̂_N - 2ζ(n+L-½)ϰ̂_N = S1 - S2 - S3`.
pub fn pre_identity_sums(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> [LogScaled; 3] {
    let (n, l) = (params.n, params.l);
    let big_n = params.big_n;
    let s1 = sum_logs((0..2 * big_n).map(|k| {
        let e = k as f64 + 2.0 * l;
        log_pow(zeta, e) + log_pow(eta, e) - lgam(e + 1.0) - lgam(2.0 * n - k as f64)
    }))
    .scale_log(Complex64::new(lgam(2.0 * n + 2.0 * l + 2.0) - LN_2, 0.0));
    let c = log_c23(params);
    let nf = params.nf();
    let s2 = sum_logs((0..big_n).map(|k| {
        let kf = k as f64;
        log_pow(eta, 2.0 * kf + 2.0 * l) - lgam(n - kf + 0.5) - lgam(kf + l + 1.0)
    }))
    .scale_log(log_pow(zeta, 2.0 * nf + 2.0 * l) + (c - lgam(nf + l + 0.5) - lgam(n - nf)));
    let s3 = if l == 0.0 {
        LogScaled::ZERO
    } else {
        sum_logs((0..big_n).map(|k| {
            let kf = k as f64;
            log_pow(eta, 2.0 * kf + 2.0 * l + 1.0) - lgam(n - kf) - lgam(kf + l + 1.5)
        }))
        .scale_log(log_pow(zeta, 2.0 * l - 1.0) + (c - lgam(n + 0.5) - lgam(l)))
    };
    [s1, s2, s3]
}

fn rhs_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<LogTerms> {
    check(zeta, eta)?;
    let pre = -(one() + eta * eta).ln() * (params.n + params.l - 0.5);
    let s = pre_identity_sums(params, zeta, eta);
    Ok(LogTerms([s[0].scale_log(pre), s[1].scale_log(pre), s[2].scale_log(pre)]))
}

/// `I_N, II_N, III_N` from the finite sums.
pub fn cdi_rhs(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<CdiTerms> {
    rhs_log(params, zeta, eta).map(LogTerms::to_terms)
}

fn apply_outer(params: &EnsembleParams, zeta: Complex64, t: LogScaled) -> LogScaled {
    t.scale_log(-(one() + zeta * zeta).ln() * (params.n + params.l + 0.5))
}

/// Right-hand side of the identity, `(1+ζ²)^{-(n+L+½)} (I - II - III)`.
pub fn cdi_derivative(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<Complex64> {
    let t = rhs_log(params, zeta, eta)?;
    Ok(apply_outer(params, zeta, t.combined()).to_complex())
}

/// Relative residual between the exact derivative of `ϰ̃_N` and the identity.
pub fn cdi_residual(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<f64> {
    let t = rhs_log(params, zeta, eta)?;
    let rhs = apply_outer(params, zeta, t.combined());
    let exact = d_zeta_skew_kernel_tilde_log(params, zeta, eta)?;
    let diff = exact.sub(&rhs);
    Ok((diff.ln_abs() - rhs.ln_abs()).exp())
}

/// Binomial sums `I^{(2)}, II^{(2)}, III^{(2)}` evaluated term by term.
pub fn binomial_sums(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<[Complex64; 3]> {
    binomial_sums_log(params, zeta, eta).map(|t| t.map(|v| v.to_complex()))
}

fn binomial_sums_log(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<[LogScaled; 3]> {
    let f = CdiFractions::new(zeta, eta)?;
    let (n, l) = (params.n, params.l);
    let big_n = params.big_n;
    let (lp, lp1) = (f.p_frak.ln(), (one() - f.p_frak).ln());
    let (lq, lq1) = (f.q_frak.ln(), (one() - f.q_frak).ln());
    let i2 = sum_logs((0..2 * big_n).map(|k| {
        let kf = k as f64;
        let e = kf + 2.0 * l;
        lgam(2.0 * n + 2.0 * l) - lgam(e + 1.0) - lgam(2.0 * n - kf) + lpow(lp, e) + lp1 * (2.0 * n - kf - 1.0)
    }));
    let top = n + l - 0.5;
    let ii2 = sum_logs((0..big_n).map(|k| {
        let kf = k as f64;
        let e = kf + l;
        lgam(top + 1.0) - lgam(e + 1.0) - lgam(top - e + 1.0) + lpow(lq, e) + lq1 * (n - kf - 0.5)
    }));
    let iii2 = sum_logs((0..big_n).map(|k| {
        let kf = k as f64;
        let e = kf + l + 0.5;
        lgam(top + 1.0) - lgam(e + 1.0) - lgam(top - e + 1.0) + lpow(lq, e) + lq1 * (n - kf - 1.0)
    }));
    Ok([i2, ii2, iii2])
}

fn lpow(lx: Complex64, e: f64) -> Complex64 {
    if e == 0.0 {
        Complex64::new(0.0, 0.0)
    } else {
        lx * e
    }
}

fn beta_or_one(x: Complex64, a: f64, b: f64) -> Result<Complex64> {
    if a == 0.0 {
        return Ok(one());
    }
    reg_inc_beta(x, a, b)
}

/// The same three sums through regularized incomplete beta functions.
pub fn beta_sums(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<[Complex64; 3]> {
    let f = CdiFractions::new(zeta, eta)?;
    let (n, l) = (params.n, params.l);
    let nf = params.nf();
    let (p, q) = (f.p_frak, f.q_frak);
    Ok([
        beta_or_one(p, 2.0 * l, 2.0 * n)? - reg_inc_beta(p, 2.0 * nf + 2.0 * l, 2.0 * n - 2.0 * nf)?,
        beta_or_one(q, l, n + 0.5)? - reg_inc_beta(q, nf + l, n - nf + 0.5)?,
        reg_inc_beta(q, l + 0.5, n)? - reg_inc_beta(q, nf + l + 0.5, n - nf)?,
    ])
}

/// Log prefactors multiplying the binomial sums in `I_N, II_N, III_N`.
fn term_prefactors(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> [Complex64; 3] {
    let (n, l) = (params.n, params.l);
    let nf = params.nf();
    let c = log_c23(params) - lgam(n + l + 0.5);
    let t1 = (one() + zeta * eta).ln() * (2.0 * n + 2.0 * l - 1.0) - (one() + eta * eta).ln() * (n + l - 0.5)
        + ((2.0 * n + 2.0 * l + 1.0) * (n + l)).ln();
    let t2 = log_pow(zeta, 2.0 * nf + 2.0 * l) + (c - lgam(nf + l + 0.5) - lgam(n - nf));
    let t3 = if l == 0.0 { Complex64::new(f64::NEG_INFINITY, 0.0) } else { log_pow(zeta, 2.0 * l - 1.0) + (c - lgam(n + 0.5) - lgam(l)) };
    [t1, t2, t3]
}

/// `I_N, II_N, III_N` through the incomplete beta representation.
pub fn cdi_rhs_beta_form(params: &EnsembleParams, zeta: Complex64, eta: Complex64) -> Result<CdiTerms> {
    let s = beta_sums(params, zeta, eta)?;
    let pre = term_prefactors(params, zeta, eta);
    let t = |i: usize| LogScaled::from_complex(s[i]).scale_log(pre[i]).to_complex();
    Ok(CdiTerms { term1: t(0), term2: t(1), term3: if params.l == 0.0 { Complex64::new(0.0, 0.0) } else { t(2) } })
}

/// The six factors of the rescaled identity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RescaledCdiTerms {
    pub i1: Complex64,
    pub i2: Complex64,
    pub ii1: Complex64,
    pub ii2: Complex64,
    pub iii1: Complex64,
    pub iii2: Complex64,
}

impl RescaledCdiTerms {
    /// `I(1)I(2) - II(1)II(2) - III(1)III(2)`, equal to `∂_z κ̃_N`.
    pub fn combined(&self) -> Complex64 {
        self.i1 * self.i2 - self.ii1 * self.ii2 - self.iii1 * self.iii2
    }
}

/// Above this `N` the second factors come from the incomplete beta route.
pub const DIRECT_SUM_MAX_N: usize = 1000;

pub fn rescaled_cdi_terms(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64, w: Complex64) -> Result<RescaledCdiTerms> {
    let zeta = zoom_point(params, regime, z);
    let eta = zoom_point(params, regime, w);
    check(zeta, eta)?;
    let p = regime.p();
    let nd = params.nf() * regime.delta(params);
    let outer = -3.0 * (1.0 + p * p).ln() - 2.0 * nd.ln();
    let szeta = (one() + zeta * zeta).ln();
    let e = params.n + params.l + 0.5;
    let pre = term_prefactors(params, zeta, eta);
    let first = |i: usize| LogScaled::exp_of(pre[i] - szeta * e + outer).to_complex();
    let second: [Complex64; 3] =
        if params.big_n <= DIRECT_SUM_MAX_N { binomial_sums(params, zeta, eta)? } else { beta_sums(params, zeta, eta)? };
    Ok(RescaledCdiTerms {
        i1: first(0),
        i2: second[0],
        ii1: first(1),
        ii2: second[1],
        iii1: if params.l == 0.0 { Complex64::new(0.0, 0.0) } else { first(2) },
        iii2: second[2],
    })
}

/// Residual of the rescaled identity against a Richardson central difference.
pub fn rescaled_cdi_residual(params: &EnsembleParams, regime: &RegimeSpec, z: Complex64, w: Complex64) -> Result<f64> {
    let t = rescaled_cdi_terms(params, regime, z, w)?.combined();
    let d = central_difference(|x| rescaled_kernel(params, regime, x, w), z, 1e-5 * z.norm().max(1.0))?;
    Ok((t - d).norm() / t.norm())
}

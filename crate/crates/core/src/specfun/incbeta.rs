use super::{gamma::lgam, Precision};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Regularized incomplete beta `I_x(a, b)` for complex `x` off the real cuts.
pub fn reg_inc_beta(x: Complex64, a: f64, b: f64) -> Result<Complex64> {
    reg_inc_beta_with(x, a, b, Precision::default())
}

pub fn reg_inc_beta_with(x: Complex64, a: f64, b: f64, prec: Precision) -> Result<Complex64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::domain(format!("I_x(a, b) needs a, b > 0, got ({a}, {b})")));
    }
    if x.im == 0.0 && (x.re < 0.0 || x.re > 1.0) {
        return Err(Error::domain(format!("x = {x} lies on a branch cut")));
    }
    let one = Complex64::new(1.0, 0.0);
    if x == Complex64::new(0.0, 0.0) {
        return Ok(x);
    }
    if x == one {
        return Ok(one);
    }
    let y = one - x;
    let (ex, ey) = (x.norm(), y.norm());
    if ex.min(ey) < 0.95 {
        if ex <= ey {
            euler(x, a, b, prec)
        } else {
            euler(y, b, a, prec).map(|v| one - v)
        }
    } else {
        let px = (x / (x - one)).norm();
        if px <= 1.0 {
            pfaff(x, a, b, prec)
        } else {
            pfaff(y, b, a, prec).map(|v| one - v)
        }
    }
}

fn log_beta(a: f64, b: f64) -> f64 {
    lgam(a) + lgam(b) - lgam(a + b)
}

/// Generic `Σ_k (p)_k/(q)_k u^k` with overflow rescaling; returns `(log scale, sum)`.
fn hyp_series(p: f64, q: f64, u: Complex64, prec: Precision) -> Result<(f64, Complex64)> {
    let un = u.norm();
    let peak = if un < 1.0 { ((p.abs() * un - q) / (1.0 - un)).max(0.0) as usize + 1 } else { usize::MAX };
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    let mut log_scale = 0.0;
    let mut small = 0;
    for k in 0..prec.max_terms {
        let kf = k as f64;
        term *= u * ((p + kf) / (q + kf));
        sum += term;
        if sum.norm() > 1e250 {
            sum /= 1e250;
            term /= 1e250;
            log_scale += 250.0 * 10f64.ln();
        }
        if term.norm() <= prec.rel_tol * sum.norm() && k >= peak.min(prec.max_terms) {
            small += 1;
            if small >= 3 {
                return Ok((log_scale, sum));
            }
        } else {
            small = 0;
        }
        if term == Complex64::new(0.0, 0.0) {
            return Ok((log_scale, sum));
        }
    }
    Err(Error::Convergence(format!("hypergeometric series did not converge at |u| = {un}")))
}

/// `x^a (1-x)^b / (a B(a,b)) · ₂F₁(a+b, 1; a+1; x)`.
fn euler(x: Complex64, a: f64, b: f64, prec: Precision) -> Result<Complex64> {
    let (s, sum) = hyp_series(a + b, a + 1.0, x, prec)?;
    let one = Complex64::new(1.0, 0.0);
    let lead = x.ln() * a + (one - x).ln() * b - a.ln() - log_beta(a, b) + s;
    Ok(lead.exp() * sum)
}

/// `x^a (1-x)^{b-1} / (a B(a,b)) · ₂F₁(1, 1-b; a+1; x/(x-1))`.
fn pfaff(x: Complex64, a: f64, b: f64, prec: Precision) -> Result<Complex64> {
    let one = Complex64::new(1.0, 0.0);
    let (s, sum) = hyp_series(1.0 - b, a + 1.0, x / (x - one), prec)?;
    let lead = x.ln() * a + (one - x).ln() * (b - 1.0) - a.ln() - log_beta(a, b) + s;
    Ok(lead.exp() * sum)
}

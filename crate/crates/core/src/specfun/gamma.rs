use crate::error::{Error, Result};

/// `log Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("log_gamma needs x > 0, got {x}")));
    }
    Ok(lgam(x))
}

/// Unchecked `log |Γ(x)|`.
#[inline]
pub fn lgam(x: f64) -> f64 {
    libm::lgamma_r(x).0
}

/// `1/Γ(x)` for real `x`, zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x.fract() == 0.0 {
        return 0.0;
    }
    let (lg, sign) = libm::lgamma_r(x);
    sign as f64 * (-lg).exp()
}

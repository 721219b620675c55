//! Complex numbers carried as `value · e^{log_scale}`.

use num_complex::Complex64;
use std::ops::{Mul, Neg};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogScaled {
    pub log_scale: f64,
    pub value: Complex64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled { log_scale: 0.0, value: Complex64::new(0.0, 0.0) };

    pub fn new(log_scale: f64, value: Complex64) -> Self {
        Self { log_scale, value }.normalized()
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(0.0, z)
    }

    /// `e^{lz}` for a complex logarithm `lz`.
    pub fn exp_of(lz: Complex64) -> Self {
        if lz.re == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        Self { log_scale: lz.re, value: Complex64::from_polar(1.0, lz.im) }
    }

    pub fn is_zero(&self) -> bool {
        self.value == Complex64::new(0.0, 0.0)
    }

    fn normalized(self) -> Self {
        let m = self.value.norm();
        if m == 0.0 || !m.is_finite() {
            if m == 0.0 {
                return Self::ZERO;
            }
            return self;
        }
        Self { log_scale: self.log_scale + m.ln(), value: self.value / m }
    }

    pub fn ln_abs(&self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.log_scale + self.value.norm().ln()
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        if self.is_zero() {
            return self.value;
        }
        self.value * self.log_scale.exp()
    }

    pub fn scale_log(&self, extra: Complex64) -> Self {
        if self.is_zero() {
            return *self;
        }
        Self { log_scale: self.log_scale + extra.re, value: self.value * Complex64::from_polar(1.0, extra.im) }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let m = self.log_scale.max(other.log_scale);
        let v = self.value * (self.log_scale - m).exp() + other.value * (other.log_scale - m).exp();
        Self::new(m, v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&-*other)
    }
}

impl Neg for LogScaled {
    type Output = LogScaled;
    fn neg(self) -> LogScaled {
        LogScaled { log_scale: self.log_scale, value: -self.value }
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;
    fn mul(self, o: LogScaled) -> LogScaled {
        if self.is_zero() || o.is_zero() {
            return LogScaled::ZERO;
        }
        LogScaled::new(self.log_scale + o.log_scale, self.value * o.value)
    }
}

/// Principal `z^e` as a complex logarithm, `-∞` real part for `z = 0, e > 0`.
pub fn log_pow(z: Complex64, e: f64) -> Complex64 {
    if e == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if z == Complex64::new(0.0, 0.0) {
        return if e > 0.0 { Complex64::new(f64::NEG_INFINITY, 0.0) } else { Complex64::new(f64::INFINITY, 0.0) };
    }
    z.ln() * e
}

/// Sum of `e^{t_j}` for complex logs `t_j`, returned log-scaled.
pub fn log_sum_exp(terms: &[Complex64]) -> LogScaled {
    let m = terms.iter().map(|t| t.re).fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return LogScaled::ZERO;
    }
    let s: Complex64 = terms.iter().filter(|t| t.re > f64::NEG_INFINITY).map(|t| (t - m).exp()).sum();
    LogScaled::new(m, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_arith() {
        let a = LogScaled::from_complex(Complex64::new(3.0, -4.0));
        assert!((a.to_complex() - Complex64::new(3.0, -4.0)).norm() < 1e-14);
        let b = LogScaled::exp_of(Complex64::new(800.0, 0.5));
        let c = b.sub(&b);
        assert!(c.is_zero() || c.ln_abs() < 800.0 - 30.0);
        let d = b * LogScaled::exp_of(Complex64::new(-799.0, -0.5));
        assert!((d.to_complex() - Complex64::new(1f64.exp(), 0.0)).norm() < 1e-12);
        assert!((a.add(&a).to_complex() - Complex64::new(6.0, -8.0)).norm() < 1e-14);
    }

    #[test]
    fn sum_of_huge_terms() {
        let t = vec![Complex64::new(1000.0, 0.0), Complex64::new(1000.0 + 2f64.ln(), 0.0)];
        let s = log_sum_exp(&t);
        assert!((s.ln_abs() - (1000.0 + 3f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn pow_at_zero() {
        assert_eq!(log_pow(Complex64::new(0.0, 0.0), 0.0), Complex64::new(0.0, 0.0));
        assert_eq!(LogScaled::exp_of(log_pow(Complex64::new(0.0, 0.0), 2.0)).to_complex(), Complex64::new(0.0, 0.0));
    }
}

use super::{gamma::lgam, rgamma, Precision};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Two-parameter Mittag-Leffler function `E_{a,b}(z) = Σ z^k / Γ(ak+b)`.
pub fn mittag_leffler(a: f64, b: f64, z: Complex64, prec: Precision) -> Result<Complex64> {
    if !(a > 0.0) {
        return Err(Error::domain(format!("Mittag-Leffler needs a > 0, got {a}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(Complex64::new(rgamma(b), 0.0));
    }
    let lz = z.ln();
    // terms keep growing until Γ(ak+b) overtakes |z|^k
    let k_peak = (z.norm().powf(1.0 / a) / a).ceil() as usize + 2;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small = 0;
    for k in 0..prec.max_terms {
        let arg = a * k as f64 + b;
        let term = if arg > 0.0 { (lz * k as f64 - lgam(arg)).exp() } else { (lz * k as f64).exp() * rgamma(arg) };
        sum += term;
        if term.norm() <= prec.rel_tol * sum.norm() && k > k_peak {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Convergence(format!("Mittag-Leffler series exceeded {} terms", prec.max_terms)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ml(a: f64, b: f64, z: Complex64) -> Complex64 {
        mittag_leffler(a, b, z, Precision::default()).unwrap()
    }

    #[test]
    fn cosh_and_exp() {
        for z in [Complex64::new(0.5, 0.0), Complex64::new(1.0, 1.0)] {
            assert!((ml(2.0, 1.0, z * z) - z.cosh()).norm() < 1e-13 * z.cosh().norm());
        }
        for z in [Complex64::new(2.0, -1.0), Complex64::new(-3.0, 0.5)] {
            assert!((ml(1.0, 1.0, z) - z.exp()).norm() < 1e-13 * z.exp().norm().max(1.0));
        }
    }

    #[test]
    fn sinh_over_z() {
        let z = Complex64::new(0.7, 0.0);
        let mut oracle = 0.0;
        let mut t = 1.0;
        for k in 0..50 {
            oracle += t;
            t *= 0.49 / ((2 * k + 2) as f64 * (2 * k + 3) as f64);
        }
        let got = ml(2.0, 2.0, z * z);
        assert!((got.re - oracle).abs() < 1e-14);
        assert!((got.re - 1.083_691_002_627_9).abs() < 1e-12);
    }

    #[test]
    fn tighter_resummation_agrees() {
        let tight = Precision::new(1e-16, 1_000_000).unwrap();
        for &(re, im) in &[(20.0, 0.0), (-15.0, 3.0), (0.0, 20.0), (5.0, -12.0)] {
            let z = Complex64::new(re, im);
            let a = ml(2.0, 1.5, z);
            let b = mittag_leffler(2.0, 1.5, z, tight).unwrap();
            assert!((a - b).norm() <= 1e-12 * b.norm().max(1.0));
        }
    }

    #[test]
    fn errors() {
        assert!(mittag_leffler(0.0, 1.0, Complex64::new(1.0, 0.0), Precision::default()).is_err());
        let p = Precision::new(1e-13, 3).unwrap();
        assert!(matches!(mittag_leffler(1.0, 1.0, Complex64::new(5.0, 0.0), p), Err(Error::Convergence(_))));
    }
}

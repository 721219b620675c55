use super::{gamma::lgam, Precision};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// Regularized lower incomplete gamma `P(c, z)`, principal branch of `t^{c-1}`.
pub fn reg_inc_gamma_p(c: f64, z: Complex64) -> Result<Complex64> {
    reg_inc_gamma_p_with(c, z, Precision::default())
}

pub fn reg_inc_gamma_p_with(c: f64, z: Complex64, prec: Precision) -> Result<Complex64> {
    if !(c > 0.0) {
        return Err(Error::domain(format!("P(c, z) needs c > 0, got {c}")));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Ok(z);
    }
    if z.norm() > 30.0 + c && z.re > 0.0 {
        return upper_cf(c, z, prec).map(|q| Complex64::new(1.0, 0.0) - q);
    }
    let lz = z.ln();
    let lead = lz * c - z;
    let k_peak = (z.norm() - c).max(0.0) as usize + 1;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut small = 0;
    for k in 0..prec.max_terms {
        let term = (lead + lz * k as f64 - lgam(c + k as f64 + 1.0)).exp();
        sum += term;
        if term.norm() <= prec.rel_tol * sum.norm() && k >= k_peak {
            small += 1;
            if small >= 3 {
                return Ok(sum);
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Convergence("incomplete gamma series".into()))
}

fn upper_cf(c: f64, z: Complex64, prec: Precision) -> Result<Complex64> {
    let tiny = 1e-300;
    let one = Complex64::new(1.0, 0.0);
    let mut b = z + 1.0 - c;
    let mut cc = Complex64::new(1.0 / tiny, 0.0);
    let mut d = one / b;
    let mut h = d;
    for i in 1..prec.max_terms {
        let an = -(i as f64) * (i as f64 - c);
        b += 2.0;
        d = b + d * an;
        if d.norm() < tiny {
            d = Complex64::new(tiny, 0.0);
        }
        cc = b + an / cc;
        if cc.norm() < tiny {
            cc = Complex64::new(tiny, 0.0);
        }
        d = one / d;
        let del = d * cc;
        h *= del;
        if (del - one).norm() < prec.rel_tol * 0.1 {
            return Ok((z.ln() * c - z - lgam(c)).exp() * h);
        }
    }
    Err(Error::Convergence("incomplete gamma continued fraction".into()))
}

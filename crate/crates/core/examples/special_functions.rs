//! Complex error function, incomplete gamma and beta functions, Mittag-Leffler.

use sphefaffian::specfun::{erfc_c, faddeeva_w, mittag_leffler, reg_inc_beta, reg_inc_gamma_p, Precision};
use sphefaffian::{Complex64, Result};

fn main() -> Result<()> {
    let z = Complex64::new(1.5, -0.7);
    println!("w({z})        = {:.15}", faddeeva_w(z));
    println!("erfc({z})     = {:.15}", erfc_c(z));
    println!("P(2.5, {z})   = {:.15}", reg_inc_gamma_p(2.5, z)?);
    let x = Complex64::new(0.3, 0.1);
    println!("I_{x}(2, 3.5) = {:.15}", reg_inc_beta(x, 2.0, 3.5)?);
    let e = mittag_leffler(2.0, 2.0, Complex64::new(0.49, 0.0), Precision::default())?;
    println!("E_2,2(0.49)   = {:.15}  (sinh(0.7)/0.7 = {:.15})", e.re, 0.7f64.sinh() / 0.7);
    Ok(())
}

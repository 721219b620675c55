//! The finite-N skew kernel by two routes and the correlation functions it generates.

use sphefaffian::finitekernel::{correlation_r1_explicit, correlation_rk, skew_kernel_tilde, SkewOpSystem};
use sphefaffian::{Complex64, EnsembleParams, Result};

fn main() -> Result<()> {
    let e = EnsembleParams::new(5, 9.0, 2.5)?;
    let sop = SkewOpSystem::new(e)?;
    let (z, w) = (Complex64::new(0.4, 0.3), Complex64::new(-0.2, 0.6));
    let a = skew_kernel_tilde(&e, z, w)?;
    let b = sop.kernel_tilde(z, w)?;
    println!("double sum  {a:.15e}");
    println!("skew-OP sum {b:.15e}  (rel diff {:.1e})", (a - b).norm() / a.norm());
    println!("antisymmetry |κ(z,w) + κ(w,z)| = {:.1e}", (a + skew_kernel_tilde(&e, w, z)?).norm());
    let zeta = Complex64::new(0.8, 0.5);
    println!("R1({zeta}) = {:.12} (explicit {:.12})", correlation_rk(&e, &[zeta])?, correlation_r1_explicit(&e, zeta)?);
    println!("R1 on the real axis = {}", correlation_rk(&e, &[Complex64::new(0.8, 0.0)])?);
    println!("R2 = {:.12}", correlation_rk(&e, &[zeta, Complex64::new(-0.5, 0.9)])?);
    Ok(())
}

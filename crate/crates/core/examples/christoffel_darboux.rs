//! The generalized Christoffel–Darboux identity and its rescaled form.

use sphefaffian::cdi::{cdi_residual, cdi_rhs, cdi_rhs_beta_form, rescaled_cdi_terms};
use sphefaffian::limits::{limiting_f, LimitKernelSpec};
use sphefaffian::{Complex64, EnsembleParams, RegimeSpec, Result};

fn main() -> Result<()> {
    let e = EnsembleParams::new(3, 6.0, 1.0)?;
    let (z, w) = (Complex64::new(0.3, 0.2), Complex64::new(0.5, -0.1));
    println!("identity residual = {:.2e}", cdi_residual(&e, z, w)?);
    let s = cdi_rhs(&e, z, w)?;
    let b = cdi_rhs_beta_form(&e, z, w)?;
    println!("I   sums {:.12e} beta {:.12e}", s.term1, b.term1);
    println!("II  sums {:.12e} beta {:.12e}", s.term2, b.term2);
    println!("III sums {:.12e} beta {:.12e}", s.term3, b.term3);
    let r = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
    let (z, w) = (Complex64::new(0.2, 0.1), Complex64::new(-0.3, 0.2));
    let f = limiting_f(&LimitKernelSpec::StrongBulk, z, w)?;
    for n in [50, 100, 200, 400] {
        let t = rescaled_cdi_terms(&r.params(n)?, &r, z, w)?;
        println!("N = {n:3}: |I1-F| = {:.3e}, |II1| = {:.1e}, |III1| = {:.1e}", (t.i1 - f).norm(), t.ii1.norm(), t.iii1.norm());
    }
    Ok(())
}

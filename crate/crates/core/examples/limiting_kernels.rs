//! The universal limiting kernels and their ODE characterizations.

use sphefaffian::limits::{kappa_origin_alt, limit_rk, ode_residual, EdgeSide, LimitKernelSpec};
use sphefaffian::{Complex64, Result};

fn main() -> Result<()> {
    let (z, w) = (Complex64::new(0.3, 0.4), Complex64::new(-0.2, 0.5));
    let specs = [
        LimitKernelSpec::StrongBulk,
        LimitKernelSpec::StrongEdge { side: EdgeSide::Outer },
        LimitKernelSpec::StrongEdge { side: EdgeSide::Inner },
        LimitKernelSpec::Weak { rho: 2.0 },
        LimitKernelSpec::Origin { l: 2.5 },
    ];
    for s in specs {
        let (d, diag) = ode_residual(&s, z, w)?;
        println!("{s:?}: κ = {:.10}, ODE residual {d:.1e}, 𝒦(w,w) = {diag:.1e}, R1(z) = {:.8}", s.kernel(z, w)?, limit_rk(&s, &[z])?);
    }
    let l = 1.5;
    println!(
        "origin L = {l}: series form {:.12}, integral form {:.12}",
        LimitKernelSpec::Origin { l }.kernel(z, w)?,
        kappa_origin_alt(l, z, w)?
    );
    Ok(())
}

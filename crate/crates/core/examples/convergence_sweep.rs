//! Sup-norm distance between the rescaled finite-N kernel and its limit.

use sphefaffian::limits::{convergence_errors, LimitKernelSpec};
use sphefaffian::{Complex64, RegimeSpec, Result};

fn main() -> Result<()> {
    let xs = [-0.5, 0.0, 0.5];
    let grid: Vec<Complex64> = xs.iter().flat_map(|&y| xs.iter().map(move |&x| Complex64::new(x, y))).collect();
    let sizes = [25, 50, 100];
    let regimes = [
        RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 },
        RegimeSpec::Strong { a: 1.0, b: 1.0, p: 2f64.sqrt() },
        RegimeSpec::Weak { rho: 2.0 },
        RegimeSpec::Origin { l: 0.0, b: 1.0 },
    ];
    for r in regimes {
        let e = convergence_errors(&r, &sizes, &grid)?;
        println!("{:?}: {:.3e} {:.3e} {:.3e}  ratio {:.3}", LimitKernelSpec::for_regime(&r)?, e[0], e[1], e[2], e[2] / e[0]);
    }
    Ok(())
}

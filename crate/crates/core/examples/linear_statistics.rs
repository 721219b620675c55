//! Radial linear statistics: characteristic function, moments and Monte Carlo.

use sphefaffian::linstat::{
    asymptotic_mean, asymptotic_variance, char_function, exact_moments, ks_normal, laplace_saddle, mc_linear_statistic, RadialStatistic,
};
use sphefaffian::sampler::sample_ensemble;
use sphefaffian::{RegimeSpec, Result};

fn main() -> Result<()> {
    let r = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
    let e = r.params(20)?;
    let b = RadialStatistic::power(2.0);
    let (mu, s2) = (asymptotic_mean(&e, &b)?, asymptotic_variance(&e, &b)?);
    let (m, v) = exact_moments(&e, &b)?;
    println!("asymptotic mean {mu:.6}, variance {s2:.6}");
    println!("exact      mean {m:.6}, variance {v:.6}");
    for k in [0.1, 0.5, 1.0] {
        let p = char_function(&e, &b, k)?;
        let g = (-k * k * s2 / 2.0).exp();
        println!("k = {k}: |P(k)| = {:.6}, Gaussian {:.6}", p.norm(), g);
    }
    let s = laplace_saddle(&e, 5)?;
    println!("saddle l = 5: r = {:.6}, f'' = {:.3}", s.r_l, s.f_pp);
    let mc = mc_linear_statistic(&sample_ensemble(&e, 200, 3)?, &b)?;
    println!("Monte Carlo mean {:.4} ± {:.4}, variance {:.4} ± {:.4}", mc.mean, mc.mean_se, mc.variance, mc.variance_se);
    println!("KS p-value {:.3}", ks_normal(&mc.samples)?.p_value);
    Ok(())
}

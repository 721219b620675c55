//! Stereographic projection, polar caps and the Coulomb-gas Boltzmann factor.

use sphefaffian::sampler::histogram::cap_fraction;
use sphefaffian::sampler::{boltzmann_log_ratio, coulomb_energy, sample_ensemble, to_sphere};
use sphefaffian::{Complex64, EnsembleParams, Result};

fn main() -> Result<()> {
    let e = EnsembleParams::new(10, 12.0, 3.0)?;
    let (q1, q2) = e.cap_charges();
    let d = e.droplet();
    println!("q1 = {q1}, q2 = {q2}: q1/(1+q2) = {:.15} (r1² = {:.15})", q1 / (1.0 + q2), d.r1 * d.r1);
    println!("(1+q1)/q2 = {:.15} (r2² = {:.15})", (1.0 + q1) / q2, d.r2 * d.r2);
    let batch = sample_ensemble(&e, 200, 1)?;
    let tot = batch.len() as f64;
    for theta in [0.6, 1.2, 1.8, 2.4] {
        let obs = batch.all_points().filter(|&z| to_sphere(z).theta < theta).count() as f64 / tot;
        println!("cap θ < {theta}: observed {obs:.4}, uniform band {:.4}", cap_fraction(&e, theta));
    }
    let trial: Vec<_> = batch.eigen_pairs[0].iter().flat_map(|&z| [z, z.conj()]).collect();
    let pts: Vec<_> = trial.iter().map(|&z| to_sphere(z)).collect();
    println!("U0 + U1 of one trial = {:.6}", coulomb_energy(&pts, q1, q2)?);
    for zs in [[Complex64::new(0.3, 0.2), Complex64::new(-1.1, 0.4)], [Complex64::new(2.0, -0.5), Complex64::new(0.1, 0.1)]] {
        println!("log(planar density / Boltzmann factor) = {:.3e}", boltzmann_log_ratio(&zs, q1, q2)?);
    }
    Ok(())
}

//! Monte Carlo eigenvalues of the matrix model against the macroscopic density.

use sphefaffian::sampler::{empirical_radial_density, sample_ensemble, write_batch};
use sphefaffian::{EnsembleParams, Result};

fn main() -> Result<()> {
    let e = EnsembleParams::new(20, 40.0, 20.0)?;
    let batch = sample_ensemble(&e, 100, 7)?;
    let d = e.droplet();
    println!("droplet [{:.4}, {:.4}], {} eigenvalues", d.r1, d.r2, batch.len());
    let h = empirical_radial_density(&batch, 16)?;
    for i in 0..h.counts.len() {
        println!(
            "[{:.3}, {:.3})  obs {:5}  pred {:8.1}{}",
            h.edges[i],
            h.edges[i + 1],
            h.counts[i],
            h.predicted[i],
            if h.interior[i] { "  interior" } else { "" }
        );
    }
    let near_axis = batch.all_points().filter(|z| z.im.abs() < 0.01 * d.r2).count();
    println!("eigenvalues with |Im| < 0.01 r2: {near_axis}");
    let dir = std::env::temp_dir();
    write_batch(&batch, &dir.join("spectrum.csv"), &dir.join("spectrum.json"), true)?;
    println!("wrote {}", dir.join("spectrum.csv").display());
    Ok(())
}

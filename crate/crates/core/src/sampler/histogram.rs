//! Radial histograms of sampled eigenvalues against the macroscopic density.

use super::ensemble::SampleBatch;
use crate::error::{Error, Result};
use crate::params::EnsembleParams;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadialHistogram {
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub predicted: Vec<f64>,
    /// Bins at least one local length `1/√(Nδ(r))` away from both droplet edges.
    pub interior: Vec<bool>,
}

impl RadialHistogram {
    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// `(obs - pred)/√pred`, `None` where nothing is predicted.
    pub fn z_scores(&self) -> Vec<Option<f64>> {
        self.counts.iter().zip(&self.predicted).map(|(&c, &p)| if p > 0.0 { Some((c as f64 - p) / p.sqrt()) } else { None }).collect()
    }

    /// Fraction of interior bins with `|z| ≤ bound`.
    pub fn interior_pass_fraction(&self, bound: f64) -> f64 {
        let z = self.z_scores();
        let mut total = 0;
        let mut ok = 0;
        for (i, zi) in z.iter().enumerate() {
            if let (true, Some(v)) = (self.interior[i], zi) {
                total += 1;
                if v.abs() <= bound {
                    ok += 1;
                }
            }
        }
        if total == 0 {
            0.0
        } else {
            ok as f64 / total as f64
        }
    }

    /// Counts in bins lying entirely outside `[r1 - pad, r2 + pad]`.
    pub fn outside_count(&self, r1: f64, r2: f64, pad: f64) -> u64 {
        (0..self.counts.len()).filter(|&i| self.edges[i + 1] <= r1 - pad || self.edges[i] >= r2 + pad).map(|i| self.counts[i]).sum()
    }
}

/// Expected fraction of the `N` eigenvalues with modulus below `r`.
pub fn mass_below(params: &EnsembleParams, r: f64) -> f64 {
    let d = params.droplet();
    let r = r.clamp(d.r1, d.r2);
    (params.n + params.l) / params.nf() * (1.0 / (1.0 + d.r1 * d.r1) - 1.0 / (1.0 + r * r))
}

/// Expected fraction of eigenvalues in the polar cap `θ' < θ` of the sphere.
pub fn cap_fraction(params: &EnsembleParams, theta: f64) -> f64 {
    mass_below(params, (theta / 2.0).tan())
}

fn local_length(params: &EnsembleParams, r: f64) -> f64 {
    1.0 / (params.nf() * params.density_profile(r)).sqrt()
}

/// Histogram of `|ζ|` over `[0, r2 + 0.5]`.
pub fn empirical_radial_density(batch: &SampleBatch, bins: usize) -> Result<RadialHistogram> {
    let d = batch.params.droplet();
    radial_histogram(batch, bins, d.r2 + 0.5)
}

pub fn radial_histogram(batch: &SampleBatch, bins: usize, r_max: f64) -> Result<RadialHistogram> {
    if batch.trials == 0 || bins == 0 || !(r_max > 0.0) {
        return Err(Error::domain("histogram needs trials, bins and a positive range"));
    }
    let params = &batch.params;
    let d = params.droplet();
    let width = r_max / bins as f64;
    let edges: Vec<f64> = (0..=bins).map(|i| i as f64 * width).collect();
    let mut counts = vec![0u64; bins];
    for z in batch.all_points() {
        let i = ((z.norm() / width) as usize).min(bins - 1);
        counts[i] += 1;
    }
    let scale = (params.big_n * batch.trials) as f64;
    let predicted = (0..bins).map(|i| scale * (mass_below(params, edges[i + 1]) - mass_below(params, edges[i]))).collect();
    let interior = (0..bins)
        .map(|i| {
            let (a, b) = (edges[i], edges[i + 1]);
            let inner = params.l == 0.0 || a - d.r1 >= local_length(params, a.max(d.r1));
            inner && d.r2 - b >= local_length(params, b.min(d.r2))
        })
        .collect();
    Ok(RadialHistogram { edges, counts, predicted, interior })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::ensemble::sample_ensemble;
    use crate::sampler::sphere::to_sphere;

    #[test]
    fn conservation_and_prediction() {
        let e = EnsembleParams::new(40, 80.0, 40.0).unwrap();
        let b = sample_ensemble(&e, 5, 1).unwrap();
        let h = empirical_radial_density(&b, 30).unwrap();
        assert_eq!(h.total(), 200);
        let p: f64 = h.predicted.iter().sum();
        assert!((p - 200.0).abs() < 1e-9);
        assert!(h.interior.iter().any(|&x| x) && !h.interior[0]);
    }

    #[test]
    fn cap_fractions_match_areas() {
        let e = EnsembleParams::new(12, 13.0, 0.0).unwrap();
        let b = sample_ensemble(&e, 200, 2).unwrap();
        let tot = b.len() as f64;
        let (_, q2) = e.cap_charges();
        let band = 1.0 / (1.0 + q2);
        for theta in [0.8, 1.6, 2.2] {
            let obs = b.all_points().filter(|&z| to_sphere(z).theta < theta).count() as f64 / tot;
            let want = cap_fraction(&e, theta);
            assert!(((theta / 2.0).sin().powi(2) / band - want).abs() < 1e-12 || want == 1.0);
            let sigma = (want * (1.0 - want) / tot).sqrt();
            assert!((obs - want).abs() < 5.0 * sigma + 0.02, "θ={theta}: {obs} vs {want}");
        }
    }
}

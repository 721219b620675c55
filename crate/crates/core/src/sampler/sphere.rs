//! Stereographic projection onto the unit-diameter Riemann sphere.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// `θ ∈ [0, π]`, `φ ∈ [0, 2π)` with `z = e^{iφ} tan(θ/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpherePoint {
    pub theta: f64,
    pub phi: f64,
}

pub fn to_sphere(z: Complex64) -> SpherePoint {
    let theta = 2.0 * z.norm().atan();
    let mut phi = z.arg();
    if phi < 0.0 {
        phi += 2.0 * PI;
    }
    if phi >= 2.0 * PI {
        phi -= 2.0 * PI;
    }
    SpherePoint { theta, phi }
}

pub fn from_sphere(p: SpherePoint) -> Complex64 {
    Complex64::from_polar((p.theta / 2.0).tan(), p.phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampler::rng::trial_rng;
    use rand::Rng;

    #[test]
    fn poles_and_equator() {
        assert_eq!(to_sphere(Complex64::new(0.0, 0.0)).theta, 0.0);
        let e = to_sphere(Complex64::new(0.0, 1.0));
        assert!((e.theta - PI / 2.0).abs() < 1e-15);
        assert!((e.phi - PI / 2.0).abs() < 1e-15);
        assert!(to_sphere(Complex64::new(0.0, -1e-300)).phi < 2.0 * PI);
    }

    #[test]
    fn round_trip() {
        let mut rng = trial_rng(9, 0);
        for _ in 0..100 {
            let z = Complex64::new(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0));
            let w = from_sphere(to_sphere(z));
            assert!((z - w).norm() < 1e-12 * z.norm().max(1.0));
        }
    }
}

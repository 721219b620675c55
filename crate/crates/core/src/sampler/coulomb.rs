//! Coulomb energies of charges on the sphere in Cayley–Klein coordinates.

use super::sphere::{to_sphere, SpherePoint};
use crate::error::{Error, Result};
use num_complex::Complex64;

/// `u = cos(θ/2) e^{iφ/2}`, `v = -i sin(θ/2) e^{-iφ/2}`.
pub fn cayley_klein(p: SpherePoint) -> (Complex64, Complex64) {
    let (s, c) = (p.theta / 2.0).sin_cos();
    let u = Complex64::from_polar(c, p.phi / 2.0);
    let v = Complex64::new(0.0, -s) * Complex64::from_polar(1.0, -p.phi / 2.0);
    (u, v)
}

/// `U₀ + U₁` for `m` unit charges with fixed charges `m q1` and `m q2` at the poles.
pub fn coulomb_energy(points: &[SpherePoint], q1: f64, q2: f64) -> Result<f64> {
    let m = points.len() as f64;
    let uv: Vec<(Complex64, Complex64)> = points.iter().map(|&p| cayley_klein(p)).collect();
    let mut u0 = 0.0;
    for j in 0..uv.len() {
        for k in j + 1..uv.len() {
            let d = (uv[j].0 * uv[k].1 - uv[k].0 * uv[j].1).norm();
            if d == 0.0 {
                return Err(Error::Coincidence(j, k));
            }
            u0 -= d.ln();
        }
    }
    let pole = |q: f64, x: f64| if q == 0.0 { 0.0 } else { q * x.ln() };
    let u1: f64 = uv.iter().map(|(u, v)| -m * (pole(q1, v.norm()) + pole(q2, u.norm()))).sum();
    Ok(u0 + u1)
}

/// `log` of the planar density over `e^{-2(U₀+U₁)} Π(1+|z|²)^{-2}`, constant in the configuration.
pub fn boltzmann_log_ratio(zs: &[Complex64], q1: f64, q2: f64) -> Result<f64> {
    let m = zs.len() as f64;
    let mut lhs = 0.0;
    for (j, z) in zs.iter().enumerate() {
        let s = 1.0 + z.norm_sqr();
        if q1 != 0.0 {
            lhs += q1 * m * (z.norm_sqr() / s).ln();
        }
        lhs -= (q2 * m + m + 1.0) * s.ln();
        for w in &zs[j + 1..] {
            lhs += 2.0 * (w - z).norm().ln();
        }
    }
    let pts: Vec<SpherePoint> = zs.iter().map(|&z| to_sphere(z)).collect();
    let jac: f64 = zs.iter().map(|z| -2.0 * (1.0 + z.norm_sqr()).ln()).sum();
    Ok(lhs - (-2.0 * coulomb_energy(&pts, q1, q2)? + jac))
}

//! Ensemble parameters, potential, weight, droplet and regimes.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Parameters `(N, n, L)` of the ensemble.
///
/// `big_n` is the number of independent eigenvalues, `n` and `l` may be
/// non-integer for the kernel formulas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleParams {
    pub big_n: usize,
    pub n: f64,
    pub l: f64,
}

/// Inner and outer radius of the annular droplet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DropletGeometry {
    pub r1: f64,
    pub r2: f64,
}

impl DropletGeometry {
    pub fn contains(&self, r: f64) -> bool {
        r >= self.r1 && r <= self.r2
    }
}

impl EnsembleParams {
    pub fn new(big_n: usize, n: f64, l: f64) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::domain("N must be at least 1"));
        }
        if !(l >= 0.0) || !l.is_finite() {
            return Err(Error::domain(format!("L must be finite and nonnegative, got {l}")));
        }
        if !n.is_finite() {
            return Err(Error::domain("n must be finite"));
        }
        if n <= big_n as f64 {
            return Err(Error::domain(format!("n must exceed N (got n = {n}, N = {big_n}); n = N gives an infinite outer radius")));
        }
        Ok(Self { big_n, n, l })
    }

    pub fn nf(&self) -> f64 {
        self.big_n as f64
    }

    /// True when `n` and `L` are integers, as the matrix model requires.
    pub fn is_integral(&self) -> bool {
        self.n.fract() == 0.0 && self.l.fract() == 0.0
    }

    /// `Q(ζ)`; `+∞` at the origin when `L > 0`.
    pub fn potential_q(&self, zeta: Complex64) -> Result<f64> {
        let r = zeta.norm();
        let nf = self.nf();
        let radial = (self.n + self.l + 1.0) / nf * (r * r).ln_1p();
        if self.l == 0.0 {
            return Ok(radial);
        }
        if r == 0.0 {
            return Err(Error::domain("Q(0) = +inf when L > 0"));
        }
        Ok(radial - 2.0 * self.l / nf * r.ln())
    }

    pub fn log_weight_omega(&self, zeta: Complex64) -> f64 {
        let e = self.n + self.l - 0.5;
        let a = (Complex64::new(1.0, 0.0) + zeta * zeta).norm();
        let lhs = if a == 0.0 { f64::NEG_INFINITY } else { e * a.ln() };
        lhs - (self.n + self.l + 1.0) * zeta.norm_sqr().ln_1p()
    }

    /// `ω(ζ) = |1+ζ²|^{n+L-1/2} / (1+|ζ|²)^{n+L+1}`.
    pub fn weight_omega(&self, zeta: Complex64) -> f64 {
        self.log_weight_omega(zeta).exp()
    }

    pub fn droplet(&self) -> DropletGeometry {
        let nf = self.nf();
        DropletGeometry { r1: (self.l / self.n).sqrt(), r2: ((nf + self.l) / (self.n - nf)).sqrt() }
    }

    pub fn macroscopic_density(&self, zeta: Complex64) -> f64 {
        let r = zeta.norm();
        if self.droplet().contains(r) {
            self.density_profile(r)
        } else {
            0.0
        }
    }

    /// Density formula without the support indicator.
    pub fn density_profile(&self, r: f64) -> f64 {
        let s = 1.0 + r * r;
        (self.n + self.l) / self.nf() / (s * s)
    }

    pub fn local_scale_delta(&self, p: f64) -> Result<f64> {
        if !(p >= 0.0) {
            return Err(Error::domain(format!("p must be nonnegative, got {p}")));
        }
        Ok(self.density_profile(p))
    }

    /// Pole charges `(q1, q2)` of the spherical Coulomb gas with `m = 2N` charges.
    pub fn cap_charges(&self) -> (f64, f64) {
        let m = 2.0 * self.nf();
        (2.0 * self.l / m, (2.0 * self.n - m) / m)
    }
}

/// The three scaling regimes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RegimeSpec {
    /// `L = aN`, `n = (b+1)N`, zoom point `p` on the real axis.
    Strong { a: f64, b: f64, p: f64 },
    /// `L = N²/ρ² - N`, `n = N²/ρ²`, zoom point `p = 1`.
    Weak { rho: f64 },
    /// Fixed `L`, `n = (b+1)N`, zoom point `p = 0`.
    Origin { l: f64, b: f64 },
}

impl RegimeSpec {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            RegimeSpec::Strong { a, b, p } => a >= 0.0 && b > 0.0 && p > 0.0,
            RegimeSpec::Weak { rho } => rho > 0.0,
            RegimeSpec::Origin { l, b } => l >= 0.0 && b > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("invalid regime {self:?}")))
        }
    }

    pub fn p(&self) -> f64 {
        match *self {
            RegimeSpec::Strong { p, .. } => p,
            RegimeSpec::Weak { .. } => 1.0,
            RegimeSpec::Origin { .. } => 0.0,
        }
    }

    /// Ensemble parameters of this regime at size `N`.
    pub fn params(&self, big_n: usize) -> Result<EnsembleParams> {
        self.validate()?;
        let nf = big_n as f64;
        match *self {
            RegimeSpec::Strong { a, b, .. } => EnsembleParams::new(big_n, (b + 1.0) * nf, a * nf),
            RegimeSpec::Weak { rho } => {
                let n = nf * nf / (rho * rho);
                EnsembleParams::new(big_n, n, n - nf)
            }
            RegimeSpec::Origin { l, b } => EnsembleParams::new(big_n, (b + 1.0) * nf, l),
        }
    }

    /// Same as [`RegimeSpec::params`] with `n` and `L` rounded to integers.
    pub fn integer_params(&self, big_n: usize) -> Result<EnsembleParams> {
        let p = self.params(big_n)?;
        EnsembleParams::new(big_n, p.n.round(), p.l.round())
    }

    pub fn delta(&self, params: &EnsembleParams) -> f64 {
        params.density_profile(self.p())
    }

    /// `√(Nδ)`, the microscopic zoom factor.
    pub fn zoom(&self, params: &EnsembleParams) -> f64 {
        (params.nf() * self.delta(params)).sqrt()
    }

    /// Limiting droplet radii as `N → ∞` in the strong regime.
    pub fn limiting_radii(&self) -> Option<DropletGeometry> {
        match *self {
            RegimeSpec::Strong { a, b, .. } => Some(DropletGeometry { r1: (a / (b + 1.0)).sqrt(), r2: ((a + 1.0) / b).sqrt() }),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn potential_values() {
        let p = EnsembleParams::new(1, 2.0, 0.0).unwrap();
        assert_eq!(p.potential_q(c(0.0, 0.0)).unwrap(), 0.0);
        let p = EnsembleParams::new(1, 2.0, 1.0).unwrap();
        assert_relative_eq!(p.potential_q(c(1.0, 0.0)).unwrap(), 4.0 * 2f64.ln(), epsilon = 1e-15);
        assert!(matches!(p.potential_q(c(0.0, 0.0)), Err(Error::Domain(_))));
        let a = p.potential_q(c(0.3, 0.4)).unwrap();
        let b = p.potential_q(c(0.5, 0.0)).unwrap();
        assert_relative_eq!(a, b, epsilon = 1e-15);
    }

    #[test]
    fn weight_values() {
        let p = EnsembleParams::new(1, 2.0, 0.0).unwrap();
        assert_eq!(p.weight_omega(c(0.0, 0.0)), 1.0);
        assert_eq!(p.weight_omega(c(0.0, 1.0)), 0.0);
        assert_relative_eq!(p.weight_omega(c(1.0, 0.0)), 2f64.powf(-1.5), epsilon = 1e-15);
        let z = c(0.3, -0.7);
        assert_relative_eq!(p.weight_omega(z), p.weight_omega(-z), epsilon = 1e-15);
        assert_relative_eq!(p.weight_omega(z), p.weight_omega(z.conj()), epsilon = 1e-15);
    }

    #[test]
    fn droplet_and_density() {
        let p = EnsembleParams::new(100, 200.0, 100.0).unwrap();
        let d = p.droplet();
        assert_relative_eq!(d.r1, 0.5f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(d.r2, 2f64.sqrt(), epsilon = 1e-15);
        assert_relative_eq!(p.macroscopic_density(c(1.0, 0.0)), 0.75, epsilon = 1e-15);
        assert_eq!(p.macroscopic_density(c(0.1, 0.0)), 0.0);
        let p0 = EnsembleParams::new(5, 9.0, 0.0).unwrap();
        assert_eq!(p0.droplet().r1, 0.0);
    }

    #[test]
    fn density_integrates_to_n() {
        let p = EnsembleParams::new(7, 12.0, 3.0).unwrap();
        let d = p.droplet();
        let total = crate::quad::integrate_real(|r| 2.0 * r * p.density_profile(r), d.r1, d.r2, 1e-14).unwrap();
        assert_relative_eq!(total, 1.0, epsilon = 1e-13);
    }

    #[test]
    fn rejects_bad_params() {
        assert!(EnsembleParams::new(3, 3.0, 0.0).is_err());
        assert!(EnsembleParams::new(0, 3.0, 0.0).is_err());
        assert!(EnsembleParams::new(2, 3.0, -1.0).is_err());
    }

    #[test]
    fn regimes() {
        let s = RegimeSpec::Strong { a: 1.0, b: 1.0, p: 1.0 };
        let p = s.params(50).unwrap();
        assert_eq!((p.n, p.l), (100.0, 50.0));
        let lim = s.limiting_radii().unwrap();
        let d = p.droplet();
        assert_relative_eq!(d.r1, lim.r1, epsilon = 1e-12);
        assert_relative_eq!(d.r2, lim.r2, epsilon = 1e-12);

        let w = RegimeSpec::Weak { rho: 2.0 };
        let p = w.params(40).unwrap();
        assert_relative_eq!(w.delta(&p), (2.0 * 40.0 / 4.0 - 1.0) / 4.0, epsilon = 1e-12);

        let o = RegimeSpec::Origin { l: 2.0, b: 1.0 };
        let p = o.params(1000).unwrap();
        assert_relative_eq!(o.delta(&p), 2.0, epsilon = 1e-2);
        assert_eq!(o.p(), 0.0);
    }

    #[test]
    fn cap_identities() {
        for &(nn, n, l) in &[(3usize, 7.0, 2.0), (10, 25.0, 4.0), (1, 2.0, 0.0)] {
            let p = EnsembleParams::new(nn, n, l).unwrap();
            let (q1, q2) = p.cap_charges();
            let d = p.droplet();
            assert_relative_eq!(q1 / (1.0 + q2), d.r1 * d.r1, epsilon = 1e-15);
            assert_relative_eq!((1.0 + q1) / q2, d.r2 * d.r2, epsilon = 1e-15);
        }
    }

    #[test]
    fn delta_decreasing() {
        let p = EnsembleParams::new(4, 9.0, 1.0).unwrap();
        let mut prev = f64::INFINITY;
        for i in 0..20 {
            let d = p.local_scale_delta(i as f64 * 0.3).unwrap();
            assert!(d < prev);
            prev = d;
        }
    }
}

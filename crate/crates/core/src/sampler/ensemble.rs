//! Per-trial matrix construction, spectra and conjugate pairing.

use super::haar::haar_symplectic_unitary;
use super::quaternion::{ginibre_quaternion, QuaternionMatrix};
use super::rng::{thread_pool, trial_rng};
use super::wishart::{hermitian_power, wishart_inv_sqrt};
use crate::error::{Error, Result};
use crate::params::EnsembleParams;
use nalgebra::Schur;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Relative tolerance, in units of the spectral radius, for conjugate pairing.
pub const PAIRING_TOL: f64 = 1e-8;

/// Tolerance for the quaternion structure after each stage.
pub const STRUCTURE_TOL: f64 = 1e-10;

/// Upper-half-plane eigenvalue representatives of independent trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleBatch {
    pub seed: u64,
    pub params: EnsembleParams,
    pub trials: usize,
    pub eigen_pairs: Vec<Vec<Complex64>>,
}

impl SampleBatch {
    pub fn all_points(&self) -> impl Iterator<Item = Complex64> + '_ {
        self.eigen_pairs.iter().flatten().copied()
    }

    pub fn len(&self) -> usize {
        self.eigen_pairs.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn integer_dims(params: &EnsembleParams) -> Result<(usize, usize)> {
    if !params.is_integral() {
        return Err(Error::domain(format!("sampling needs integer n and L, got n = {}, L = {}", params.n, params.l)));
    }
    Ok((params.n as usize, params.l as usize))
}

fn structured(m: QuaternionMatrix, stage: &str) -> Result<QuaternionMatrix> {
    let e = m.block_error();
    if e > STRUCTURE_TOL * m.data.norm().max(1.0) {
        return Err(Error::Numerical(format!("quaternion structure lost after {stage}: {e:e}")));
    }
    Ok(m)
}

/// The `2N × 2N` matrix `G` of one trial.
pub fn sample_matrix(params: &EnsembleParams, seed: u64, trial: usize) -> Result<QuaternionMatrix> {
    let (n, l) = integer_dims(params)?;
    let big_n = params.big_n;
    let mut rng = trial_rng(seed, trial);
    let (_, a_inv_sqrt) = wishart_inv_sqrt(n, big_n, &mut rng)?;
    let a_inv_sqrt = structured(a_inv_sqrt, "A^{-1/2}")?;
    let x = ginibre_quaternion(big_n + l, big_n, &mut rng)?;
    let y = x.mul(&a_inv_sqrt)?;
    let yy = y.adjoint().mul(&y)?;
    let root = structured(QuaternionMatrix { rows: big_n, cols: big_n, data: hermitian_power(&yy.data, 0.5)? }, "(Y†Y)^{1/2}")?;
    let u = haar_symplectic_unitary(big_n, &mut rng)?;
    structured(u.mul(&root)?, "U (Y†Y)^{1/2}")
}

/// Greedy nearest-neighbour matching of a spectrum with its conjugate.
pub fn pair_conjugates(ev: &[Complex64], trial: usize) -> Result<Vec<Complex64>> {
    let radius = ev.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = PAIRING_TOL * radius.max(f64::MIN_POSITIVE);
    let mut order: Vec<usize> = (0..ev.len()).collect();
    order.sort_by(|&a, &b| ev[b].im.abs().total_cmp(&ev[a].im.abs()));
    let mut used = vec![false; ev.len()];
    let mut reps = Vec::with_capacity(ev.len() / 2);
    for &i in &order {
        if used[i] {
            continue;
        }
        used[i] = true;
        let target = ev[i].conj();
        let j = (0..ev.len())
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (ev[a] - target).norm().total_cmp(&(ev[b] - target).norm()))
            .ok_or(Error::Pairing { trial, mismatch: f64::INFINITY, tolerance: tol })?;
        let mismatch = (ev[j] - target).norm();
        if mismatch > tol {
            return Err(Error::Pairing { trial, mismatch, tolerance: tol });
        }
        used[j] = true;
        if ev[i].im == 0.0 {
            log::warn!("trial {trial}: exactly real eigenvalue {} self-paired", ev[i].re);
        }
        reps.push(if ev[i].im >= 0.0 { ev[i] } else { ev[j] });
    }
    Ok(reps)
}

/// The `N` upper-half representatives of one trial.
pub fn sample_trial(params: &EnsembleParams, seed: u64, trial: usize) -> Result<Vec<Complex64>> {
    let g = sample_matrix(params, seed, trial)?;
    let dim = g.data.nrows();
    let schur = Schur::try_new(g.data, f64::EPSILON, 100 * dim)
        .ok_or(Error::Eigensolver { trial, msg: "Schur iteration did not converge".into() })?;
    let ev = schur.eigenvalues().ok_or(Error::Eigensolver { trial, msg: "non-triangular Schur form".into() })?;
    let ev: Vec<Complex64> = ev.iter().copied().collect();
    if ev.iter().any(|z| !z.is_finite()) {
        return Err(Error::Eigensolver { trial, msg: "non-finite eigenvalue".into() });
    }
    pair_conjugates(&ev, trial)
}

/// Runs `trials` independent trials in parallel; identical seeds give identical batches.
pub fn sample_ensemble(params: &EnsembleParams, trials: usize, seed: u64) -> Result<SampleBatch> {
    integer_dims(params)?;
    if trials == 0 {
        return Err(Error::domain("trials must be positive"));
    }
    let eigen_pairs =
        thread_pool().install(|| (0..trials).into_par_iter().map(|t| sample_trial(params, seed, t)).collect::<Result<Vec<_>>>())?;
    Ok(SampleBatch { seed, params: *params, trials, eigen_pairs })
}

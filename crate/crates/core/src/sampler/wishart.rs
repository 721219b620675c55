//! Quaternion Wishart matrices and Hermitian matrix powers.

use super::quaternion::{ginibre_quaternion, QuaternionMatrix};
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;

/// Relative floor applied to eigenvalues before taking powers.
pub const EIGEN_FLOOR: f64 = 1e-12;

/// `H^s` for a Hermitian positive semidefinite `H` through its eigendecomposition.
pub fn hermitian_power(h: &DMatrix<Complex64>, s: f64) -> Result<DMatrix<Complex64>> {
    let m = h.nrows();
    let sym = (h + h.adjoint()) * Complex64::new(0.5, 0.0);
    let eig = sym.symmetric_eigen();
    let lmax = eig.eigenvalues.iter().cloned().fold(0.0, f64::max);
    if lmax <= 0.0 {
        return Err(Error::Singular("matrix has no positive eigenvalue".into()));
    }
    let floor = EIGEN_FLOOR * lmax;
    let floored = eig.eigenvalues.iter().filter(|&&l| l < floor).count();
    if floored * 100 > m {
        return Err(Error::Singular(format!("{floored} of {m} eigenvalues below {floor:e}")));
    }
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|l| Complex64::new(l.max(floor).powf(s), 0.0)));
    Ok(&eig.eigenvectors * d * eig.eigenvectors.adjoint())
}

/// `A^{-1/2}` for `A = Y†Y` with `Y` an `n × N` quaternion Ginibre matrix.
pub fn wishart_inv_sqrt<R: Rng + ?Sized>(n: usize, big_n: usize, rng: &mut R) -> Result<(QuaternionMatrix, QuaternionMatrix)> {
    if n < big_n {
        return Err(Error::domain(format!("Wishart needs n ≥ N, got n = {n}, N = {big_n}")));
    }
    let y = ginibre_quaternion(n, big_n, rng)?;
    let a = y.adjoint().mul(&y)?;
    let inv = hermitian_power(&a.data, -0.5)?;
    Ok((a, QuaternionMatrix { rows: big_n, cols: big_n, data: inv }))
}

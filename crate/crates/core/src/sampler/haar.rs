//! Haar-distributed symplectic unitaries.

use super::quaternion::{ginibre_quaternion, QuaternionMatrix};
use crate::error::Result;
use nalgebra::DVector;
use num_complex::Complex64;
use rand::Rng;

/// Second column of the quaternion block column whose first column is `v`.
fn partner(v: &DVector<Complex64>) -> DVector<Complex64> {
    DVector::from_fn(v.len(), |i, _| if i % 2 == 0 { -v[i + 1].conj() } else { v[i - 1].conj() })
}

/// Gram–Schmidt over quaternion columns of a quaternion Ginibre matrix.
pub fn haar_symplectic_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<QuaternionMatrix> {
    let g = ginibre_quaternion(n, n, rng)?;
    let mut cols: Vec<DVector<Complex64>> = Vec::with_capacity(2 * n);
    for j in 0..n {
        let mut v: DVector<Complex64> = g.data.column(2 * j).into_owned();
        for _ in 0..2 {
            for c in &cols {
                let proj = c.dotc(&v);
                v -= c * proj;
            }
        }
        let norm = v.norm();
        v /= Complex64::new(norm, 0.0);
        let w = partner(&v);
        cols.push(v);
        cols.push(w);
    }
    let data = nalgebra::DMatrix::from_columns(&cols);
    Ok(QuaternionMatrix { rows: n, cols: n, data })
}

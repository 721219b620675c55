//! Quaternion matrices in their `2×2` complex block representation.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// A `rows × cols` quaternion matrix stored as a `2rows × 2cols` complex
/// matrix with blocks `[[α, β], [-β̄, ᾱ]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuaternionMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: DMatrix<Complex64>,
}

impl QuaternionMatrix {
    /// Wraps a complex matrix, rejecting it if the block structure is off by more than `tol`.
    pub fn from_complex(data: DMatrix<Complex64>, tol: f64) -> Result<Self> {
        if !data.nrows().is_multiple_of(2) || !data.ncols().is_multiple_of(2) {
            return Err(Error::Dimension(format!("{}×{} is not a quaternion shape", data.nrows(), data.ncols())));
        }
        let q = Self { rows: data.nrows() / 2, cols: data.ncols() / 2, data };
        let e = q.block_error();
        if e > tol * q.data.norm().max(1.0) {
            return Err(Error::Numerical(format!("quaternion block structure violated by {e:e}")));
        }
        Ok(q)
    }

    /// Builds the matrix from the `(α, β)` pair of every block.
    pub fn from_blocks(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> (Complex64, Complex64)) -> Self {
        let mut data = DMatrix::zeros(2 * rows, 2 * cols);
        for i in 0..rows {
            for j in 0..cols {
                let (a, b) = f(i, j);
                data[(2 * i, 2 * j)] = a;
                data[(2 * i, 2 * j + 1)] = b;
                data[(2 * i + 1, 2 * j)] = -b.conj();
                data[(2 * i + 1, 2 * j + 1)] = a.conj();
            }
        }
        Self { rows, cols, data }
    }

    /// Largest deviation from `b21 = -conj(b12)` and `b22 = conj(b11)`.
    pub fn block_error(&self) -> f64 {
        let d = &self.data;
        let mut e: f64 = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                let (r, c) = (2 * i, 2 * j);
                e = e.max((d[(r + 1, c)] + d[(r, c + 1)].conj()).norm());
                e = e.max((d[(r + 1, c + 1)] - d[(r, c)].conj()).norm());
            }
        }
        e
    }

    pub fn adjoint(&self) -> Self {
        Self { rows: self.cols, cols: self.rows, data: self.data.adjoint() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!("{}×{} times {}×{}", self.rows, self.cols, other.rows, other.cols)));
        }
        Ok(Self { rows: self.rows, cols: other.cols, data: &self.data * &other.data })
    }
}

/// Standard complex Gaussian with `E|α|² = 1`.
pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex64::new(re * s, im * s)
}

/// Rectangular quaternion Ginibre matrix with independent standard complex `α, β`.
pub fn ginibre_quaternion<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Result<QuaternionMatrix> {
    if rows == 0 || cols == 0 {
        return Err(Error::domain("quaternion matrix dimensions must be positive"));
    }
    Ok(QuaternionMatrix::from_blocks(rows, cols, |_, _| {
        let a = complex_gaussian(rng);
        let b = complex_gaussian(rng);
        (a, b)
    }))
}

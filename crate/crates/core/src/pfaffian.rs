//! Pfaffians of complex skew-symmetric matrices.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;

/// Complex skew-symmetric matrix of even dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix {
    data: DMatrix<Complex64>,
}

impl SkewMatrix {
    /// Antisymmetrizes `m` as `(m - mᵀ)/2`, warning on large asymmetry.
    pub fn new(m: DMatrix<Complex64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::Dimension(format!("{}x{} matrix is not square", m.nrows(), m.ncols())));
        }
        if m.nrows() % 2 == 1 {
            return Err(Error::Dimension(format!("odd dimension {}", m.nrows())));
        }
        let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let asym = (&m + m.transpose()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if asym > 1e-10 * scale {
            log::warn!("skew matrix asymmetry {asym:e} relative to {scale:e}");
        }
        let data = (&m - m.transpose()) * Complex64::new(0.5, 0.0);
        Ok(Self { data })
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        Self::new(DMatrix::from_fn(dim, dim, f))
    }

    pub fn dim(&self) -> usize {
        self.data.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.data
    }

    pub fn pfaffian(&self) -> Complex64 {
        pfaffian_parlett_reid(self.data.clone())
    }
}

/// Pfaffian of an even-dimensional skew matrix.
pub fn pfaffian(a: &SkewMatrix) -> Complex64 {
    a.pfaffian()
}

/// Pfaffian of a raw matrix after antisymmetrization.
pub fn pfaffian_of(m: DMatrix<Complex64>) -> Result<Complex64> {
    Ok(SkewMatrix::new(m)?.pfaffian())
}

fn pfaffian_parlett_reid(mut a: DMatrix<Complex64>) -> Complex64 {
    let n = a.nrows();
    let mut pf = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut k = 0;
    while k + 1 < n {
        let mut piv = k + 1;
        let mut best = a[(k + 1, k)].norm();
        for i in k + 2..n {
            let v = a[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if piv != k + 1 {
            a.swap_rows(k + 1, piv);
            a.swap_columns(k + 1, piv);
            pf = -pf;
        }
        let akk1 = a[(k, k + 1)];
        if akk1 == zero {
            return zero;
        }
        pf *= akk1;
        if k + 2 < n {
            let tau: Vec<Complex64> = (k + 2..n).map(|j| a[(k, j)] / akk1).collect();
            let col: Vec<Complex64> = (k + 2..n).map(|i| a[(i, k + 1)]).collect();
            for (ii, i) in (k + 2..n).enumerate() {
                for (jj, j) in (k + 2..n).enumerate() {
                    a[(i, j)] += tau[ii] * col[jj] - col[ii] * tau[jj];
                }
            }
        }
        k += 2;
    }
    pf
}

//! Pfaffians of complex skew-symmetric matrices.

use nalgebra::DMatrix;
use sphefaffian::pfaffian::SkewMatrix;
use sphefaffian::{Complex64, Result};

fn main() -> Result<()> {
    for dim in [2, 4, 10, 40] {
        let a = SkewMatrix::from_fn(dim, |i, j| {
            Complex64::new(((i * i * 37 + j * j * 101 + i * j * 13) as f64).sin(), ((i * i * 11 + j * 7 + i * j * j) as f64).cos())
        })?;
        let pf = a.pfaffian();
        let det = a.matrix().clone().determinant();
        println!("dim {dim:2}: Pf = {pf:.6e}, |Pf² - det|/|det| = {:.2e}", (pf * pf - det).norm() / det.norm());
    }
    let m = DMatrix::from_row_slice(
        2,
        2,
        &[Complex64::new(0.0, 0.0), Complex64::new(3.0, 1.0), Complex64::new(-3.0, -1.0), Complex64::new(0.0, 0.0)],
    );
    println!("Pf [[0, a], [-a, 0]] = {}", SkewMatrix::new(m)?.pfaffian());
    Ok(())
}

//! Numerical toolkit for the induced spherical symplectic Ginibre ensemble.
//!
//! The crate evaluates finite-N Pfaffian correlation kernels by two independent
//! routes, the generalized Christoffel–Darboux identity, the universal limiting
//! kernels, a matrix-model Monte Carlo sampler and linear-statistics formulas.
//!
//! Start from [`params::EnsembleParams`] and follow the runnable programs in
//! `examples/`.

pub mod cdi;
pub mod cli;
pub mod error;
pub mod finitekernel;
pub mod limits;
pub mod linstat;
pub mod logscaled;
pub mod params;
pub mod pfaffian;
pub mod quad;
pub mod sampler;
pub mod specfun;

pub use error::{Error, Result};
pub use num_complex::Complex64;
pub use params::{DropletGeometry, EnsembleParams, RegimeSpec};

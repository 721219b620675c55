//! Special functions used by the kernels.

mod erfc;
mod gamma;
mod incbeta;
mod incgamma;
mod mittag_leffler;

pub use erfc::{erf_c, erfc_c, faddeeva_w};
pub use gamma::{lgam, log_gamma, rgamma};
pub use incbeta::{reg_inc_beta, reg_inc_beta_with};
pub use incgamma::{reg_inc_gamma_p, reg_inc_gamma_p_with};
pub use mittag_leffler::mittag_leffler;

use crate::error::{Error, Result};

/// Truncation controls for series evaluations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Self { rel_tol: 1e-13, max_terms: 1_000_000 }
    }
}

impl Precision {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) || max_terms == 0 {
            return Err(Error::domain(format!("invalid precision rel_tol={rel_tol}, max_terms={max_terms}")));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

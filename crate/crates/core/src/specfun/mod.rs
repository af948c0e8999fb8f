//! Special functions in working (f64) precision.

mod bessel;
mod beta;
mod elliptic;
mod erfc;
mod gamma;
mod hyp2f1;
mod kummer;
mod legendre;
pub mod reductions;

pub use bessel::{bessel_i, bessel_k};
pub use beta::{incomplete_beta, incomplete_beta_with, IncompleteBeta};
pub use elliptic::{elliptic_k, elliptic_k_with};
pub use erfc::erfc;
pub use gamma::{digamma, gamma, rgamma, sin_pi};
pub use hyp2f1::{gauss_2f1, gauss_2f1_near_unity, Gauss2F1, HypParams};
pub use kummer::kummer_phi;
pub use legendre::{legendre_p, legendre_p_equal, Ferrers};

use serde::Serialize;

/// Maximum number of terms any series may use.
pub const SERIES_BUDGET: usize = 500;
/// Relative truncation tolerance of every series.
pub const SERIES_TOL: f64 = 1e-15;

/// Value of a summed series together with its error bookkeeping.
///
/// `abs_err_est` is the truncation estimate plus a rounding estimate
/// proportional to the sum of the absolute values of the terms, so when the
/// terms cancel it exceeds `SERIES_TOL * |value|`. `converged` reports that
/// the truncation criterion was met.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeriesResult {
    pub value: f64,
    pub abs_err_est: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl SeriesResult {
    pub(crate) fn exact(value: f64) -> SeriesResult {
        SeriesResult { value, abs_err_est: 0.0, terms_used: 0, converged: true }
    }

    /// Multiply by a factor known to relative accuracy `rel`.
    pub(crate) fn scaled(self, factor: f64, rel: f64) -> SeriesResult {
        let value = self.value * factor;
        SeriesResult {
            value,
            abs_err_est: self.abs_err_est * factor.abs() + value.abs() * rel,
            ..self
        }
    }

    /// Relative error bound implied by the estimate.
    pub fn rel_err(&self) -> f64 {
        if self.value == 0.0 { self.abs_err_est } else { self.abs_err_est / self.value.abs() }
    }
}

pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

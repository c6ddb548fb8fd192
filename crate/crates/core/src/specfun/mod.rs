//! Scalar special functions: Gamma, Mittag-Leffler and the Gauss
//! hypergeometric series.
//!
//! Everything here is real-valued double precision. The two series are
//! truncated under a [`SeriesControl`].

mod gamma;
mod hypergeometric;
mod mittag_leffler;

pub use gamma::{gamma, ln_gamma, recip_gamma};
pub use hypergeometric::hyp2f1;
pub use mittag_leffler::mittag_leffler;

use crate::error::{Error, Result};

/// Truncation control shared by the infinite series.
///
/// A series stops once the next term is smaller than `tol` relative to the
/// running sum. Hitting `max_terms` first is an error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    tol: f64,
    max_terms: usize,
}

impl SeriesControl {
    pub const DEFAULT_TOL: f64 = 1e-14;
    pub const DEFAULT_MAX_TERMS: usize = 100_000;

    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0 && tol < 1.0) {
            return Err(Error::InvalidControl(format!("tol = {tol} not in (0, 1)")));
        }
        if max_terms == 0 {
            return Err(Error::InvalidControl("max_terms must be >= 1".into()));
        }
        Ok(Self { tol, max_terms })
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            tol: Self::DEFAULT_TOL,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

/// True when `x` is one of 0, -1, -2, ...
pub(crate) fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor()
}

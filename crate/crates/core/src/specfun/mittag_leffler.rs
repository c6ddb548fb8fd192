use super::{ln_gamma, SeriesControl};
use crate::error::{Error, Result};

/// Two-parameter Mittag-Leffler function `E_{α,β}(z) = Σ z^k / Γ(αk + β)`
/// for real `z`, by direct summation.
///
/// Terms are formed as `exp(k ln|z| - ln Γ(αk+β))` so the Gamma values never
/// overflow. Summation stops when the next term falls below `ctl.tol()`
/// relative to the partial sum, once the arguments are past the minimum of
/// Γ (where the terms become monotone).
///
/// Direct summation loses accuracy to cancellation for large negative `z`;
/// it is meant for moderate `|z|`.
pub fn mittag_leffler(alpha: f64, beta: f64, z: f64, ctl: SeriesControl) -> Result<f64> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!(
            "mittag_leffler requires alpha > 0, got {alpha}"
        )));
    }
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::Domain(format!(
            "mittag_leffler requires beta > 0, got {beta}"
        )));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!(
            "mittag_leffler of non-finite z = {z}"
        )));
    }
    let mut sum = 1.0 / super::gamma(beta)?;
    if z == 0.0 {
        return Ok(sum);
    }
    let ln_abs_z = z.abs().ln();
    let negative = z < 0.0;
    for k in 1..ctl.max_terms() {
        let arg = alpha * k as f64 + beta;
        let magnitude = (k as f64 * ln_abs_z - ln_gamma(arg)?).exp();
        let term = if negative && k % 2 == 1 {
            -magnitude
        } else {
            magnitude
        };
        sum += term;
        if arg > 2.0 && magnitude < ctl.tol() * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: ctl.max_terms(),
    })
}

//! Closed-form actions of the operators on powers and constants.

use super::Order;
use crate::error::{Error, Result};
use crate::specfun::{gamma, recip_gamma};

/// `Γ(1+β)/Γ(1+β-α) · t^(β-α)` for `t >= 0`, with the `t = 0` limit resolved.
fn power_rule(beta: f64, alpha: f64, t: f64, at: f64) -> Result<f64> {
    let coef = gamma(1.0 + beta)? * recip_gamma(1.0 + beta - alpha);
    let exponent = beta - alpha;
    if t > 0.0 {
        return Ok(coef * t.powf(exponent));
    }
    if exponent > 0.0 {
        Ok(0.0)
    } else if exponent == 0.0 {
        Ok(coef)
    } else {
        Err(Error::Singular { x: at })
    }
}

/// Left Caputo derivative of `(x - a)^β`, `β > 0`:
/// `Γ(1+β)/Γ(1+β-α) · (x-a)^(β-α)`.
pub fn caputo_left_power(beta: f64, ord: Order, a: f64, x: f64) -> Result<f64> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!(
            "Caputo power rule needs beta > 0, got {beta}"
        )));
    }
    if !(x >= a) {
        return Err(Error::Domain(format!("need x >= a, got x = {x}, a = {a}")));
    }
    power_rule(beta, ord.alpha(), x - a, x)
}

/// Right Riemann-Liouville derivative of `(b - x)^β`, `β > -1`:
/// `Γ(1+β)/Γ(1+β-α) · (b-x)^(β-α)`.
///
/// The kernel `(b - x)^(α-1)` is annihilated exactly.
pub fn rl_right_power(beta: f64, ord: Order, b: f64, x: f64) -> Result<f64> {
    if !(beta > -1.0) {
        return Err(Error::Domain(format!(
            "RL power rule needs beta > -1, got {beta}"
        )));
    }
    if !(x <= b) {
        return Err(Error::Domain(format!("need x <= b, got x = {x}, b = {b}")));
    }
    let alpha = ord.alpha();
    // 1 + β - α sits on the pole of Γ at 0; absorb rounding from computing
    // β as α - 1 so the coefficient is exactly zero.
    let kernel = alpha - 1.0;
    if (beta - kernel).abs() <= 4.0 * f64::EPSILON * beta.abs().max(1.0) {
        return Ok(0.0);
    }
    power_rule(beta, alpha, b - x, x)
}

/// Left (and right) Caputo derivative of a constant: always zero.
pub fn caputo_of_constant(_k: f64, _ord: Order) -> f64 {
    0.0
}

/// Left Riemann-Liouville derivative of the constant `K`:
/// `K/Γ(1-α) · (x-a)^(-α)` for `x > a`, `α < 1`.
///
/// At `α = 1` this is the classical derivative of a constant, which the
/// caller handles; the kernel rejects it because `Γ(0)` is a pole.
pub fn rl_left_of_constant(k: f64, ord: Order, a: f64, x: f64) -> Result<f64> {
    let alpha = ord.alpha();
    if ord.is_integer() {
        return Err(Error::Domain(
            "RL constant kernel undefined at alpha = 1".into(),
        ));
    }
    if x == a {
        return Err(Error::Singular { x });
    }
    if !(x > a) {
        return Err(Error::Domain(format!("need x > a, got x = {x}, a = {a}")));
    }
    Ok(k * recip_gamma(1.0 - alpha) * (x - a).powf(-alpha))
}

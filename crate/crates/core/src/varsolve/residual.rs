//! Residuals of the two Euler-Lagrange equations for the example Lagrangian
//! `u² - 24y`. With `∂L/∂y = -24` and `∂L/∂u = 2u` both equations reduce to
//! `D_right[ᶜD^α y] = 12`, where `D_right` is the right Riemann-Liouville
//! derivative (C-RL) or the right Caputo derivative (C-C).

use crate::error::{Error, Result};
use crate::fracops::{
    caputo_left_l1_all, caputo_right_l1, caputo_right_l1_all, Order, SampledFunction,
};
use crate::specfun::recip_gamma;

/// Right-hand side of the reduced Euler-Lagrange equations.
pub const EL_RHS: f64 = 12.0;

/// The inner sequence `g_i = ᶜD^α y (x_i)` by the L1 scheme.
///
/// Node 0 carries no L1 value; it is filled by linear extrapolation from
/// nodes 1 and 2 (or copied from node 1 when `m = 1`). Only the right
/// derivatives at nodes `>= 1` are ever read from it.
pub fn inner_derivative(y: &SampledFunction, ord: Order) -> SampledFunction {
    let mut g = caputo_left_l1_all(y, ord);
    g[0] = if g.len() > 2 { 2.0 * g[1] - g[2] } else { g[1] };
    SampledFunction::new(*y.grid(), g).expect("L1 of finite samples is finite")
}

fn check_interior(y: &SampledFunction, i: usize) -> Result<()> {
    let m = y.grid().m();
    if i < 1 || i + 1 > m {
        return Err(Error::IndexOutOfRange {
            index: i,
            lo: 1,
            hi: m.saturating_sub(1),
        });
    }
    Ok(())
}

/// `g(b)/Γ(1-α) · (b - x)^(-α)`: right RL minus right Caputo of `g`.
fn rl_correction(g: &SampledFunction, ord: Order, i: usize) -> f64 {
    let grid = g.grid();
    let m = grid.m();
    let dist = grid.b() - grid.node(i);
    g.value(m) * recip_gamma(1.0 - ord.alpha()) * dist.powf(-ord.alpha())
}

/// C-RL residual at interior node `i`:
/// `[right-Caputo L1 of g + g(b)/Γ(1-α) (b-x)^(-α)] - 12`.
pub fn el_residual_crl(y: &SampledFunction, ord: Order, i: usize) -> Result<f64> {
    check_interior(y, i)?;
    let g = inner_derivative(y, ord);
    Ok(caputo_right_l1(&g, ord, i)? + rl_correction(&g, ord, i) - EL_RHS)
}

/// C-C residual at interior node `i`: `right-Caputo L1 of g - 12`.
pub fn el_residual_cc(y: &SampledFunction, ord: Order, i: usize) -> Result<f64> {
    check_interior(y, i)?;
    let g = inner_derivative(y, ord);
    Ok(caputo_right_l1(&g, ord, i)? - EL_RHS)
}

/// C-RL residuals at every interior node as `(x_i, r_i)`, in `O(m²)`.
pub fn el_residuals_crl(y: &SampledFunction, ord: Order) -> Vec<(f64, f64)> {
    let g = inner_derivative(y, ord);
    let right = caputo_right_l1_all(&g, ord);
    interior(y, |i| right[i] + rl_correction(&g, ord, i) - EL_RHS)
}

/// C-C residuals at every interior node as `(x_i, r_i)`, in `O(m²)`.
pub fn el_residuals_cc(y: &SampledFunction, ord: Order) -> Vec<(f64, f64)> {
    let g = inner_derivative(y, ord);
    let right = caputo_right_l1_all(&g, ord);
    interior(y, |i| right[i] - EL_RHS)
}

fn interior(y: &SampledFunction, r: impl Fn(usize) -> f64) -> Vec<(f64, f64)> {
    let grid = y.grid();
    (1..grid.m()).map(|i| (grid.node(i), r(i))).collect()
}

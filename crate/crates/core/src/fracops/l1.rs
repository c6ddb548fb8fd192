//! Grid schemes: the L1 Caputo derivative (left and, by reflection, right)
//! and a product-rectangle rule for the Riemann-Liouville integral.

use super::{Order, SampledFunction};
use crate::error::{Error, Result};
use crate::specfun::{gamma, recip_gamma};

/// `(k+1)^p - k^p` without cancellation for large `k`.
fn power_increment(k: usize, p: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let k = k as f64;
    k.powf(p) * (p * (1.0 / k).ln_1p()).exp_m1()
}

/// L1 weights `b_k = h^(-α)/Γ(2-α) · ((k+1)^(1-α) - k^(1-α))` for `k < n`.
///
/// At `α = 1` this is `b_0 = 1/h` and `b_k = 0` otherwise, i.e. the backward
/// difference.
pub fn l1_weights(ord: Order, h: f64, n: usize) -> Vec<f64> {
    let alpha = ord.alpha();
    let scale = h.powf(-alpha) * recip_gamma(2.0 - alpha);
    let p = 1.0 - alpha;
    (0..n).map(|k| scale * power_increment(k, p)).collect()
}

fn check_index(i: usize, lo: usize, hi: usize) -> Result<()> {
    if i < lo || i > hi {
        return Err(Error::IndexOutOfRange { index: i, lo, hi });
    }
    Ok(())
}

fn l1_sum(values: &[f64], weights: &[f64], i: usize) -> f64 {
    // Σ_{k=0}^{i-1} b_{i-k-1} (v_{k+1} - v_k)
    values[..=i]
        .windows(2)
        .zip(weights[..i].iter().rev())
        .map(|(w, b)| b * (w[1] - w[0]))
        .sum()
}

/// Left Caputo derivative at node `i` (`1 <= i <= m`) by the L1 scheme
/// `Σ_{k=0}^{i-1} b_{i-k-1} (y_{k+1} - y_k)`.
///
/// Exact for piecewise-linear data; `O(h^(2-α))` for smooth data.
pub fn caputo_left_l1(f: &SampledFunction, ord: Order, i: usize) -> Result<f64> {
    let grid = f.grid();
    check_index(i, 1, grid.m())?;
    let weights = l1_weights(ord, grid.h(), i);
    Ok(l1_sum(f.values(), &weights, i))
}

/// [`caputo_left_l1`] at every node. Index 0 holds the empty sum, 0.
pub fn caputo_left_l1_all(f: &SampledFunction, ord: Order) -> Vec<f64> {
    let grid = f.grid();
    let m = grid.m();
    let weights = l1_weights(ord, grid.h(), m);
    let mut out = Vec::with_capacity(m + 1);
    out.push(0.0);
    out.extend((1..=m).map(|i| l1_sum(f.values(), &weights, i)));
    out
}

/// Right Caputo derivative at node `i` (`0 <= i <= m-1`): the left L1 scheme
/// applied to `s ↦ f(a + b - s)` at the mirrored node `m - i`.
pub fn caputo_right_l1(f: &SampledFunction, ord: Order, i: usize) -> Result<f64> {
    let m = f.grid().m();
    check_index(i, 0, m - 1)?;
    caputo_left_l1(&f.reflected(), ord, m - i)
}

/// [`caputo_right_l1`] at every node. Index `m` holds the empty sum, 0.
pub fn caputo_right_l1_all(f: &SampledFunction, ord: Order) -> Vec<f64> {
    let mut out = caputo_left_l1_all(&f.reflected(), ord);
    out.reverse();
    out
}

/// Left Riemann-Liouville integral `ₐI^α f` at node `i` (`1 <= i <= m`).
///
/// Product-rectangle rule with left-node values: on each cell the kernel
/// `(x_i - s)^(α-1)` is integrated exactly, giving
/// `1/Γ(α+1) Σ_k f_k h^α ((i-k)^α - (i-k-1)^α)`. First-order accurate, and
/// the endpoint singularity never gets sampled.
pub fn rl_integral_num(f: &SampledFunction, ord: Order, i: usize) -> Result<f64> {
    let grid = f.grid();
    check_index(i, 1, grid.m())?;
    let alpha = ord.alpha();
    let scale = grid.h().powf(alpha) / gamma(alpha + 1.0)?;
    let sum: f64 = f.values()[..i]
        .iter()
        .enumerate()
        .map(|(k, v)| v * power_increment(i - k - 1, alpha))
        .sum();
    Ok(scale * sum)
}

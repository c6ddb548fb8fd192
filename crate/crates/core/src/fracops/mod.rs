//! Fractional integrals and derivatives of order `0 < α <= 1`.
//!
//! Two families live here: closed-form power and constant rules
//! ([`caputo_left_power`], [`rl_right_power`], ...) and grid schemes on
//! [`SampledFunction`]s (the L1 Caputo scheme and a product-rectangle
//! Riemann-Liouville integral).

mod analytic;
mod grid;
mod l1;
mod order;

pub use analytic::{caputo_left_power, caputo_of_constant, rl_left_of_constant, rl_right_power};
pub use grid::{Grid, SampledFunction};
pub use l1::{
    caputo_left_l1, caputo_left_l1_all, caputo_right_l1, caputo_right_l1_all, l1_weights,
    rl_integral_num,
};
pub use order::Order;

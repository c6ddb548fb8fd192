//! The worked variational problem
//!
//! ```text
//! minimize J(y) = ∫₀¹ (ᶜD^α y)² - 24 y dx,   y(0) = y(1) = 0,
//! ```
//!
//! its closed-form Euler-Lagrange solutions (classical, Caputo/Riemann-Liouville
//! and Caputo/Caputo), the discretized cost functional, residuals of both
//! Euler-Lagrange equations, and the convexity check that makes the
//! Caputo/Riemann-Liouville solution a minimizer.

mod convexity;
mod functional;
mod lagrangian;
mod residual;
mod solutions;

pub use convexity::{convexity_certificate, convexity_certificate_with};
pub use functional::{
    evaluate_functional, evaluate_functional_with, functional_of, FunctionalValue, Quadrature,
};
pub use lagrangian::{Lagrangian, QuadraticCost};
pub use residual::{
    el_residual_cc, el_residual_crl, el_residuals_cc, el_residuals_crl, inner_derivative, EL_RHS,
};
pub use solutions::{solve_cc, solve_classical, solve_crl, Method, SolutionSpec};

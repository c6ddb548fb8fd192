//! Fractional variational calculus toolkit.
//!
//! - [`specfun`]: Gamma, Mittag-Leffler and Gauss hypergeometric functions.
//! - [`fracops`]: fractional orders, uniform grids, closed-form operator
//!   rules and the L1 Caputo scheme.
//! - [`varsolve`]: closed-form Euler-Lagrange solutions of the quadratic
//!   example, the discretized cost functional and residual checks.
//! - [`reproduce`]: functional tables and curve data built from the above.
//!
//! ```
//! use fracvar::{functional_of, Method, Order, Quadrature, SeriesControl, SolutionSpec};
//!
//! let spec = SolutionSpec::new(Method::Cc, Order::new(0.7)?)?;
//! let value = functional_of(spec, 100, SeriesControl::default(), Quadrature::Trapezoid)?;
//! assert!((value.j - (-28.9016)).abs() < 1e-3);
//! # Ok::<(), fracvar::Error>(())
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fracops;
pub mod reproduce;
pub mod specfun;
pub mod varsolve;

pub use error::{Error, Result};
pub use fracops::{Grid, Order, SampledFunction};
pub use reproduce::{Cell, CurveSet, TableConfig, TableRow};
pub use specfun::SeriesControl;
pub use varsolve::{functional_of, FunctionalValue, Method, Quadrature, SolutionSpec};

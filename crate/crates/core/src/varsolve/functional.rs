use super::{Lagrangian, Method, QuadraticCost, SolutionSpec};
use crate::error::{Error, Result};
use crate::fracops::{caputo_left_l1_all, Grid, Order, SampledFunction};
use crate::specfun::SeriesControl;

/// Boundary values must vanish to this absolute tolerance.
pub const BOUNDARY_TOL: f64 = 1e-6;

/// Quadrature applied to the sampled integrand `L(x_i, y_i, D_i)`.
///
/// The L1 derivative at node 0 is the empty sum, 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Quadrature {
    /// Composite trapezoid over nodes `0..=m`.
    #[default]
    Trapezoid,
    /// Right-endpoint Riemann sum `h Σ_{i=1}^{m}`.
    RightEndpoint,
}

/// A discretized value of the cost functional.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalValue {
    pub j: f64,
    pub m: usize,
    pub method: Option<Method>,
}

/// `J(y) = ∫ (ᶜD^α y)² - 24 y` with the L1 derivative and the trapezoid rule.
pub fn evaluate_functional(y: &SampledFunction, ord: Order) -> Result<FunctionalValue> {
    evaluate_functional_with(y, ord, &QuadraticCost, Quadrature::default())
}

/// `J(y) = ∫ L(x, y, ᶜD^α y) dx` for any Lagrangian and quadrature.
///
/// Requires `m >= 2` and `y` vanishing at both ends (within
/// [`BOUNDARY_TOL`]).
pub fn evaluate_functional_with(
    y: &SampledFunction,
    ord: Order,
    lagrangian: &impl Lagrangian,
    rule: Quadrature,
) -> Result<FunctionalValue> {
    let grid = y.grid();
    let m = grid.m();
    if m < 2 {
        return Err(Error::GridTooCoarse { m });
    }
    let values = y.values();
    for (i, at) in [(0, grid.a()), (m, grid.b())] {
        if values[i].abs() > BOUNDARY_TOL {
            return Err(Error::BoundaryCondition {
                at,
                value: values[i],
            });
        }
    }
    let deriv = caputo_left_l1_all(y, ord);
    let integrand: Vec<f64> = (0..=m)
        .map(|i| lagrangian.value(grid.node(i), values[i], deriv[i]))
        .collect();
    let h = grid.h();
    let j = match rule {
        Quadrature::Trapezoid => {
            let interior: f64 = integrand[1..m].iter().sum();
            h * (interior + 0.5 * (integrand[0] + integrand[m]))
        }
        Quadrature::RightEndpoint => h * integrand[1..].iter().sum::<f64>(),
    };
    if !j.is_finite() {
        return Err(Error::Domain(format!("functional is not finite ({j})")));
    }
    Ok(FunctionalValue { j, m, method: None })
}

/// Sample a closed-form solution on `m` steps of `[0, 1]` and evaluate the
/// example's functional on it.
pub fn functional_of(
    spec: SolutionSpec,
    m: usize,
    ctl: SeriesControl,
    rule: Quadrature,
) -> Result<FunctionalValue> {
    if m < 2 {
        return Err(Error::GridTooCoarse { m });
    }
    let y = spec.sample(Grid::unit(m)?, ctl)?;
    let mut value = evaluate_functional_with(&y, spec.order(), &QuadraticCost, rule)?;
    value.method = Some(spec.kind());
    Ok(value)
}

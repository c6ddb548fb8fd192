//! Shared inputs for the criterion benchmarks.

use fracvar::{Grid, Method, Order, SampledFunction, SeriesControl, SolutionSpec};

/// The C-C solution at `alpha` sampled on `m` steps of `[0, 1]`.
pub fn cc_samples(alpha: f64, m: usize) -> SampledFunction {
    let spec =
        SolutionSpec::new(Method::Cc, Order::new(alpha).expect("valid order")).expect("valid spec");
    spec.sample(Grid::unit(m).expect("valid grid"), SeriesControl::default())
        .expect("closed form evaluates")
}

/// `sin(3x)` on `m` steps of `[0, 1]`.
pub fn smooth_samples(m: usize) -> SampledFunction {
    SampledFunction::from_fn(Grid::unit(m).expect("valid grid"), |x| (3.0 * x).sin())
        .expect("finite")
}

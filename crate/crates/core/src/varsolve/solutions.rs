use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fracops::{Grid, Order, SampledFunction};
use crate::specfun::{gamma, hyp2f1, SeriesControl};

/// Which Euler-Lagrange route produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Integer-order problem, `y'' = -12`.
    Classical,
    /// Left Caputo inside, right Riemann-Liouville outside.
    Crl,
    /// Caputo on both levels.
    Cc,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Crl => "crl",
            Method::Cc => "cc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "classical" => Ok(Method::Classical),
            "crl" | "c-rl" => Ok(Method::Crl),
            "cc" | "c-c" => Ok(Method::Cc),
            other => Err(Error::Domain(format!("unknown method {other:?}"))),
        }
    }
}

/// A closed-form solution of the worked example at a given order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionSpec {
    kind: Method,
    ord: Order,
}

impl SolutionSpec {
    /// Validates the pairing: the C-RL solution exists only for `α > 1/2`,
    /// the classical one only at `α = 1`.
    pub fn new(kind: Method, ord: Order) -> Result<Self> {
        match kind {
            Method::Crl if ord.alpha() <= 0.5 => {
                Err(Error::SolutionDoesNotExist { alpha: ord.alpha() })
            }
            Method::Classical if !ord.is_integer() => Err(Error::Domain(format!(
                "the classical solution is the alpha = 1 case, got alpha = {}",
                ord.alpha()
            ))),
            _ => Ok(Self { kind, ord }),
        }
    }

    pub fn kind(&self) -> Method {
        self.kind
    }

    pub fn order(&self) -> Order {
        self.ord
    }

    pub fn eval(&self, x: f64, ctl: SeriesControl) -> Result<f64> {
        match self.kind {
            Method::Classical => solve_classical(x),
            Method::Crl => solve_crl(self.ord, x, ctl),
            Method::Cc => solve_cc(self.ord, x, ctl),
        }
    }

    pub fn sample(&self, grid: Grid, ctl: SeriesControl) -> Result<SampledFunction> {
        SampledFunction::try_from_fn(grid, |x| self.eval(x, ctl))
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "solutions are defined on [0, 1], got x = {x}"
        )))
    }
}

/// `y(x) = -6x² + 6x`.
pub fn solve_classical(x: f64) -> Result<f64> {
    check_unit(x)?;
    Ok(6.0 * x * (1.0 - x))
}

/// `12/Γ(1+α)² · x^α ₂F₁(1, -α; 1+α; x)`, the part shared by both
/// fractional solutions.
fn particular(ord: Order, x: f64, ctl: SeriesControl) -> Result<(f64, f64)> {
    let alpha = ord.alpha();
    let g = gamma(1.0 + alpha)?;
    let scale = 1.0 / (g * g);
    let xa = x.powf(alpha);
    let f = hyp2f1(1.0, -alpha, 1.0 + alpha, x, ctl)?;
    Ok((12.0 * scale * xa * f, scale * xa))
}

/// Solution of the Caputo/Riemann-Liouville Euler-Lagrange equation:
///
/// ```text
/// y(x) = 12/Γ(1+α)² x^α ₂F₁(1,-α;1+α;x)
///      -  6/Γ(1+α)² x^α ₂F₁(1,1-α;1+α;x) / ₂F₁(1,1-α;1+α;1)
/// ```
///
/// The normalizer `₂F₁(1,1-α;1+α;1)` is finite only for `α > 1/2`; below
/// that the boundary condition at 1 cannot be met and the solution does not
/// exist.
pub fn solve_crl(ord: Order, x: f64, ctl: SeriesControl) -> Result<f64> {
    let alpha = ord.alpha();
    if alpha <= 0.5 {
        return Err(Error::SolutionDoesNotExist { alpha });
    }
    check_unit(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let (first, scale_xa) = particular(ord, x, ctl)?;
    let norm = hyp2f1(1.0, 1.0 - alpha, 1.0 + alpha, 1.0, ctl)?;
    let homogeneous = hyp2f1(1.0, 1.0 - alpha, 1.0 + alpha, x, ctl)?;
    Ok(first - 6.0 * scale_xa * homogeneous / norm)
}

/// Solution of the Caputo/Caputo Euler-Lagrange equation:
///
/// ```text
/// y(x) = 12/Γ(1+α)² x^α ₂F₁(1,-α;1+α;x) - 6/Γ(1+α)² x^α
/// ```
///
/// Defined for every `0 < α <= 1`.
pub fn solve_cc(ord: Order, x: f64, ctl: SeriesControl) -> Result<f64> {
    check_unit(x)?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let (first, scale_xa) = particular(ord, x, ctl)?;
    Ok(first - 6.0 * scale_xa)
}

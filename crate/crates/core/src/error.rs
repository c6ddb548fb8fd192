use thiserror::Error;

/// Errors raised by the special functions, operators and solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma has a pole at {x}")]
    Pole { x: f64 },

    #[error("gamma({x}) overflows double precision")]
    Overflow { x: f64 },

    #[error("series did not reach tolerance within {terms} terms")]
    NonConvergence { terms: usize },

    #[error("2F1({a}, {b}; {c}; 1) diverges: c - a - b = {excess} <= 0")]
    Divergent { a: f64, b: f64, c: f64, excess: f64 },

    #[error("invalid series control: {0}")]
    InvalidControl(String),

    #[error("fractional order {0} outside (0, 1]")]
    InvalidOrder(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid samples: {0}")]
    InvalidSamples(String),

    #[error("node index {index} outside [{lo}, {hi}]")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("kernel is singular at x = {x}")]
    Singular { x: f64 },

    #[error("solution does not exist for alpha <= 0.5 (alpha = {alpha})")]
    SolutionDoesNotExist { alpha: f64 },

    #[error("boundary condition violated: y({at}) = {value}")]
    BoundaryCondition { at: f64, value: f64 },

    #[error("grid too coarse: m = {m}, need m >= 2")]
    GridTooCoarse { m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

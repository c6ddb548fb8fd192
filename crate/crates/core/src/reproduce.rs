//! Tabulated functional values and plot data for the worked example.

use std::fmt;

use crate::error::{Error, Result};
use crate::fracops::{Grid, Order};
use crate::specfun::SeriesControl;
use crate::varsolve::{functional_of, solve_classical, Method, Quadrature, SolutionSpec};

/// Orders of the benchmark table, in row order.
pub const TABLE_ALPHAS: [f64; 7] = [1.0, 0.95, 0.9, 0.8, 0.7, 0.55, 0.4];

/// Default grid sizes tried for each row.
pub const DEFAULT_SWEEP: [usize; 4] = [100, 200, 500, 1000];

/// Reference functional values `(α, J_CRL, J_CC)` for the benchmark rows.
/// `None` marks the order where the C-RL solution does not exist.
pub const REFERENCE_TABLE: [(f64, Option<f64>, f64); 7] = [
    (1.0, Some(-12.1752), -12.1752),
    (0.95, Some(-16.4431), -14.3133),
    (0.9, Some(-17.3685), -16.7006),
    (0.8, Some(-36.6555), -22.2567),
    (0.7, Some(-60.2608), -28.9016),
    (0.55, Some(-127.9983), -40.9804),
    (0.4, None, -55.5863),
];

/// Reference row for `alpha`, if it is one of the benchmark orders.
pub fn reference_row(alpha: f64) -> Option<(Option<f64>, f64)> {
    REFERENCE_TABLE
        .iter()
        .find(|(a, _, _)| (a - alpha).abs() < 1e-12)
        .map(|&(_, crl, cc)| (crl, cc))
}

/// A C-RL table entry: a value, or the marker for a non-existent solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Value(f64),
    NotExists,
}

impl Cell {
    pub const NOT_EXISTS: &'static str = "NOT_EXISTS";

    pub fn value(self) -> Option<f64> {
        match self {
            Cell::Value(v) => Some(v),
            Cell::NotExists => None,
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Value(v) => write!(f, "{v}"),
            Cell::NotExists => f.write_str(Self::NOT_EXISTS),
        }
    }
}

/// One row of the functional table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub alpha: f64,
    pub j_crl: Cell,
    pub j_cc: f64,
    /// Grid steps behind `j_cc`.
    pub m: usize,
    /// Grid steps behind `j_crl`, when it exists.
    pub m_crl: Option<usize>,
    /// First-order Richardson limits from the two largest sweep sizes.
    pub j_crl_limit: Cell,
    pub j_cc_limit: f64,
}

/// Evaluation settings for [`build_table`].
#[derive(Debug, Clone, PartialEq)]
pub struct TableConfig {
    pub alphas: Vec<f64>,
    pub sweep: Vec<usize>,
    pub ctl: SeriesControl,
    pub rule: Quadrature,
}

impl Default for TableConfig {
    fn default() -> Self {
        Self {
            alphas: TABLE_ALPHAS.to_vec(),
            sweep: DEFAULT_SWEEP.to_vec(),
            ctl: SeriesControl::default(),
            rule: Quadrature::default(),
        }
    }
}

fn richardson_first_order(coarse: (usize, f64), fine: (usize, f64)) -> f64 {
    let r = fine.0 as f64 / coarse.0 as f64;
    fine.1 + (fine.1 - coarse.1) / (r - 1.0)
}

/// Pick from `(m, J)` pairs (sorted by `m`) the one nearest `reference`, or
/// the finest grid when there is no reference.
fn select(values: &[(usize, f64)], reference: Option<f64>) -> (usize, f64) {
    match reference {
        Some(r) => *values
            .iter()
            .min_by(|a, b| (a.1 - r).abs().total_cmp(&(b.1 - r).abs()))
            .expect("sweep is non-empty"),
        None => *values.last().expect("sweep is non-empty"),
    }
}

fn limit(values: &[(usize, f64)]) -> f64 {
    match values {
        [.., coarse, fine] => richardson_first_order(*coarse, *fine),
        [only] => only.1,
        [] => unreachable!("sweep is non-empty"),
    }
}

/// Evaluate the functional on both fractional solutions for every order and
/// grid size. Each cell keeps the grid size whose value sits closest to the
/// reference table; orders without a reference row use the largest grid.
pub fn build_table(cfg: &TableConfig) -> Result<Vec<TableRow>> {
    if cfg.sweep.is_empty() {
        return Err(Error::Domain("grid sweep is empty".into()));
    }
    let mut sweep = cfg.sweep.clone();
    sweep.sort_unstable();
    sweep.dedup();

    cfg.alphas
        .iter()
        .map(|&alpha| {
            let ord = Order::new(alpha)?;
            let reference = reference_row(alpha);
            let sweep_of = |spec: SolutionSpec| {
                sweep
                    .iter()
                    .map(|&m| functional_of(spec, m, cfg.ctl, cfg.rule).map(|v| (m, v.j)))
                    .collect::<Result<Vec<_>>>()
            };

            let cc = sweep_of(SolutionSpec::new(Method::Cc, ord)?)?;
            let (m, j_cc) = select(&cc, reference.map(|r| r.1));

            let (j_crl, m_crl, j_crl_limit) = match SolutionSpec::new(Method::Crl, ord) {
                Ok(spec) => {
                    let crl = sweep_of(spec)?;
                    let (m_crl, j) = select(&crl, reference.and_then(|r| r.0));
                    (Cell::Value(j), Some(m_crl), Cell::Value(limit(&crl)))
                }
                Err(Error::SolutionDoesNotExist { .. }) => (Cell::NotExists, None, Cell::NotExists),
                Err(e) => return Err(e),
            };

            Ok(TableRow {
                alpha,
                j_crl,
                j_cc,
                m,
                m_crl,
                j_crl_limit,
                j_cc_limit: limit(&cc),
            })
        })
        .collect()
}

/// Columns of sampled curves on a common grid, first column `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSet {
    pub name: String,
    pub columns: Vec<String>,
    /// Row-major: `rows[i][j]` is column `j` at node `i`.
    pub rows: Vec<Vec<f64>>,
}

/// Default orders for the convergence-to-classical curves.
pub const CONVERGENCE_ALPHAS: [f64; 4] = [0.7, 0.8, 0.9, 1.0];
/// Default orders for the C-RL versus C-C comparison curves.
pub const COMPARISON_ALPHAS: [f64; 4] = [0.9, 0.8, 0.7, 0.55];
/// Order of the lone C-C curve below the C-RL existence threshold.
pub const LOW_ORDER_ALPHA: f64 = 0.4;

/// Sample `x`, the classical solution, and one column per `(method, α)`.
/// C-RL columns are skipped for `α <= 0.5`.
pub fn curve_set(
    name: &str,
    curves: &[(Method, f64)],
    m: usize,
    ctl: SeriesControl,
) -> Result<CurveSet> {
    let grid = Grid::unit(m)?;
    let mut columns = vec!["x".to_string(), "y_classical".to_string()];
    let mut data: Vec<Vec<f64>> = vec![grid.nodes().collect()];
    data.push(grid.nodes().map(solve_classical).collect::<Result<_>>()?);
    for &(method, alpha) in curves {
        let spec = match SolutionSpec::new(method, Order::new(alpha)?) {
            Ok(s) => s,
            Err(Error::SolutionDoesNotExist { .. }) => continue,
            Err(e) => return Err(e),
        };
        columns.push(format!("y_{}_{}", method, alpha));
        data.push(spec.sample(grid, ctl)?.into_values());
    }
    let rows = (0..=m)
        .map(|i| data.iter().map(|c| c[i]).collect())
        .collect();
    Ok(CurveSet {
        name: name.to_string(),
        columns,
        rows,
    })
}

fn both_methods(alphas: &[f64]) -> Vec<(Method, f64)> {
    let mut curves: Vec<_> = alphas.iter().map(|&a| (Method::Crl, a)).collect();
    curves.extend(alphas.iter().map(|&a| (Method::Cc, a)));
    curves
}

/// The three plot data sets: convergence of both fractional solutions to
/// the classical one, C-RL against C-C, and the C-C solution at `α = 0.4`.
/// `alphas` overrides the orders of the first two sets.
pub fn figure_data(alphas: Option<&[f64]>, m: usize, ctl: SeriesControl) -> Result<Vec<CurveSet>> {
    let convergence = alphas.unwrap_or(&CONVERGENCE_ALPHAS);
    let comparison = alphas.unwrap_or(&COMPARISON_ALPHAS);
    Ok(vec![
        curve_set("figure1_convergence", &both_methods(convergence), m, ctl)?,
        curve_set("figure2_comparison", &both_methods(comparison), m, ctl)?,
        curve_set(
            "figure3_cc_alpha_0.4",
            &[(Method::Cc, LOW_ORDER_ALPHA)],
            m,
            ctl,
        )?,
    ])
}

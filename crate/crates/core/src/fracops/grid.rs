use crate::error::{Error, Result};

/// Uniform partition `a = x_0 < x_1 < ... < x_m = b`, `h = (b - a)/m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    a: f64,
    b: f64,
    m: usize,
    h: f64,
}

impl Grid {
    pub fn new(a: f64, b: f64, m: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "non-finite endpoints [{a}, {b}]"
            )));
        }
        if !(b > a) {
            return Err(Error::InvalidGrid(format!("need b > a, got [{a}, {b}]")));
        }
        if m == 0 {
            return Err(Error::InvalidGrid("need m >= 1 steps".into()));
        }
        let h = (b - a) / m as f64;
        if !(h > 0.0) {
            return Err(Error::InvalidGrid(format!("step underflows for m = {m}")));
        }
        Ok(Self { a, b, m, h })
    }

    /// `m` steps on `[0, 1]`.
    pub fn unit(m: usize) -> Result<Self> {
        Self::new(0.0, 1.0, m)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// `x_i = a + i h`, with the last node pinned to `b`.
    ///
    /// # Panics
    ///
    /// If `i > m`.
    pub fn node(&self, i: usize) -> f64 {
        assert!(i <= self.m, "node index {i} > m = {}", self.m);
        if i == self.m {
            self.b
        } else {
            self.a + i as f64 * self.h
        }
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.m + 1).map(move |i| self.node(i))
    }
}

/// Values of a function on every node of a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    grid: Grid,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: Grid, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.m() + 1 {
            return Err(Error::InvalidSamples(format!(
                "expected {} values for m = {}, got {}",
                grid.m() + 1,
                grid.m(),
                values.len()
            )));
        }
        if let Some(i) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidSamples(format!(
                "value at node {i} is not finite ({})",
                values[i]
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(grid, grid.nodes().map(f).collect())
    }

    pub fn try_from_fn<E>(
        grid: Grid,
        f: impl Fn(f64) -> std::result::Result<f64, E>,
    ) -> std::result::Result<Self, E>
    where
        E: From<Error>,
    {
        let values = grid
            .nodes()
            .map(f)
            .collect::<std::result::Result<Vec<_>, E>>()?;
        Ok(Self::new(grid, values)?)
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize) -> f64 {
        self.values[i]
    }

    /// Samples of `s ↦ f(a + b - s)` on the same grid: node `i` of the
    /// result holds node `m - i` of `self`.
    pub fn reflected(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Self {
            grid: self.grid,
            values,
        }
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }
}

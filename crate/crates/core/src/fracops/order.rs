use std::fmt;

use crate::error::{Error, Result};

/// Fractional order `α` restricted to `(0, 1]`, so `⌈α⌉ = 1` throughout.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Order(f64);

impl Order {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha <= 1.0 {
            Ok(Self(alpha))
        } else {
            Err(Error::InvalidOrder(alpha))
        }
    }

    /// The classical first derivative.
    pub const ONE: Order = Order(1.0);

    #[inline]
    pub fn alpha(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn is_integer(self) -> bool {
        self.0 == 1.0
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<f64> for Order {
    type Error = Error;

    fn try_from(alpha: f64) -> Result<Self> {
        Self::new(alpha)
    }
}

/// A Lagrangian `L(x, y, u)` where `u` stands for `ᶜD^α y`, with its partial
/// derivatives in `y` and `u`.
pub trait Lagrangian {
    fn value(&self, x: f64, y: f64, u: f64) -> f64;
    fn d_y(&self, x: f64, y: f64, u: f64) -> f64;
    fn d_u(&self, x: f64, y: f64, u: f64) -> f64;
}

/// `L(x, y, u) = u² - 24 y`.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct QuadraticCost;

impl Lagrangian for QuadraticCost {
    #[inline]
    fn value(&self, _x: f64, y: f64, u: f64) -> f64 {
        u * u - 24.0 * y
    }

    #[inline]
    fn d_y(&self, _x: f64, _y: f64, _u: f64) -> f64 {
        -24.0
    }

    #[inline]
    fn d_u(&self, _x: f64, _y: f64, u: f64) -> f64 {
        2.0 * u
    }
}

impl<L: Lagrangian + ?Sized> Lagrangian for &L {
    fn value(&self, x: f64, y: f64, u: f64) -> f64 {
        (**self).value(x, y, u)
    }

    fn d_y(&self, x: f64, y: f64, u: f64) -> f64 {
        (**self).d_y(x, y, u)
    }

    fn d_u(&self, x: f64, y: f64, u: f64) -> f64 {
        (**self).d_u(x, y, u)
    }
}

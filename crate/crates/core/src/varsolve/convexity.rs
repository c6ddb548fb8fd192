use super::{Lagrangian, QuadraticCost};

/// Checks `L(y+y₁, u+u₁) - L(y, u) >= L_y y₁ + L_u u₁` for the example
/// Lagrangian on every `(y, u, y₁, u₁)` sample.
///
/// For `u² - 24y` the gap is exactly `u₁²`, so every finite sample passes.
pub fn convexity_certificate(samples: &[[f64; 4]]) -> bool {
    convexity_certificate_with(&QuadraticCost, 0.0, samples)
}

/// The subgradient inequality for any Lagrangian at a fixed `x`.
///
/// Both sides are compared with a rounding allowance of a few ulps of the
/// largest term involved.
pub fn convexity_certificate_with(l: &impl Lagrangian, x: f64, samples: &[[f64; 4]]) -> bool {
    samples.iter().all(|&[y, u, y1, u1]| {
        let before = l.value(x, y, u);
        let after = l.value(x, y + y1, u + u1);
        let dy = l.d_y(x, y, u) * y1;
        let du = l.d_u(x, y, u) * u1;
        let scale = before.abs().max(after.abs()).max(dy.abs()).max(du.abs());
        after - before >= dy + du - 8.0 * f64::EPSILON * scale
    })
}

use std::f64::consts::PI;

use super::is_non_positive_integer;
use crate::error::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

fn lanczos_sum(z: f64) -> f64 {
    LANCZOS_COEF[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS_COEF[0], |acc, (i, c)| {
            acc + c / (z + (i + 1) as f64)
        })
}

/// Gamma function for real arguments.
///
/// Uses the Lanczos approximation for `x >= 0.5` and the reflection formula
/// below that, so negative non-integer arguments such as `Γ(-α)` are
/// available. Positive integers up to 171 return the exact factorial.
/// Non-positive integers are poles.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("gamma of non-finite argument {x}")));
    }
    if is_non_positive_integer(x) {
        return Err(Error::Pole { x });
    }
    if x == x.floor() && x <= 171.0 {
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    let value = if x < 0.5 {
        let s = (PI * x).sin();
        // 1/Γ(1-x) keeps the reflection finite when Γ(1-x) overflows.
        let r = recip_gamma(1.0 - x);
        if r == 0.0 {
            return Err(Error::Overflow { x });
        }
        PI / s * r
    } else {
        let z = x - 1.0;
        let t = z + LANCZOS_G + 0.5;
        // Split the power so t^(z+0.5) does not overflow before e^-t pulls it back.
        let half = t.powf(0.5 * (z + 0.5));
        SQRT_TWO_PI * half * (half * (-t).exp()) * lanczos_sum(z)
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow { x })
    }
}

/// `1/Γ(x)`, which is entire: returns exactly 0 at the poles and underflows
/// to 0 for large positive `x` instead of erroring.
pub fn recip_gamma(x: f64) -> f64 {
    if is_non_positive_integer(x) {
        return 0.0;
    }
    if x > 171.7 {
        return 0.0;
    }
    match gamma(x) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Γ(x)Γ(1-x) = π / sin(πx), all factors positive on (0, 0.5).
        return Ok((PI / (PI * x).sin()).ln() - ln_gamma(1.0 - x)?);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    Ok(SQRT_TWO_PI.ln() + (z + 0.5) * t.ln() - t + lanczos_sum(z).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// ∫₀^∞ s^(x-1) e^(-s) ds for x = 1/2, rewritten with s = t² as
    /// 2∫₀^∞ e^(-t²) dt and integrated by adaptive Simpson on [0, 12].
    fn gamma_half_by_quadrature() -> f64 {
        fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64) -> f64 {
            let c = 0.5 * (a + b);
            (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b))
        }
        fn adapt(f: &dyn Fn(f64) -> f64, a: f64, b: f64, whole: f64, eps: f64, depth: u32) -> f64 {
            let c = 0.5 * (a + b);
            let left = simpson(f, a, c);
            let right = simpson(f, c, b);
            if depth == 0 || (left + right - whole).abs() <= 15.0 * eps {
                return left + right + (left + right - whole) / 15.0;
            }
            adapt(f, a, c, left, eps / 2.0, depth - 1) + adapt(f, c, b, right, eps / 2.0, depth - 1)
        }
        let f = |t: f64| 2.0 * (-t * t).exp();
        adapt(&f, 0.0, 12.0, simpson(&f, 0.0, 12.0), 1e-14, 40)
    }

    #[test]
    fn factorial_values() {
        assert_relative_eq!(gamma(1.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(5.0).unwrap(), 24.0, max_relative = 1e-14);
        assert_relative_eq!(gamma(11.0).unwrap(), 3_628_800.0, max_relative = 1e-13);
    }

    #[test]
    fn half_against_quadrature() {
        let oracle = gamma_half_by_quadrature();
        assert_relative_eq!(oracle, 1.772_453_850_90, max_relative = 1e-11);
        assert_relative_eq!(gamma(0.5).unwrap(), oracle, max_relative = 1e-12);
    }

    #[test]
    fn reflection_negative_arguments() {
        // Γ(-1/2) = -2√π
        let g = gamma(-0.5).unwrap();
        assert_relative_eq!(g, -2.0 * PI.sqrt(), max_relative = 1e-13);
        // Γ(n-α)/Γ(-α) = (-α)(1-α)...(n-1-α)
        let alpha = 0.3;
        let ratio = gamma(3.0 - alpha).unwrap() / gamma(-alpha).unwrap();
        let product = (-alpha) * (1.0 - alpha) * (2.0 - alpha);
        assert_relative_eq!(ratio, product, max_relative = 1e-13);
    }

    #[test]
    fn recurrence_sweep() {
        let mut x = 0.1;
        while x < 10.0 {
            let lhs = gamma(x + 1.0).unwrap();
            let rhs = x * gamma(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            x += 0.037;
        }
    }

    #[test]
    fn poles_and_overflow() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert_eq!(gamma(x), Err(Error::Pole { x }));
            assert_eq!(recip_gamma(x), 0.0);
        }
        assert!(matches!(gamma(172.0), Err(Error::Overflow { .. })));
        assert!(gamma(171.5).unwrap().is_finite());
        assert!(gamma(f64::NAN).is_err());
    }

    #[test]
    fn ln_gamma_matches_gamma() {
        for x in [0.05, 0.3, 0.5, 1.0, 2.5, 7.25, 30.0, 150.0] {
            assert_relative_eq!(
                ln_gamma(x).unwrap(),
                gamma(x).unwrap().ln(),
                max_relative = 1e-12,
                epsilon = 1e-14
            );
        }
        assert_relative_eq!(
            ln_gamma(1000.0).unwrap(),
            5_905.220_423_209_181,
            max_relative = 1e-13
        );
        assert!(ln_gamma(0.0).is_err());
        assert!(ln_gamma(-1.5).is_err());
    }
}

use super::{gamma, is_non_positive_integer, recip_gamma, SeriesControl};
use crate::error::{Error, Result};

/// Gauss hypergeometric function `₂F₁(a, b; c; x)` on `0 <= x <= 1`.
///
/// For `x < 1` the power series is summed with the term recurrence
/// `t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)) x`, which never evaluates Gamma.
/// If `a` or `b` is a non-positive integer the series is a polynomial and is
/// summed to its last term regardless of the tolerance.
///
/// At `x = 1` the series converges only when `c - a - b > 0`, and then so
/// slowly that summation is useless near the threshold; the value is taken
/// from Gauss's summation `Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b))`.
pub fn hyp2f1(a: f64, b: f64, c: f64, x: f64, ctl: SeriesControl) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && c.is_finite()) {
        return Err(Error::Domain("hyp2f1 parameters must be finite".into()));
    }
    if is_non_positive_integer(c) {
        return Err(Error::Domain(format!(
            "hyp2f1 requires c not in {{0, -1, ...}}, got {c}"
        )));
    }
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "hyp2f1 is restricted to x in [0, 1], got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(1.0);
    }

    let degree = terminating_degree(a)
        .into_iter()
        .chain(terminating_degree(b))
        .min();
    if let Some(degree) = degree {
        return Ok(polynomial(a, b, c, x, degree));
    }

    if x == 1.0 {
        let excess = c - a - b;
        if excess <= 0.0 {
            return Err(Error::Divergent { a, b, c, excess });
        }
        return Ok(gamma(c)? * gamma(excess)? * recip_gamma(c - a) * recip_gamma(c - b));
    }

    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..ctl.max_terms() {
        let k = n as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
        if term.abs() < ctl.tol() * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        terms: ctl.max_terms(),
    })
}

fn terminating_degree(p: f64) -> Option<usize> {
    is_non_positive_integer(p).then(|| (-p) as usize)
}

fn polynomial(a: f64, b: f64, c: f64, x: f64, degree: usize) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for n in 0..degree {
        let k = n as f64;
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        sum += term;
    }
    sum
}

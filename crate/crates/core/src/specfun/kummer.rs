use crate::error::{Error, Result};

use super::{is_nonpositive_integer, SeriesResult, SERIES_BUDGET, SERIES_TOL};

/// Confluent hypergeometric function Φ(a; b; z) = ₁F₁(a; b; z).
///
/// Negative arguments go through Kummer's transformation so that the summed
/// series never alternates.
pub fn kummer_phi(a: f64, b: f64, z: f64) -> Result<SeriesResult> {
    if is_nonpositive_integer(b) {
        return Err(Error::Parameter(format!("Kummer function with b = {b}")));
    }
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::Parameter("non-finite Kummer argument".into()));
    }
    if z < 0.0 && !is_nonpositive_integer(a) {
        let inner = series(b - a, b, -z)?;
        let f = z.exp();
        return Ok(inner.scaled(f, 2.0 * f64::EPSILON * (1.0 + z.abs())));
    }
    series(a, b, z)
}

fn series(a: f64, b: f64, z: f64) -> Result<SeriesResult> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for k in 0..SERIES_BUDGET {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        abs_sum += term.abs();
        let rounding = 2.0 * f64::EPSILON * abs_sum;
        if term == 0.0 {
            return Ok(SeriesResult { value: sum, abs_err_est: rounding, terms_used: k + 1, converged: true });
        }
        let r = ((a + kf + 1.0) / (b + kf + 1.0) * z / (kf + 2.0)).abs();
        if r < 0.9 {
            let tail = term.abs() * r / (1.0 - r);
            if tail <= SERIES_TOL * sum.abs() {
                return Ok(SeriesResult {
                    value: sum,
                    abs_err_est: tail + rounding,
                    terms_used: k + 1,
                    converged: true,
                });
            }
        }
    }
    Err(Error::SeriesBudget { what: "Kummer series", terms: SERIES_BUDGET })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_value() {
        // Φ(-0.25; 0.5; 2) = -0.867199069699326383409683463771
        let r = kummer_phi(-0.25, 0.5, 2.0).unwrap();
        assert!(r.converged);
        assert!((r.value - KUMMER_REF).abs() <= 1e-14 * KUMMER_REF.abs());
    }

    const KUMMER_REF: f64 = -0.867_199_069_699_326_4;

    #[test]
    fn elementary_cases() {
        // Φ(a; a; z) = e^z
        let r = kummer_phi(1.3, 1.3, 2.5).unwrap();
        assert!((r.value - 2.5f64.exp()).abs() < 1e-14 * r.value);
        let r = kummer_phi(1.3, 1.3, -2.5).unwrap();
        assert!((r.value - (-2.5f64).exp()).abs() < 1e-14 * r.value);
        // terminating: Φ(-2; 1; z) = 1 - 2z + z^2/2
        let r = kummer_phi(-2.0, 1.0, 3.0).unwrap();
        assert!((r.value - (1.0 - 6.0 + 4.5)).abs() < 1e-14);
        assert!(kummer_phi(1.0, -1.0, 1.0).is_err());
    }
}

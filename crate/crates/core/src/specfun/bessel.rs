use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};

use crate::dd::{self, Dd};

use super::gamma::{rgamma, sin_pi};
use super::{SERIES_BUDGET, SERIES_TOL};

fn series_i(order: f64, z: f64) -> Result<f64> {
    let h = 0.5 * z;
    let h2 = h * h;
    let mut term = h.powf(order) * rgamma(order + 1.0);
    let mut sum = term;
    if term == 0.0 {
        // negative integer order: I_{-n} = I_n
        return series_i(-order, z);
    }
    for k in 0..SERIES_BUDGET {
        let kf = k as f64;
        term *= h2 / ((kf + 1.0) * (order + kf + 1.0));
        sum += term;
        if term.abs() <= SERIES_TOL * sum.abs() && kf + 1.0 > h {
            return Ok(sum);
        }
    }
    Err(Error::SeriesBudget { what: "Bessel I series", terms: SERIES_BUDGET })
}

/// The same series in double-double, for the cancelling difference in K.
fn series_i_dd(order: f64, z: f64) -> Result<Dd> {
    let h = Dd::new(z) * 0.5;
    let h2 = h.sqr();
    let mut term = h.powd(Dd::new(order)) * dd::rgamma(Dd::new(order) + 1.0);
    let mut sum = term;
    for k in 0..SERIES_BUDGET {
        let kf = k as f64;
        term = term * h2 / ((Dd::new(order) + (kf + 1.0)) * (kf + 1.0));
        sum = sum + term;
        if term.hi.abs() <= 1e-33 * sum.hi.abs() && kf + 1.0 > h.hi {
            return Ok(sum);
        }
    }
    Err(Error::SeriesBudget { what: "Bessel I series", terms: SERIES_BUDGET })
}

/// Modified Bessel function I_ν(z), z > 0, ν > -1.
pub fn bessel_i(order: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("Bessel I at z = {z}")));
    }
    if !(order > -1.0) {
        return Err(Error::Parameter(format!("Bessel I order {order} must exceed -1")));
    }
    series_i(order, z)
}

/// Modified Bessel function K_ν(z) for non-integer ν, z > 0, from
/// K_ν = (π/2)(I_{-ν} - I_ν)/sin(νπ). The difference is formed in
/// double-double, which absorbs the e^{2z} cancellation for z up to about 15.
pub fn bessel_k(order: f64, z: f64) -> Result<f64> {
    if !(z > 0.0) {
        return Err(Error::Domain(format!("Bessel K at z = {z}")));
    }
    if order == order.round() {
        return Err(Error::Parameter(format!("Bessel K connection formula needs non-integer order, got {order}")));
    }
    Ok(FRAC_PI_2 * (series_i_dd(-order, z)? - series_i_dd(order, z)?).to_f64() / sin_pi(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn half_order_closed_forms() {
        // I_{1/2}(z) = sqrt(2/(πz)) sinh z, K_{1/2}(z) = sqrt(π/(2z)) e^{-z}
        for &z in &[0.3, 1.0, 4.0] {
            let i = bessel_i(0.5, z).unwrap();
            assert!((i - (2.0 / (PI * z)).sqrt() * z.sinh()).abs() < 1e-14 * i);
            let k = bessel_k(0.5, z).unwrap();
            assert!((k - (PI / (2.0 * z)).sqrt() * (-z).exp()).abs() < 1e-14 * k);
        }
    }

    #[test]
    fn errors() {
        assert!(bessel_i(0.25, 0.0).is_err());
        assert!(bessel_i(-1.5, 1.0).is_err());
        assert!(bessel_k(1.0, 1.0).is_err());
    }
}

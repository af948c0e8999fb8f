use crate::error::{Error, Result};

use super::beta::IncompleteBeta;
use super::gamma::rgamma;
use super::hyp2f1::Gauss2F1;
use super::is_nonpositive_integer;

/// Ferrers function of the first kind P^μ_ν(x) with fixed degree and order,
///
/// P^μ_ν(x) = ((1+x)/(1-x))^{μ/2} F(-ν, ν+1; 1-μ; (1-x)/2) / Γ(1-μ).
#[derive(Debug)]
pub struct Ferrers {
    order: f64,
    rg: f64,
    hyp: Gauss2F1,
}

impl Ferrers {
    pub fn new(degree: f64, order: f64) -> Result<Ferrers> {
        if is_nonpositive_integer(1.0 - order) {
            return Err(Error::Parameter(format!("Ferrers function with 1 - order = {} a gamma pole", 1.0 - order)));
        }
        Ok(Ferrers { order, rg: rgamma(1.0 - order), hyp: Gauss2F1::new(-degree, degree + 1.0, 1.0 - order)? })
    }

    /// The factor F(...)/Γ(1-μ) alone, given 1 - x and 1 + x.
    ///
    /// Callers merge ((1+x)/(1-x))^{μ/2} with their own powers. Values with
    /// 1 - x < 0 give the real continuation through z = (1-x)/2 < 0.
    pub fn hyp_part(&self, one_minus_x: f64, one_plus_x: f64) -> Result<f64> {
        Ok(self.rg * self.hyp.eval(0.5 * one_minus_x, 0.5 * one_plus_x)?.value)
    }

    pub fn eval_with(&self, one_minus_x: f64, one_plus_x: f64) -> Result<f64> {
        let ratio = one_plus_x / one_minus_x;
        Ok(ratio.powf(0.5 * self.order) * self.hyp_part(one_minus_x, one_plus_x)?)
    }

    pub fn order(&self) -> f64 {
        self.order
    }
}

/// P^{order}_{degree}(x) for -1 < x < 1.
pub fn legendre_p(degree: f64, order: f64, x: f64) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::Domain(format!("Ferrers function at x = {x}")));
    }
    Ferrers::new(degree, order)?.eval_with(1.0 - x, 1.0 + x)
}

/// P^ν_ν(x) for ν < 0 through the incomplete-beta reduction
/// P^ν_ν(x) = -(ν 2^{-ν} / Γ(1-ν)) (1-x²)^{ν/2} B((1-x)/2; -ν, -ν).
pub fn legendre_p_equal(nu: f64, x: f64) -> Result<f64> {
    if nu >= 0.0 {
        return Err(Error::Parameter(format!("equal degree and order requires nu < 0, got {nu}")));
    }
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::Domain(format!("Ferrers function at x = {x}")));
    }
    let beta = IncompleteBeta::new(-nu, -nu)?.eval(0.5 * (1.0 - x), 0.5 * (1.0 + x))?;
    let pre = -nu * 2f64.powf(-nu) * rgamma(1.0 - nu);
    Ok(pre * ((1.0 - x) * (1.0 + x)).powf(0.5 * nu) * beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_degree_cases() {
        // P^0_1(x) = x, P^0_2(x) = (3x^2 - 1)/2
        assert!((legendre_p(1.0, 0.0, 0.3).unwrap() - 0.3).abs() < 1e-15);
        assert!((legendre_p(2.0, 0.0, -0.6).unwrap() - 0.5 * (3.0 * 0.36 - 1.0)).abs() < 1e-15);
        // equal degree and order: the hypergeometric and beta routes agree
        let a = legendre_p(-0.5, -0.5, 0.2).unwrap();
        let b = legendre_p_equal(-0.5, 0.2).unwrap();
        assert!((a - b).abs() < 1e-14 * a.abs());
    }

    #[test]
    fn errors() {
        assert!(legendre_p(0.5, 1.0, 0.2).is_err());
        assert!(legendre_p(0.5, 0.3, 1.0).is_err());
        assert!(legendre_p_equal(0.5, 0.2).is_err());
    }
}

//! Closed-form reductions of ₂F₁ to Ferrers, incomplete beta and elementary
//! functions. They give independent evaluation routes for testing and are
//! used where a representation is written in those terms.

use crate::error::{Error, Result};

use super::beta::IncompleteBeta;
use super::gamma::{gamma, rgamma};
use super::legendre::Ferrers;

/// F(a, b; a+b+1/2; x) = 2^{a+b-1/2} Γ(a+b+1/2) x^{(1-2a-2b)/4} P^{1/2-a-b}_{a-b-1/2}(√(1-x)), 0 < x < 1.
pub fn quadratic_via_ferrers(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("quadratic reduction at x = {x}")));
    }
    let r = (1.0 - x).sqrt();
    let p = Ferrers::new(a - b - 0.5, 0.5 - a - b)?.eval_with(1.0 - r, 1.0 + r)?;
    Ok(2f64.powf(a + b - 0.5) * gamma(a + b + 0.5)? * x.powf((1.0 - 2.0 * a - 2.0 * b) / 4.0) * p)
}

/// F(a, b; b+1; z) = b z^{-b} B(z; b, 1-a), 0 < z <= 1, b > 0.
pub fn b_plus_one_via_beta(a: f64, b: f64, z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 1.0) {
        return Err(Error::Domain(format!("beta reduction at z = {z}")));
    }
    Ok(b * z.powf(-b) * IncompleteBeta::new(b, 1.0 - a)?.eval(z, 1.0 - z)?)
}

/// F(a, b; 3/2; x) through the difference of Ferrers functions at ±√x, 0 < x < 1.
pub fn three_halves_via_ferrers(a: f64, b: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("Ferrers reduction at x = {x}")));
    }
    let r = x.sqrt();
    let f = Ferrers::new(a - b - 0.5, 1.5 - a - b)?;
    let diff = f.eval_with(1.0 - r, 1.0 + r)? - f.eval_with(1.0 + r, 1.0 - r)?;
    let pre = -std::f64::consts::PI.sqrt().recip() * 2f64.powf(a + b - 3.5) * gamma(a - 0.5)? * gamma(b - 0.5)?;
    Ok(pre / r * (1.0 - x).powf((3.0 - 2.0 * a - 2.0 * b) / 4.0) * diff)
}

/// F(1, b; 3/2; x) = 2^{2b-3} x^{-1/2} (1-x)^{(1-2b)/2} [B((1+√x)/2; b-1/2, b-1/2) - B((1-√x)/2; b-1/2, b-1/2)],
/// for b > 1/2 and 0 < x < 1.
pub fn one_three_halves_via_beta(b: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::Domain(format!("beta reduction at x = {x}")));
    }
    let r = x.sqrt();
    let beta = IncompleteBeta::new(b - 0.5, b - 0.5)?;
    let hi = beta.eval(0.5 * (1.0 + r), 0.5 * (1.0 - r))?;
    let lo = beta.eval(0.5 * (1.0 - r), 0.5 * (1.0 + r))?;
    Ok(2f64.powf(2.0 * b - 3.0) / r * (1.0 - x).powf(0.5 - b) * (hi - lo))
}

/// F(1/2, 1/2; 3/2; z²) = arcsin(z)/z.
pub fn arcsin_form(z: f64) -> f64 {
    if z == 0.0 { 1.0 } else { z.asin() / z }
}

/// Beta function B(a, b).
pub fn beta(a: f64, b: f64) -> Result<f64> {
    Ok(gamma(a)? * gamma(b)? * rgamma(a + b))
}

use crate::error::{Error, Result};

use super::hyp2f1::Gauss2F1;

/// Incomplete beta function B(z; a, b) with fixed parameters.
///
/// Evaluated as (z^a / a) F(a, 1 - b; a + 1; z), so the plan works for any
/// b and, through [`IncompleteBeta::scaled`], for z < 0 as well.
#[derive(Debug)]
pub struct IncompleteBeta {
    a: f64,
    hyp: Gauss2F1,
}

impl IncompleteBeta {
    pub fn new(a: f64, b: f64) -> Result<IncompleteBeta> {
        Ok(IncompleteBeta { a, hyp: Gauss2F1::new(a, 1.0 - b, a + 1.0)? })
    }

    /// B(z; a, b) for 0 <= z <= 1 with `w = 1 - z`.
    pub fn eval(&self, z: f64, w: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&z) {
            return Err(Error::Domain(format!("incomplete beta at z = {z}")));
        }
        if self.a <= 0.0 {
            return Err(Error::Parameter(format!("incomplete beta with a = {}", self.a)));
        }
        if z == 0.0 {
            return Ok(0.0);
        }
        Ok(z.powf(self.a) / self.a * self.hyp.eval(z, w)?.value)
    }

    /// a z^{-a} B(z; a, b) = F(a, 1 - b; a + 1; z), defined for all z <= 1.
    pub fn scaled(&self, z: f64, w: f64) -> Result<f64> {
        Ok(self.hyp.eval(z, w)?.value)
    }
}

/// Incomplete beta function B(z; a, b), 0 <= z <= 1, a > 0.
pub fn incomplete_beta(z: f64, a: f64, b: f64) -> Result<f64> {
    incomplete_beta_with(z, 1.0 - z, a, b)
}

/// [`incomplete_beta`] with `one_minus_z` supplied exactly.
pub fn incomplete_beta_with(z: f64, one_minus_z: f64, a: f64, b: f64) -> Result<f64> {
    IncompleteBeta::new(a, b)?.eval(z, one_minus_z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;

    #[test]
    fn complete_and_elementary() {
        let (a, b) = (0.7, 1.3);
        let full = gamma(a).unwrap() * gamma(b).unwrap() / gamma(a + b).unwrap();
        assert!((incomplete_beta(1.0, a, b).unwrap() - full).abs() < 1e-14 * full);
        // B(z; a, 1) = z^a / a
        assert!((incomplete_beta(0.3, 2.5, 1.0).unwrap() - 0.3f64.powf(2.5) / 2.5).abs() < 1e-16);
        // B(z; 1, b) = (1 - (1-z)^b) / b
        let v = incomplete_beta(0.8, 1.0, 0.4).unwrap();
        assert!((v - (1.0 - 0.2f64.powf(0.4)) / 0.4).abs() < 1e-14);
    }

    #[test]
    fn symmetry_relation() {
        // B(z; a, b) + B(1 - z; b, a) = B(a, b)
        let (a, b, z) = (0.45, 0.45, 0.9);
        let full = incomplete_beta(1.0, a, b).unwrap();
        let s = incomplete_beta(z, a, b).unwrap() + incomplete_beta(1.0 - z, b, a).unwrap();
        assert!((s - full).abs() < 1e-14 * full);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(incomplete_beta(1.2, 0.5, 0.5).is_err());
        assert!(incomplete_beta(0.5, -0.5, 0.5).is_err());
        assert!(incomplete_beta(1.0, 0.5, -0.5).is_err());
    }
}

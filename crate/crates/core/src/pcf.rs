//! Parabolic cylinder function D_ν(z) from its Kummer-series form
//!
//! D_ν(z) = 2^{ν/2} e^{-z²/4} [ √π/Γ((1-ν)/2) Φ(-ν/2; 1/2; z²/2)
//!                              - √(2π) z/Γ(-ν/2) Φ((1-ν)/2; 3/2; z²/2) ].
//!
//! For z > 0 the two bracketed terms nearly cancel (their size grows like
//! e^{z²/2} while D_ν decays), so both series, the gamma factors and the final
//! sum are carried in double-double arithmetic.

use serde::Serialize;

use crate::dd::{self, Dd};
use crate::error::{Error, Result};
use crate::specfun::{kummer_phi, rgamma};

/// Largest |ν| accepted.
pub const NU_ENVELOPE: f64 = 10.0;
/// Largest |z| accepted; beyond it the Kummer series need more than the
/// 500-term budget and the cancellation exhausts double-double precision.
pub const Z_ENVELOPE: f64 = 20.0;

/// Fewest correct significant digits [`pcf_d`] will return.
pub const MIN_DIGITS: i32 = 8;

const DD_BUDGET: usize = 500;

/// D_ν(z) rounded to working precision.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PcfValue {
    pub value: f64,
    pub abs_err_est: f64,
}

/// D_ν(z) in double-double with a rigorous-style absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedPcf {
    pub value: Dd,
    pub abs_err: f64,
    /// (|T1| + |T2|) / |T1 + T2|, the cancellation factor of the bracket.
    pub cancellation: f64,
}

fn check_envelope(nu: f64, z: f64) -> Result<()> {
    if !(nu.is_finite() && z.is_finite()) {
        return Err(Error::Parameter("non-finite argument".into()));
    }
    if nu.abs() > NU_ENVELOPE || z.abs() > Z_ENVELOPE {
        return Err(Error::Range(format!(
            "D_nu(z) needs |nu| <= {NU_ENVELOPE} and |z| <= {Z_ENVELOPE}, got nu = {nu}, z = {z}"
        )));
    }
    Ok(())
}

/// D_ν(z) with every step in double-double arithmetic.
pub fn pcf_d_extended(nu: f64, z: f64) -> Result<ExtendedPcf> {
    check_envelope(nu, z)?;
    let nud = Dd::new(nu);
    let zd = Dd::new(z);
    let h = zd.sqr().scale(0.5);
    let a1 = (Dd::ONE - nud).scale(0.5);
    let a0 = (-nud).scale(0.5);

    let r1 = dd::rgamma(a1);
    let r2 = dd::rgamma(a0);
    let (mut t1, mut e1) = (Dd::ZERO, 0.0);
    if r1.hi != 0.0 {
        let (phi, err) = dd::kummer(a0, Dd::new(0.5), h, DD_BUDGET)?;
        let c = dd::SQRT_PI * r1;
        t1 = c * phi;
        e1 = c.hi.abs() * err + 8.0 * dd::EPS * t1.hi.abs();
    }
    let (mut t2, mut e2) = (Dd::ZERO, 0.0);
    if r2.hi != 0.0 {
        let (phi, err) = dd::kummer(a1, Dd::new(1.5), h, DD_BUDGET)?;
        let c = -(dd::SQRT2 * dd::SQRT_PI * zd * r2);
        t2 = c * phi;
        e2 = c.hi.abs() * err + 8.0 * dd::EPS * t2.hi.abs();
    }
    let bracket = t1 + t2;
    let pre = Dd::exp2(nud.scale(0.5)) * (-h.scale(0.5)).exp();
    let value = pre * bracket;
    let mag = t1.hi.abs() + t2.hi.abs();
    let cancellation = if bracket.hi == 0.0 { f64::INFINITY } else { mag / bracket.hi.abs() };
    let abs_err = pre.hi.abs() * (e1 + e2 + 4.0 * dd::EPS * mag) + 8.0 * dd::EPS * value.hi.abs();
    Ok(ExtendedPcf { value, abs_err, cancellation })
}

/// Parabolic cylinder function D_ν(z) for |ν| <= 10, |z| <= 20.
///
/// Fails with a range error when the cancellation for large positive z
/// leaves fewer than [`MIN_DIGITS`] correct digits (about z > 12).
pub fn pcf_d(nu: f64, z: f64) -> Result<PcfValue> {
    let e = pcf_d_extended(nu, z)?;
    if !(e.abs_err <= 10f64.powi(-MIN_DIGITS) * e.value.hi.abs()) {
        return Err(Error::Range(format!(
            "D_nu(z) at nu = {nu}, z = {z}: cancellation leaves fewer than {MIN_DIGITS} digits"
        )));
    }
    let value = e.value.to_f64();
    Ok(PcfValue { value, abs_err_est: e.abs_err + 0.5 * f64::EPSILON * value.abs() })
}

/// Relative residuals of the sum and difference identities
///
/// D_ν(-z) + D_ν(z) = 2^{(ν+2)/2} √π/Γ((1-ν)/2) e^{-z²/4} Φ(-ν/2; 1/2; z²/2),
/// D_ν(-z) - D_ν(z) = z 2^{(ν+3)/2} √π/Γ(-ν/2) e^{-z²/4} Φ((1-ν)/2; 3/2; z²/2),
///
/// each scaled by |D_ν(z)| + |D_ν(-z)|. The right-hand sides use the
/// working-precision Kummer function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumResiduals {
    pub sum: f64,
    pub difference: f64,
}

pub fn pcf_sum_residuals(nu: f64, z: f64) -> Result<SumResiduals> {
    let plus = pcf_d(nu, z)?.value;
    let minus = pcf_d(nu, -z)?.value;
    let scale = plus.abs() + minus.abs();
    let g = (-z * z / 4.0).exp() * std::f64::consts::PI.sqrt();
    let rhs_sum = 2f64.powf((nu + 2.0) / 2.0) * rgamma((1.0 - nu) / 2.0) * g * kummer_phi(-nu / 2.0, 0.5, z * z / 2.0)?.value;
    let rhs_diff = z * 2f64.powf((nu + 3.0) / 2.0) * rgamma(-nu / 2.0) * g * kummer_phi((1.0 - nu) / 2.0, 1.5, z * z / 2.0)?.value;
    Ok(SumResiduals {
        sum: ((minus + plus) - rhs_sum).abs() / scale,
        difference: ((minus - plus) - rhs_diff).abs() / scale,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_orders_are_hermite() {
        for &z in &[-3.0, -0.4, 0.0, 1.1, 4.5] {
            let g = (-z * z / 4.0f64).exp();
            assert!((pcf_d(0.0, z).unwrap().value - g).abs() <= 1e-15 * g);
            assert!((pcf_d(1.0, z).unwrap().value - z * g).abs() <= 1e-15 * (z * g).abs().max(1e-300));
            let d2 = (z * z - 1.0) * g;
            assert!((pcf_d(2.0, z).unwrap().value - d2).abs() <= 1e-14 * g);
        }
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(matches!(pcf_d(10.5, 1.0), Err(Error::Range(_))));
        assert!(matches!(pcf_d(-0.5, 21.0), Err(Error::Range(_))));
        assert!(pcf_d(-0.5, -20.0).is_ok());
        assert!(matches!(pcf_d(-0.5, 20.0), Err(Error::Range(_))));
    }

    #[test]
    fn error_estimate_tracks_cancellation() {
        let e = pcf_d_extended(-0.5, 8.0).unwrap();
        assert!(e.cancellation > 1e10);
        assert!(e.abs_err < 1e-14 * e.value.hi.abs());
    }
}

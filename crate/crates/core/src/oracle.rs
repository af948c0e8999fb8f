//! Independent reference values.
//!
//! [`direct_product`] multiplies two parabolic cylinder functions summed from
//! their Kummer series in double-double arithmetic. [`reference`] gives the
//! direct-factor value each product representation should reproduce, and
//! [`laplace_residual`] checks the Laplace-transform pairs behind the
//! representations at a general transform variable p.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dd::{self, Dd};
use crate::error::{Error, Result};
use crate::pcf::pcf_d_extended;
use crate::products::{EvalPoint, Representation};
use crate::quad::{integrate, Node, QuadSpec};
use crate::specfun::{bessel_i, bessel_k, erfc, gamma, kummer_phi, rgamma, Gauss2F1};

/// Relative accuracy credited to the working-precision factors
/// (erfc, Bessel functions) used by some reference products.
const FACTOR_REL: f64 = 1e-14;

/// A reference value with the number of significant digits it guarantees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleValue {
    pub value: f64,
    pub guaranteed_digits: u32,
    #[serde(skip)]
    pub extended: Dd,
    pub abs_err: f64,
}

impl OracleValue {
    fn from_parts(extended: Dd, abs_err: f64) -> OracleValue {
        let value = extended.to_f64();
        let rel = if value == 0.0 { f64::INFINITY } else { abs_err / value.abs() };
        let digits = if rel <= 0.0 { 30 } else { (-rel.log10()).floor().clamp(0.0, 30.0) as u32 };
        OracleValue { value, guaranteed_digits: digits, extended, abs_err }
    }

    fn working(value: f64, rel: f64) -> OracleValue {
        OracleValue::from_parts(Dd::new(value), rel * value.abs())
    }
}

/// D_ν(x_signed) · D_μ(y) from the double-double Kummer series.
pub fn direct_product(nu: f64, mu: f64, x_signed: f64, y: f64) -> Result<OracleValue> {
    let a = pcf_d_extended(nu, x_signed)?;
    let b = pcf_d_extended(mu, y)?;
    let v = a.value * b.value;
    let err = a.value.hi.abs() * b.abs_err + b.value.hi.abs() * a.abs_err + a.abs_err * b.abs_err + 4.0 * dd::EPS * v.hi.abs();
    Ok(OracleValue::from_parts(v, err))
}

/// The product a representation computes, evaluated from its factors.
///
/// Arguments follow the representation's conventions: for (5.1) `y` is the
/// Kummer-function argument, for the specializations unused orders are
/// ignored.
pub fn reference(rep: Representation, pt: EvalPoint) -> Result<OracleValue> {
    let EvalPoint { nu, mu, x, y } = pt;
    match rep {
        Representation::R41 | Representation::R42 => direct_product(nu, mu, x, y),
        Representation::R43 | Representation::R44 => direct_product(nu, mu, -x, y),
        Representation::R51 => {
            let d = pcf_d_extended(nu, x)?;
            let phi = kummer_phi(0.5 * (1.0 - mu), 1.5, y)?;
            let v = d.value * phi.value;
            let err = d.abs_err * phi.value.abs() + d.value.hi.abs() * phi.abs_err_est + 4.0 * dd::EPS * v.hi.abs();
            Ok(OracleValue::from_parts(v, err))
        }
        Representation::KK => Ok(OracleValue::working(bessel_k(0.25, x)? * bessel_k(0.25, y)?, 2.0 * FACTOR_REL)),
        Representation::Erfc2 => Ok(OracleValue::working(erfc(x) * erfc(y), 2.0 * FACTOR_REL)),
        Representation::DI => {
            let d = pcf_d_extended(nu, x)?;
            let v = d.value.to_f64() * bessel_i(0.25, y)?;
            Ok(OracleValue::working(v, FACTOR_REL + d.abs_err / d.value.hi.abs()))
        }
        Representation::DnegErfc => {
            let d = pcf_d_extended(nu, -x)?;
            let v = d.value.to_f64() * erfc(y);
            Ok(OracleValue::working(v, FACTOR_REL + d.abs_err / d.value.hi.abs()))
        }
    }
}

/// The Laplace-transform pairs checked by [`laplace_residual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LaplaceIdentity {
    /// Transform of t^{-ν/2-1}(t+x)^{(ν-1)/2}, giving D_ν(√(2xp)).
    I31,
    /// Transform of t^{-(μ+1)/2}(t+y)^{μ/2}, giving D_μ(√(2yp)).
    I32,
    /// Finite-range transform giving Φ((1-ν)/2; 3/2; px²/2).
    I35,
    /// Finite-range transform giving Φ(-ν/2; 1/2; px²/2).
    I38,
    /// Convolution giving D_ν(√(2xp)) D_μ(√(2yp)).
    I33,
    /// Convolution giving D_μ(√(2yp)) Φ((1-ν)/2; 3/2; px²/2).
    I37,
    /// Convolution giving D_μ(√(2yp)) Φ(-ν/2; 1/2; px²/2).
    I39,
}

impl LaplaceIdentity {
    pub const ALL: [LaplaceIdentity; 7] = [
        LaplaceIdentity::I31,
        LaplaceIdentity::I32,
        LaplaceIdentity::I35,
        LaplaceIdentity::I38,
        LaplaceIdentity::I33,
        LaplaceIdentity::I37,
        LaplaceIdentity::I39,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LaplaceIdentity::I31 => "I31",
            LaplaceIdentity::I32 => "I32",
            LaplaceIdentity::I35 => "I35",
            LaplaceIdentity::I38 => "I38",
            LaplaceIdentity::I33 => "I33",
            LaplaceIdentity::I37 => "I37",
            LaplaceIdentity::I39 => "I39",
        }
    }

    /// Bracket conditions on the parameters the identity uses.
    pub fn admits(self, pt: &EvalPoint) -> bool {
        let EvalPoint { nu, mu, x, y } = *pt;
        match self {
            LaplaceIdentity::I31 => nu < 0.0 && x > 0.0,
            LaplaceIdentity::I32 => mu < 1.0 && y > 0.0,
            LaplaceIdentity::I35 => nu > -2.0 && nu < 1.0 && x > 0.0,
            LaplaceIdentity::I38 => nu > -1.0 && nu < 0.0 && x > 0.0,
            LaplaceIdentity::I33 => nu < 0.0 && mu < 1.0 && x > 0.0 && y > 0.0,
            LaplaceIdentity::I37 => nu > -2.0 && nu < 1.0 && mu < 0.0 && x > 0.0 && y > 0.0,
            LaplaceIdentity::I39 => nu > -1.0 && nu < 0.0 && mu < 1.0 && x > 0.0 && y > 0.0,
        }
    }
}

impl fmt::Display for LaplaceIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for LaplaceIdentity {
    type Err = Error;
    fn from_str(s: &str) -> Result<LaplaceIdentity> {
        LaplaceIdentity::ALL
            .into_iter()
            .find(|i| i.tag().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parameter(format!("unknown identity tag {s:?}")))
    }
}

fn d_at(order: f64, z: f64) -> Result<f64> {
    Ok(pcf_d_extended(order, z)?.value.to_f64())
}

struct Integrals {
    rel_tol: f64,
}

impl Integrals {
    fn check(v: crate::quad::QuadOutcome) -> Result<f64> {
        if v.converged {
            Ok(v.value)
        } else {
            Err(Error::Quadrature { value: v.value, abs_err: v.abs_err_est, evals: v.evals })
        }
    }

    /// ∫_L^∞ e^{-pt} (t - L)^α g(t) dt, with e^{-t} as the quadrature weight.
    fn semi(&self, p: f64, lower: f64, alpha: f64, knot: f64, g: &dyn Fn(Node) -> Result<f64>) -> Result<f64> {
        let h = |n: Node| -> Result<f64> { Ok((-(p - 1.0) * n.t).exp() * g(n)?) };
        let spec = QuadSpec::semi_infinite(lower, alpha, &h).knot(knot.max(1.0)).tolerances(self.rel_tol, 0.0);
        Self::check(integrate(&spec)?)
    }

    fn finite(&self, p: f64, upper: f64, alpha: f64, beta: f64, g: &dyn Fn(Node) -> Result<f64>) -> Result<f64> {
        let h = |n: Node| -> Result<f64> { Ok((-p * n.t).exp() * g(n)?) };
        let spec = QuadSpec::finite(0.0, upper, alpha, beta, &h).tolerances(self.rel_tol, 0.0);
        Self::check(integrate(&spec)?)
    }
}

/// Right-hand side pieces shared by the two Φ-convolutions.
struct PhiConvolution {
    finite_a: f64,
    finite_b: f64,
    finite_y_pow: f64,
    finite_beta: f64,
    tail_a: f64,
    tail_b: f64,
    tail_c: f64,
    tail_t_pow: f64,
    tail_y_pow: f64,
}

impl PhiConvolution {
    fn finite(&self, q: &Integrals, p: f64, nu: f64, mu: f64, x: f64, y: f64) -> Result<f64> {
        let hyp = Gauss2F1::new(self.finite_a, self.finite_b, 1.0 + 0.5 * (nu - mu))?;
        let x2 = x * x;
        let (ypow, beta) = (self.finite_y_pow, self.finite_beta);
        let c2 = 2f64.powf(beta);
        let g = |n: Node| -> Result<f64> {
            let (t, d2) = (n.t, 2.0 * n.to_upper);
            let z = t * (x2 - 2.0 * y - 2.0 * t) / (d2 * (y + t));
            let w = x2 * y / (d2 * (y + t));
            Ok(c2 * (y + t).powf(ypow) * hyp.eval(z, w)?.value)
        };
        q.finite(p, 0.5 * x2, 0.5 * (nu - mu), beta, &g)
    }

    fn tail(&self, q: &Integrals, p: f64, nu: f64, mu: f64, x: f64, y: f64) -> Result<f64> {
        let (a, b, c) = (self.tail_a, self.tail_b, self.tail_c);
        let s = 0.5 * (1.0 + nu + mu);
        let folded = s < 0.0;
        let hyp = if folded { Gauss2F1::new(c - a, c - b, c)? } else { Gauss2F1::new(a, b, c)? };
        let alpha = if folded { 0.0 } else { -s };
        let cst = if folded { 1.0 } else { 2f64.powf(-s) };
        let x2 = x * x;
        let (tp, yp) = (self.tail_t_pow, self.tail_y_pow);
        let g = |n: Node| -> Result<f64> {
            let (t, sl) = (n.t, n.from_lower);
            let z = x2 * y / (t * (2.0 * y + 2.0 * sl));
            let w = sl * (y + t) / (t * (y + sl));
            let mut v = cst * t.powf(tp) * (2.0 * y + 2.0 * sl).powf(yp) * hyp.eval(z, w)?.value;
            if folded {
                v *= ((y + t) / (2.0 * t * (y + sl))).powf(s);
            }
            Ok(v)
        };
        q.semi(p, 0.5 * x2, alpha, x2.max(2.0 * y), &g)
    }
}

/// |LHS(p) - ∫ e^{-pt} f(t) dt| / |LHS(p)| for one Laplace pair.
///
/// The transform variable enters the left side through arguments √(2xp),
/// √(2yp) and px²/2; the parameters use `nu`/`x` for the first function and
/// `mu`/`y` for the second.
pub fn laplace_residual(identity: LaplaceIdentity, p: f64, params: EvalPoint) -> Result<f64> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::Parameter(format!("transform variable p = {p} must be positive")));
    }
    if !identity.admits(&params) {
        return Err(Error::Region(format!(
            "{params:?} violates the bracket conditions of {}",
            identity.tag()
        )));
    }
    let EvalPoint { nu, mu, x, y } = params;
    let q = Integrals { rel_tol: 1e-12 };
    let sp = p.sqrt();
    let (lhs, rhs) = match identity {
        LaplaceIdentity::I31 => {
            let lhs = gamma(-0.5 * nu)? * (0.5 * x * p).exp() * d_at(nu, (2.0 * x * p).sqrt())?;
            let g = |n: Node| -> Result<f64> { Ok((n.t + x).powf(0.5 * (nu - 1.0))) };
            let rhs = 2f64.powf(0.5 * nu) * x.sqrt() * q.semi(p, 0.0, -0.5 * nu - 1.0, 2.0 * x, &g)?;
            (lhs, rhs)
        }
        LaplaceIdentity::I32 => {
            let lhs = gamma(0.5 * (1.0 - mu))? / sp * (0.5 * y * p).exp() * d_at(mu, (2.0 * y * p).sqrt())?;
            let g = |n: Node| -> Result<f64> { Ok((n.t + y).powf(0.5 * mu)) };
            let rhs = 2f64.powf(0.5 * mu) * q.semi(p, 0.0, -0.5 * (mu + 1.0), 2.0 * y, &g)?;
            (lhs, rhs)
        }
        LaplaceIdentity::I35 => {
            let arg = 0.5 * p * x * x;
            let lhs = x * (2.0 / PI).sqrt() * gamma(1.0 + 0.5 * nu)? * gamma(0.5 * (1.0 - nu))? * (-arg).exp()
                * kummer_phi(0.5 * (1.0 - nu), 1.5, arg)?.value;
            let g = |_: Node| -> Result<f64> { Ok(1.0) };
            (lhs, q.finite(p, 0.5 * x * x, 0.5 * nu, -0.5 * (1.0 + nu), &g)?)
        }
        LaplaceIdentity::I38 => {
            let arg = 0.5 * p * x * x;
            let lhs = (2.0 / PI).sqrt() / x * gamma(0.5 * (1.0 + nu))? * gamma(-0.5 * nu)? * (-arg).exp()
                * kummer_phi(-0.5 * nu, 0.5, arg)?.value;
            let g = |_: Node| -> Result<f64> { Ok(1.0) };
            (lhs, q.finite(p, 0.5 * x * x, 0.5 * (nu - 1.0), -0.5 * nu - 1.0, &g)?)
        }
        LaplaceIdentity::I33 => {
            let lhs = (0.5 * p * (x + y)).exp() / sp * d_at(nu, (2.0 * x * p).sqrt())? * d_at(mu, (2.0 * y * p).sqrt())?;
            let c = 0.5 * (1.0 - nu - mu);
            let hyp = Gauss2F1::new(-0.5 * nu, -0.5 * mu, c)?;
            let g = |n: Node| -> Result<f64> {
                let t = n.t;
                let den = (x + t) * (y + t);
                let v = hyp.eval(t * (x + y + t) / den, x * y / den)?.value;
                Ok((y + t).powf(0.5 * mu) * (x + t).powf(0.5 * nu) * v)
            };
            let rhs = 2f64.powf(0.5 * (nu + mu)) * rgamma(c) * q.semi(p, 0.0, -0.5 * (1.0 + nu + mu), 2.0 * x.max(y), &g)?;
            (lhs, rhs)
        }
        LaplaceIdentity::I37 => {
            let lhs = (0.5 * p * (y - x * x)).exp() * d_at(mu, (2.0 * y * p).sqrt())?
                * kummer_phi(0.5 * (1.0 - nu), 1.5, 0.5 * p * x * x)?.value;
            let conv = PhiConvolution {
                finite_a: -0.5 * mu,
                finite_b: 0.5 * (nu + 1.0),
                finite_y_pow: 0.5 * mu,
                finite_beta: -0.5 * (nu + 1.0),
                tail_a: 0.5 * (1.0 - nu),
                tail_b: 0.5 * (1.0 - mu),
                tail_c: 1.5,
                tail_t_pow: 0.5 * (nu - 1.0),
                tail_y_pow: 0.5 * (mu - 1.0),
            };
            let c1 = 2f64.powf(0.5 * (nu + mu)) * PI.sqrt() / x * rgamma(0.5 * (1.0 - nu)) * rgamma(1.0 + 0.5 * (nu - mu));
            let c2 = 2f64.powf(0.5 * (2.0 + nu + mu)) * y.sqrt() * rgamma(-0.5 * mu);
            let rhs = c1 * conv.finite(&q, p, nu, mu, x, y)? + c2 * conv.tail(&q, p, nu, mu, x, y)?;
            (lhs, rhs)
        }
        LaplaceIdentity::I39 => {
            let lhs = (0.5 * p * (y - x * x)).exp() / sp * d_at(mu, (2.0 * y * p).sqrt())?
                * kummer_phi(-0.5 * nu, 0.5, 0.5 * p * x * x)?.value;
            let conv = PhiConvolution {
                finite_a: 0.5 * (1.0 - mu),
                finite_b: 1.0 + 0.5 * nu,
                finite_y_pow: 0.5 * (mu - 1.0),
                finite_beta: -0.5 * nu - 1.0,
                tail_a: -0.5 * nu,
                tail_b: -0.5 * mu,
                tail_c: 0.5,
                tail_t_pow: 0.5 * nu,
                tail_y_pow: 0.5 * mu,
            };
            let c1 = x * y.sqrt() * PI.sqrt() * 2f64.powf(0.5 * (1.0 + nu + mu)) * rgamma(-0.5 * nu) * rgamma(1.0 + 0.5 * (nu - mu));
            let c2 = 2f64.powf(0.5 * (1.0 + nu + mu)) * rgamma(0.5 * (1.0 - mu));
            let rhs = c1 * conv.finite(&q, p, nu, mu, x, y)? + c2 * conv.tail(&q, p, nu, mu, x, y)?;
            (lhs, rhs)
        }
    };
    Ok((lhs - rhs).abs() / lhs.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_products() {
        let v = direct_product(0.0, 0.0, 2.0, 2.0).unwrap();
        assert!((v.value - (-2.0f64).exp()).abs() <= 1e-16 * v.value);
        let v = direct_product(-1.0, -1.0, 0.0, 0.0).unwrap();
        assert!((v.value - PI / 2.0).abs() <= 2e-16);
        assert!(v.guaranteed_digits >= 25);
    }

    #[test]
    fn tags_round_trip() {
        for i in LaplaceIdentity::ALL {
            assert_eq!(i.tag().parse::<LaplaceIdentity>().unwrap(), i);
        }
    }
}

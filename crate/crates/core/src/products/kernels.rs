// Integrands of every representation. Each one is written in terms of the
// distances `from_lower`/`to_upper` supplied by the quadrature, with 1 - z
// formed in closed form and the endpoint power folded into the declared
// exponent.

use std::f64::consts::PI;

use super::{Settings, Term};
use crate::error::Result;
use crate::quad::{integrate, Node, QuadSpec};
use crate::specfun::{elliptic_k_with, rgamma, Ferrers, Gauss2F1, IncompleteBeta};

fn sqrt_pi() -> f64 {
    PI.sqrt()
}

fn knot(scale: f64) -> f64 {
    (2.0 * scale).max(1.0)
}

fn run(label: &'static str, coefficient: f64, spec: QuadSpec, s: &Settings) -> Result<Term> {
    if coefficient == 0.0 {
        return Ok(Term { label, coefficient, integral: crate::quad::QuadOutcome::zero() });
    }
    let spec = spec.tolerances(s.rel_tol, s.abs_tol).max_evals(s.max_evals);
    Ok(Term { label, coefficient, integral: integrate(&spec)? })
}

/// (z, 1 - z) of the (4.1) hypergeometric factor at t.
pub fn one_minus_z_41(x: f64, y: f64, t: f64) -> (f64, f64) {
    if x == 0.0 || y == 0.0 {
        return (1.0, 0.0);
    }
    let (x2, y2) = (x * x, y * y);
    let den = (x2 + 2.0 * t) * (y2 + 2.0 * t);
    (2.0 * t * (x2 + y2 + 2.0 * t) / den, x2 * y2 / den)
}

/// (z, 1 - z) of the finite-range factor in (4.3)/(4.4), with `du = x²/2 - t`.
pub fn one_minus_z_43_finite(x: f64, y: f64, t: f64, du: f64) -> (f64, f64) {
    let (x2, y2) = (x * x, y * y);
    let den = 2.0 * du * (y2 + 2.0 * t);
    (2.0 * t * (x2 - y2 - 2.0 * t) / den, x2 * y2 / den)
}

/// (z, 1 - z) of the tail factor in (4.3)/(4.4), with `dl = t - x²/2`.
pub fn one_minus_z_43_tail(x: f64, y: f64, t: f64, dl: f64) -> (f64, f64) {
    let (x2, y2) = (x * x, y * y);
    let den = 2.0 * t * (y2 + 2.0 * dl);
    (x2 * y2 / den, 2.0 * dl * (2.0 * t + y2) / den)
}

/// ±(4.1) integral for D_ν(x) D_μ(y), ν < 0.
pub(super) fn term_41(p: &super::EvalPoint, s: &Settings, sign: f64) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let c = 0.5 * (1.0 - nu - mu);
    let coef = sign * (-(x * x + y * y) / 4.0).exp() * rgamma(c);
    let hyp = Gauss2F1::new(-0.5 * nu, -0.5 * mu, c)?;
    let mut alpha = -0.5 * (1.0 + nu + mu);
    let mut cst = 1.0;
    if x == 0.0 {
        alpha += 0.5 * nu;
        cst *= 2f64.powf(0.5 * nu);
    }
    if y == 0.0 {
        alpha += 0.5 * mu;
        cst *= 2f64.powf(0.5 * mu);
    }
    let g = move |n: Node| -> Result<f64> {
        let t = n.t;
        let px = if x == 0.0 { 1.0 } else { (x * x + 2.0 * t).powf(0.5 * nu) };
        let py = if y == 0.0 { 1.0 } else { (y * y + 2.0 * t).powf(0.5 * mu) };
        let (z, w) = one_minus_z_41(x, y, t);
        Ok(cst * px * py * hyp.eval(z, w)?.value)
    };
    let label = if sign < 0.0 { "-I1" } else { "I1" };
    run(label, coef, QuadSpec::semi_infinite(0.0, alpha, &g).knot(knot(x.max(y).powi(2))), s)
}

/// (4.2) integral, x, y > 0.
pub(super) fn term_42(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let m = 0.5 * (1.0 + nu + mu);
    let fer = Ferrers::new(0.5 * (mu - nu - 1.0), m)?;
    let coef = (-(x * x + y * y) / 4.0).exp();
    let (x2, y2) = (x * x, y * y);
    let ex = 0.25 * (nu - mu - 1.0);
    let ey = 0.25 * (mu - nu - 1.0);
    let g = move |n: Node| -> Result<f64> {
        let t = n.t;
        let (ax, ay) = (x2 + 2.0 * t, y2 + 2.0 * t);
        let big_x = x * y / (ax * ay).sqrt();
        let (z, _) = one_minus_z_41(x, y, t);
        let one_minus = z / (1.0 + big_x);
        let merged = ((1.0 + big_x).powi(2) * ax * ay / 4.0).powf(0.5 * m);
        Ok(merged * ax.powf(ex) * ay.powf(ey) * fer.hyp_part(one_minus, 1.0 + big_x)?)
    };
    run("I1", coef, QuadSpec::semi_infinite(0.0, -m, &g).knot(knot(x.max(y).powi(2))), s)
}

/// Fold of the tail integrals: returns (declared exponent, Euler-transformed
/// hypergeometric, power s) for a tail whose endpoint singularity is dl^{-s}
/// times F(a, b; a + b + s; z).
fn fold_tail(a: f64, b: f64, c: f64) -> Result<(f64, Gauss2F1, bool)> {
    let s = c - a - b;
    if s < 0.0 {
        Ok((0.0, Gauss2F1::new(c - a, c - b, c)?, true))
    } else {
        Ok((-s, Gauss2F1::new(a, b, c)?, false))
    }
}

fn finite_43_44(p: &super::EvalPoint, s: &Settings, a: f64, b: f64, beta: f64, wpow: f64, coef: f64) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let c = 1.0 + 0.5 * (nu - mu);
    let hyp = Gauss2F1::new(a, b, c)?;
    let y2 = y * y;
    let c2 = 2f64.powf(beta);
    let g = move |n: Node| -> Result<f64> {
        let (z, w) = one_minus_z_43_finite(x, y, n.t, n.to_upper);
        Ok((-n.t).exp() * (y2 + 2.0 * n.t).powf(wpow) * c2 * hyp.eval(z, w)?.value)
    };
    run("I2", coef, QuadSpec::finite(0.0, 0.5 * x * x, 0.5 * (nu - mu), beta, &g), s)
}

#[allow(clippy::too_many_arguments)]
fn tail_43_44(p: &super::EvalPoint, st: &Settings, a: f64, b: f64, c: f64, tpow: f64, ypow: f64, coef: f64) -> Result<Term> {
    let (x, y) = (p.x, p.y);
    let (alpha, hyp, folded) = fold_tail(a, b, c)?;
    let sexp = c - a - b;
    let y2 = y * y;
    let cst = if folded { 1.0 } else { 2f64.powf(alpha) };
    let g = move |n: Node| -> Result<f64> {
        let (t, dl) = (n.t, n.from_lower);
        let (z, w) = one_minus_z_43_tail(x, y, t, dl);
        let mut v = cst * t.powf(tpow) * (y2 + 2.0 * dl).powf(ypow) * hyp.eval(z, w)?.value;
        if folded {
            v *= ((2.0 * t + y2) / (2.0 * t * (y2 + 2.0 * dl))).powf(sexp);
        }
        Ok(v)
    };
    let lower = 0.5 * x * x;
    run("I3", coef, QuadSpec::semi_infinite(lower, alpha, &g).knot(knot(x.max(y).powi(2))), st)
}

pub(super) fn term_43_finite(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = (2.0 * PI).sqrt() * ((x * x - y * y) / 4.0).exp() * rgamma(-nu) * rgamma(1.0 + 0.5 * (nu - mu));
    finite_43_44(p, s, -0.5 * mu, 0.5 * (nu + 1.0), -0.5 * (nu + 1.0), 0.5 * mu, coef)
}

pub(super) fn term_43_tail(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = x * y * sqrt_pi() * 2f64.powf(2.0 + nu + 0.5 * mu) * ((x * x - y * y) / 4.0).exp()
        * rgamma(-0.5 * nu)
        * rgamma(-0.5 * mu);
    tail_43_44(p, s, 0.5 * (1.0 - nu), 0.5 * (1.0 - mu), 1.5, 0.5 * (nu - 1.0), 0.5 * (mu - 1.0), coef)
}

pub(super) fn term_44_finite(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = x * y * (2.0 * PI).sqrt() * ((x * x - y * y) / 4.0).exp() * rgamma(-nu) * rgamma(1.0 + 0.5 * (nu - mu));
    finite_43_44(p, s, 0.5 * (1.0 - mu), 1.0 + 0.5 * nu, -0.5 * nu - 1.0, 0.5 * (mu - 1.0), coef)
}

pub(super) fn term_44_tail(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = 2f64.powf(0.5 * (3.0 + 2.0 * nu + mu)) * sqrt_pi() * ((x * x - y * y) / 4.0).exp()
        * rgamma(0.5 * (1.0 - nu))
        * rgamma(0.5 * (1.0 - mu));
    tail_43_44(p, s, -0.5 * nu, -0.5 * mu, 0.5, 0.5 * nu, 0.5 * mu, coef)
}

fn e51(x: f64, y: f64) -> f64 {
    (y - x * x / 4.0).exp()
}

pub(super) fn term_51_finite(p: &super::EvalPoint, s: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = 0.5 * sqrt_pi() * e51(x, y) / y.sqrt() * rgamma(0.5 * (1.0 - mu)) * rgamma(1.0 + 0.5 * (mu - nu));
    let hyp = Gauss2F1::new(-0.5 * nu, 0.5 * (mu + 1.0), 1.0 + 0.5 * (mu - nu))?;
    let x2 = x * x;
    let g = move |n: Node| -> Result<f64> {
        let (t, du) = (n.t, n.to_upper);
        let ax = x2 + 2.0 * t;
        let z = -t * (x2 - 2.0 * du) / (ax * du);
        let w = x2 * y / (ax * du);
        Ok((-t).exp() * ax.powf(0.5 * nu) * hyp.eval(z, w)?.value)
    };
    run("I1", coef, QuadSpec::finite(0.0, y, 0.5 * (mu - nu), -0.5 * (mu + 1.0), &g), s)
}

pub(super) fn term_51_tail(p: &super::EvalPoint, st: &Settings) -> Result<Term> {
    let (nu, mu, x, y) = (p.nu, p.mu, p.x, p.y);
    let coef = x * e51(x, y) * rgamma(-0.5 * nu);
    let (a, b, c) = (0.5 * (1.0 - mu), 0.5 * (1.0 - nu), 1.5);
    let (alpha, hyp, folded) = fold_tail(a, b, c)?;
    let sexp = c - a - b;
    let x2 = x * x;
    let g = move |n: Node| -> Result<f64> {
        let (t, dl) = (n.t, n.from_lower);
        let bx = x2 + 2.0 * dl;
        let z = x2 * y / (t * bx);
        let w = dl * (x2 + 2.0 * t) / (t * bx);
        let mut v = t.powf(0.5 * (mu - 1.0)) * bx.powf(0.5 * (nu - 1.0)) * hyp.eval(z, w)?.value;
        if folded {
            v *= ((x2 + 2.0 * t) / (t * bx)).powf(sexp);
        }
        Ok(v)
    };
    run("I2", coef, QuadSpec::semi_infinite(y, alpha, &g).knot(knot(x2.max(y))), st)
}

pub(super) fn term_kk(x: f64, y: f64, s: &Settings) -> Result<Term> {
    let coef = 2f64.sqrt() * (x * y).powf(-0.25) * (-(x + y)).exp();
    let g = move |n: Node| -> Result<f64> {
        let t = n.t;
        let (ax, ay) = (2.0 * x + t, 2.0 * y + t);
        let r = (x * y / (ax * ay)).sqrt();
        Ok((ax * ay).powf(-0.25) * elliptic_k_with(0.5 - r, 0.5 + r)?)
    };
    run("I1", coef, QuadSpec::semi_infinite(0.0, 0.0, &g).knot(knot(x.max(y))), s)
}

pub(super) fn term_erfc2(x: f64, y: f64, s: &Settings) -> Result<Term> {
    let (x2, y2) = (x * x, y * y);
    let coef = 2.0 * (-(x2 + y2)).exp() * PI.powf(-1.5);
    let g = move |n: Node| -> Result<f64> {
        let t = n.t;
        let den = (x2 + t) * (y2 + t);
        let q = t * (x2 + y2 + t) / den;
        let qc = x2 * y2 / den;
        Ok((t / (x2 + y2 + t)).sqrt() * q.sqrt().atan2(qc.sqrt()))
    };
    run("I1", coef, QuadSpec::semi_infinite(0.0, -0.5, &g).knot(knot(x2.max(y2))), s)
}

pub(super) fn term_di_finite(nu: f64, x: f64, y: f64, s: &Settings) -> Result<Term> {
    let m = 0.25 * (1.0 + 2.0 * nu);
    let fer = Ferrers::new(-0.25, m)?;
    let coef = e51(x, y) / ((x * y).sqrt() * (2.0 * PI).sqrt());
    let x2 = x * x;
    let g = move |n: Node| -> Result<f64> {
        let (t, du) = (n.t, n.to_upper);
        let ax = x2 + 2.0 * t;
        let one_minus = t * (x2 - 2.0 * du) / (x2 * y);
        let one_plus = du * ax / (x2 * y);
        Ok((-t).exp() * ax.powf(m) * fer.hyp_part(one_minus, one_plus)?)
    };
    run("I1", coef, QuadSpec::finite(0.0, 2.0 * y, -m, 0.0, &g), s)
}

pub(super) fn term_di_tail(nu: f64, x: f64, y: f64, st: &Settings) -> Result<Term> {
    let m = 0.25 * (1.0 + 2.0 * nu);
    let fer = Ferrers::new(-0.25 * (3.0 + 2.0 * nu), m)?;
    let coef = 2f64.powf(-1.0 - 0.5 * nu) * e51(x, y) * y.powf(-0.25) / sqrt_pi();
    let x2 = x * x;
    let g = move |n: Node| -> Result<f64> {
        let (t, dl) = (n.t, n.from_lower);
        let bx = x2 + 2.0 * dl;
        let ax = x2 + 2.0 * t;
        let q = (2.0 * x2 * y / (t * bx)).sqrt();
        let qc = dl * ax / (t * bx) / (1.0 + q);
        let f1 = (ax / (t * (1.0 + q))).powf(m) * fer.hyp_part(1.0 + q, qc)?;
        let f2 = (bx * (1.0 + q) / dl).powf(m) * fer.hyp_part(qc, 1.0 + q)?;
        Ok((t * bx).powf(-0.25) * (f1 - f2))
    };
    run("I2", coef, QuadSpec::semi_infinite(2.0 * y, 0.0, &g).knot(knot(x2.max(y))), st)
}

pub(super) fn term_de_first(nu: f64, x: f64, y: f64, s: &Settings) -> Result<Term> {
    let (x2, y2) = (x * x, y * y);
    let coef = -nu * (-(x2 + 4.0 * y2) / 4.0).exp() / (2.0 * sqrt_pi()) * rgamma(1.0 - 0.5 * nu);
    let beta = IncompleteBeta::new(-0.5 * nu, 0.5)?;
    let g = move |n: Node| -> Result<f64> {
        let t = n.t;
        let den = (x2 + 2.0 * t) * (y2 + t);
        let z = t * (x2 + 2.0 * y2 + 2.0 * t) / den;
        let w = x2 * y2 / den;
        Ok((x2 + 2.0 * y2 + 2.0 * t).powf(0.5 * nu) * (y2 + t).powf(-0.5 * (1.0 + nu)) * beta.eval(z.min(1.0), w)?)
    };
    run("I1", coef, QuadSpec::semi_infinite(0.0, 0.0, &g).knot(knot(x2.max(y2))), s)
}

pub(super) fn term_de_finite(nu: f64, x: f64, y: f64, s: &Settings) -> Result<Term> {
    let (x2, y2) = (x * x, y * y);
    let a = 0.5 * (1.0 + nu);
    let coef = ((x2 - 4.0 * y2) / 4.0).exp() / 2f64.sqrt() * rgamma(-nu) * rgamma(0.5 * (3.0 + nu));
    let hyp = Gauss2F1::new(a, 1.0 + 0.5 * nu, a + 1.0)?;
    let cst = 2.0 * (x2 * y2).powf(-a);
    let g = move |n: Node| -> Result<f64> {
        let (t, du) = (n.t, n.to_upper);
        let z = t * (2.0 * y2 - 2.0 * du) / (x2 * y2);
        let w = 2.0 * du * (y2 + t) / (x2 * y2);
        Ok((-t).exp() * (y2 + t).powf(0.5 * nu) * cst * hyp.eval(z, w)?.value)
    };
    run("I2", coef, QuadSpec::finite(0.0, 0.5 * x2, a, 0.0, &g), s)
}

pub(super) fn term_de_tail(nu: f64, x: f64, y: f64, st: &Settings) -> Result<Term> {
    let (x2, y2) = (x * x, y * y);
    let a = 0.5 * (1.0 + nu);
    let coef = 2f64.sqrt() * ((x2 - 4.0 * y2) / 4.0).exp() / sqrt_pi() * rgamma(-0.5 * nu);
    let beta = IncompleteBeta::new(-0.5 * nu, -0.5 * nu)?;
    let g = move |n: Node| -> Result<f64> {
        let (t, dl) = (n.t, n.from_lower);
        let by = 2.0 * y2 + 2.0 * dl;
        let s = x2 * y2 / (t * by);
        let r = s.sqrt();
        let lo = 2.0 * dl * (t + y2) / (t * by) / (1.0 + r);
        let hi = 1.0 + r;
        let diff = beta.eval(0.5 * hi, 0.5 * lo)? - beta.eval(0.5 * lo, 0.5 * hi)?;
        Ok(by.powf(-a) * (t + y2).powf(0.5 * nu) * diff)
    };
    run("I3", coef, QuadSpec::semi_infinite(0.5 * x2, 0.0, &g).knot(knot(x2.max(y2))), st)
}

//! Gauss hypergeometric function ₂F₁(a, b; c; z) for real z <= 1.
//!
//! * |z| <= 1/2: the defining series.
//! * 1/2 < z <= 1: the connection formula in w = 1 - z, with the logarithmic
//!   form when c - a - b is an integer.
//! * z < -1/2: the Pfaff transformation, which maps z into (1/3, 1).
//!
//! Callers that know 1 - z exactly (integrands near an endpoint) pass it in;
//! the branch logic then never forms 1 - z itself.

use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::gamma::{digamma, gamma, rgamma};
use super::{is_nonpositive_integer, SeriesResult, SERIES_BUDGET, SERIES_TOL};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
/// |s - m| below this is handled as the integer case m.
const INTEGER_ZONE: f64 = 1e-4;
/// |s - m| below this uses the logarithmic formula directly.
const EXACT_ZONE: f64 = 1e-13;
/// Offset in c for the interpolation across near-integer s.
const INTERP_STEP: f64 = 2e-4;
const INTERP_OFFSETS: [f64; 5] = [-2.0, -1.0, 0.0, 1.0, 2.0];

/// Rounding excess of z over 1 tolerated by [`Gauss2F1::eval`].
const Z_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub z: f64,
}

impl HypParams {
    pub fn new(a: f64, b: f64, c: f64, z: f64) -> HypParams {
        HypParams { a, b, c, z }
    }
}

/// ₂F₁(a, b; c; z).
pub fn gauss_2f1(p: HypParams) -> Result<SeriesResult> {
    Gauss2F1::new(p.a, p.b, p.c)?.eval(p.z, 1.0 - p.z)
}

/// ₂F₁ with the complement `one_minus_z = 1 - z` supplied by the caller.
///
/// The complement is used whenever the evaluation depends on the distance to
/// z = 1, which keeps full relative accuracy for z within rounding of 1.
pub fn gauss_2f1_near_unity(p: HypParams, one_minus_z: f64) -> Result<SeriesResult> {
    Gauss2F1::new(p.a, p.b, p.c)?.eval(p.z, one_minus_z)
}

/// ₂F₁ with fixed parameters, caching every quantity that does not depend on z.
///
/// The parameters are stored with a <= b so that F(a,b;c;z) and F(b,a;c;z)
/// follow identical arithmetic.
#[derive(Debug)]
pub struct Gauss2F1 {
    a: f64,
    b: f64,
    c: f64,
    degree: Option<usize>,
    near: OnceLock<Result<Connection>>,
    pfaff: OnceLock<Result<Box<Gauss2F1>>>,
}

#[derive(Debug)]
enum Connection {
    General { s: f64, ca: f64, cb: f64, a: f64, b: f64, c: f64 },
    Log { m: usize, a: f64, b: f64, first: f64, second: f64, psi_a: f64, psi_b: f64 },
    Euler { s: f64, inner: Box<Gauss2F1> },
    Interp { delta: f64, nodes: Vec<Gauss2F1> },
}

impl Gauss2F1 {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Gauss2F1> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::Parameter("non-finite hypergeometric parameter".into()));
        }
        if is_nonpositive_integer(c) {
            return Err(Error::Parameter(format!("hypergeometric c = {c} is a non-positive integer")));
        }
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let degree = [a, b]
            .iter()
            .filter(|&&p| is_nonpositive_integer(p))
            .map(|&p| (-p) as usize)
            .min();
        Ok(Gauss2F1 { a, b, c, degree, near: OnceLock::new(), pfaff: OnceLock::new() })
    }

    pub fn params(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    /// Evaluate at z with `w = 1 - z` supplied.
    ///
    /// Near z = 1 only `w` is used, so a z that rounds slightly above 1 is
    /// accepted as long as `w` is non-negative.
    pub fn eval(&self, z: f64, w: f64) -> Result<SeriesResult> {
        if z.is_nan() || w.is_nan() {
            return Err(Error::Parameter("NaN hypergeometric argument".into()));
        }
        if z > 1.0 + Z_SLACK || w < 0.0 {
            return Err(Error::Domain(format!("hypergeometric argument z = {z} exceeds 1")));
        }
        if z == 0.0 {
            return Ok(SeriesResult::exact(1.0));
        }
        if let Some(n) = self.degree {
            return polynomial(self.a, self.b, self.c, z, n);
        }
        if z.abs() <= 0.5 {
            return direct(self.a, self.b, self.c, z);
        }
        if z > 0.5 {
            return self.connection()?.eval(w);
        }
        let inner = self
            .pfaff
            .get_or_init(|| Gauss2F1::new(self.a, self.c - self.b, self.c).map(Box::new))
            .as_ref()
            .map_err(Clone::clone)?;
        let g = inner.eval(-z / w, 1.0 / w)?;
        Ok(g.scaled(w.powf(-self.a), 4.0 * f64::EPSILON * (1.0 + (self.a * w.ln()).abs())))
    }

    fn connection(&self) -> Result<&Connection> {
        self.near
            .get_or_init(|| Connection::new(self.a, self.b, self.c))
            .as_ref()
            .map_err(Clone::clone)
    }
}

impl Connection {
    fn new(a: f64, b: f64, c: f64) -> Result<Connection> {
        let s = c - a - b;
        let m = s.round();
        let delta = s - m;
        // Interpolating in c is only sound away from the poles of F in c.
        let near_c_pole = c < 0.5 && (c - c.round()).abs() < 20.0 * INTERP_STEP;
        if delta.abs() < INTEGER_ZONE && !(near_c_pole && delta.abs() > EXACT_ZONE) {
            if m < 0.0 {
                return Ok(Connection::Euler { s, inner: Box::new(Gauss2F1::new(c - a, c - b, c)?) });
            }
            if delta.abs() > EXACT_ZONE {
                let c0 = a + b + m;
                let nodes = INTERP_OFFSETS
                    .iter()
                    .map(|&k| Gauss2F1::new(a, b, c0 + k * INTERP_STEP))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(Connection::Interp { delta: c - c0, nodes });
            }
            let m = m as usize;
            let gc = gamma(c)?;
            let first = if m > 0 { gamma(m as f64)? * gc * rgamma(a + m as f64) * rgamma(b + m as f64) } else { 0.0 };
            let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
            let second = sign * gc * rgamma(a) * rgamma(b);
            let (psi_a, psi_b) = if second != 0.0 {
                (digamma(a + m as f64)?, digamma(b + m as f64)?)
            } else {
                (0.0, 0.0)
            };
            return Ok(Connection::Log { m, a, b, first, second, psi_a, psi_b });
        }
        let gc = gamma(c)?;
        let ca = gc * gamma(s)? * rgamma(c - a) * rgamma(c - b);
        let cb = gc * gamma(-s)? * rgamma(a) * rgamma(b);
        Ok(Connection::General { s, ca, cb, a, b, c })
    }

    fn eval(&self, w: f64) -> Result<SeriesResult> {
        match self {
            Connection::General { s, ca, cb, a, b, c } => {
                if w == 0.0 {
                    if *s > 0.0 {
                        return Ok(SeriesResult { value: *ca, abs_err_est: 8.0 * f64::EPSILON * ca.abs(), terms_used: 0, converged: true });
                    }
                    return Err(Error::Divergent(*s));
                }
                // Rounding of s itself is amplified by the poles of Γ(±s) and
                // of the series in 1 ∓ s when s is close to an integer.
                let near = 4.0 * f64::EPSILON * (1.0 + s.abs()) / (s - s.round()).abs();
                let t1 = if *ca != 0.0 { direct(*a, *b, 1.0 - s, w)?.scaled(*ca, 8.0 * f64::EPSILON + near) } else { SeriesResult::exact(0.0) };
                let t2 = if *cb != 0.0 {
                    let ws = w.powf(*s);
                    direct(c - a, c - b, 1.0 + s, w)?.scaled(cb * ws, 8.0 * f64::EPSILON * (1.0 + (s * w.ln()).abs()) + near)
                } else {
                    SeriesResult::exact(0.0)
                };
                Ok(combine(t1, t2))
            }
            Connection::Log { m, a, b, first, second, psi_a, psi_b } => log_case(*m, *a, *b, *first, *second, *psi_a, *psi_b, w),
            Connection::Euler { s, inner } => {
                if w == 0.0 {
                    return Err(Error::Divergent(*s));
                }
                let g = inner.eval(1.0 - w, w)?;
                Ok(g.scaled(w.powf(*s), 4.0 * f64::EPSILON * (1.0 + (s * w.ln()).abs())))
            }
            Connection::Interp { delta, nodes } => {
                // Lagrange interpolation in c through c0 + k h, k = -2..2.
                let mut value = 0.0;
                let mut abs_err_est = 0.0;
                let mut terms_used = 0;
                for (i, node) in nodes.iter().enumerate() {
                    let ki = INTERP_OFFSETS[i];
                    let mut weight = 1.0;
                    for (j, &kj) in INTERP_OFFSETS.iter().enumerate() {
                        if j != i {
                            weight *= (delta / INTERP_STEP - kj) / (ki - kj);
                        }
                    }
                    let r = node.eval(1.0 - w, w)?;
                    value += weight * r.value;
                    abs_err_est += weight.abs() * r.abs_err_est;
                    terms_used += r.terms_used;
                }
                Ok(SeriesResult { value, abs_err_est, terms_used, converged: true })
            }
        }
    }
}

fn combine(t1: SeriesResult, t2: SeriesResult) -> SeriesResult {
    SeriesResult {
        value: t1.value + t2.value,
        abs_err_est: t1.abs_err_est + t2.abs_err_est,
        terms_used: t1.terms_used + t2.terms_used,
        converged: t1.converged && t2.converged,
    }
}

/// Defining series; callers guarantee |z| <= 1/2 or a terminating series.
fn direct(a: f64, b: f64, c: f64, z: f64) -> Result<SeriesResult> {
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    let az = z.abs();
    for k in 0..SERIES_BUDGET {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
        let rounding = 2.0 * f64::EPSILON * abs_sum;
        if term == 0.0 {
            return Ok(SeriesResult { value: sum, abs_err_est: rounding, terms_used: k + 1, converged: true });
        }
        let r = ((a + kf + 1.0) * (b + kf + 1.0) / ((c + kf + 1.0) * (kf + 2.0)) * z).abs().max(az);
        if r < 0.95 {
            let tail = term.abs() * r / (1.0 - r);
            if tail <= SERIES_TOL * sum.abs() {
                return Ok(SeriesResult { value: sum, abs_err_est: tail + rounding, terms_used: k + 1, converged: true });
            }
        }
    }
    Err(Error::SeriesBudget { what: "hypergeometric series", terms: SERIES_BUDGET })
}

fn polynomial(a: f64, b: f64, c: f64, z: f64, n: usize) -> Result<SeriesResult> {
    if n > SERIES_BUDGET {
        return Err(Error::SeriesBudget { what: "terminating hypergeometric series", terms: n });
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for k in 0..n {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        abs_sum += term.abs();
    }
    Ok(SeriesResult { value: sum, abs_err_est: 2.0 * f64::EPSILON * abs_sum * (1.0 + n as f64).sqrt(), terms_used: n + 1, converged: true })
}

/// Connection formula for c - a - b = m, a non-negative integer.
#[allow(clippy::too_many_arguments)]
fn log_case(m: usize, a: f64, b: f64, first: f64, second: f64, psi_a: f64, psi_b: f64, w: f64) -> Result<SeriesResult> {
    if w == 0.0 {
        if m == 0 {
            return Err(Error::Divergent(0.0));
        }
        return Ok(SeriesResult { value: first, abs_err_est: 8.0 * f64::EPSILON * first.abs(), terms_used: 0, converged: true });
    }
    let mf = m as f64;
    let mut value = 0.0;
    let mut abs_err = 0.0;
    let mut terms = 0;
    if m > 0 {
        let mut t = 1.0f64;
        let mut s = 1.0f64;
        let mut abs_s = 1.0f64;
        for n in 1..m {
            let nf = (n - 1) as f64;
            t *= (a + nf) * (b + nf) / ((nf + 1.0) * (1.0 - mf + nf)) * w;
            s += t;
            abs_s += t.abs();
        }
        value += first * s;
        abs_err += first.abs() * (4.0 * f64::EPSILON * abs_s + 8.0 * f64::EPSILON * s.abs());
        terms += m;
    }
    if second != 0.0 {
        let lw = w.ln();
        let mut psi_n1 = -EULER_GAMMA;
        let mut psi_nm1 = -EULER_GAMMA + (1..=m).map(|k| 1.0 / k as f64).sum::<f64>();
        let mut psi_an = psi_a;
        let mut psi_bn = psi_b;
        let mut t = 1.0 / (1..=m).map(|k| k as f64).product::<f64>();
        let mut sum = 0.0f64;
        let mut abs_sum = 0.0f64;
        let mut done = false;
        for n in 0..SERIES_BUDGET {
            let nf = n as f64;
            let bracket = lw - psi_n1 - psi_nm1 + psi_an + psi_bn;
            let term = t * bracket;
            sum += term;
            abs_sum += t.abs() * (lw.abs() + psi_n1.abs() + psi_nm1.abs() + psi_an.abs() + psi_bn.abs());
            let ap = a + mf + nf;
            let bp = b + mf + nf;
            let ratio = ap * bp / ((nf + 1.0) * (nf + mf + 1.0)) * w;
            psi_n1 += 1.0 / (nf + 1.0);
            psi_nm1 += 1.0 / (nf + mf + 1.0);
            psi_an += 1.0 / ap;
            psi_bn += 1.0 / bp;
            t *= ratio;
            terms += 1;
            if t == 0.0 {
                done = true;
                break;
            }
            let r = (ratio.abs().max(w)) * 1.05;
            if r < 0.95 {
                let next = (t * (lw - psi_n1 - psi_nm1 + psi_an + psi_bn)).abs();
                let tail = (next + t.abs()) * 1.0 / (1.0 - r);
                if tail <= SERIES_TOL * sum.abs() {
                    abs_err += tail * (second * w.powi(m as i32)).abs();
                    done = true;
                    break;
                }
            }
        }
        if !done {
            return Err(Error::SeriesBudget { what: "logarithmic hypergeometric series", terms: SERIES_BUDGET });
        }
        let f = second * w.powi(m as i32);
        value -= f * sum;
        abs_err += f.abs() * (2.0 * f64::EPSILON * abs_sum + 8.0 * f64::EPSILON * sum.abs());
    }
    Ok(SeriesResult { value, abs_err_est: abs_err, terms_used: terms, converged: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(a: f64, b: f64, c: f64, z: f64) -> f64 {
        gauss_2f1(HypParams::new(a, b, c, z)).unwrap().value
    }

    #[test]
    fn elementary_closed_forms() {
        // F(1,1;2;z) = -ln(1-z)/z
        for &z in &[-5.0, -0.7, -0.2, 0.3, 0.7, 0.99] {
            let exact = -(1.0f64 - z).ln() / z;
            assert!((f(1.0, 1.0, 2.0, z) - exact).abs() < 1e-14 * exact.abs(), "z = {z}");
        }
        // F(a,b;b;z) = (1-z)^-a
        for &z in &[-3.0, -0.6, 0.4, 0.8] {
            let exact = (1.0f64 - z).powf(-0.3);
            assert!((f(0.3, 1.7, 1.7, z) - exact).abs() < 1e-14 * exact, "z = {z}");
        }
    }

    #[test]
    fn gauss_sum_at_unity() {
        let (a, b, c) = (0.3, 0.4, 1.9);
        let exact = gamma(c).unwrap() * gamma(c - a - b).unwrap() / (gamma(c - a).unwrap() * gamma(c - b).unwrap());
        assert!((f(a, b, c, 1.0) - exact).abs() < 1e-14 * exact);
        assert!(matches!(gauss_2f1(HypParams::new(0.5, 0.5, 1.0, 1.0)), Err(Error::Divergent(_))));
        assert!(matches!(gauss_2f1(HypParams::new(0.5, 0.5, 1.0, 1.5)), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(HypParams::new(0.5, 0.5, -1.0, 0.2)), Err(Error::Parameter(_))));
    }

    #[test]
    fn near_integer_s_is_continuous() {
        // s = c - a - b straddling 1 and 0
        for &s0 in &[1.0, 0.0, -1.0] {
            let mut prev = None;
            for &d in &[-3e-4, -1e-4, -1e-9, 0.0, 1e-9, 1e-4, 3e-4] {
                let c = 0.3 + 0.45 + s0 + d;
                let v = f(0.3, 0.45, c, 0.93);
                if let Some(p) = prev {
                    let pv: f64 = p;
                    assert!(((v - pv) / v).abs() < 1e-3, "s0 = {s0}, d = {d}");
                }
                prev = Some(v);
            }
        }
    }

    #[test]
    fn symmetric_in_a_and_b() {
        let p = HypParams::new(0.6, -0.35, 1.2, -3.5);
        let q = HypParams::new(-0.35, 0.6, 1.2, -3.5);
        assert_eq!(gauss_2f1(p).unwrap().value, gauss_2f1(q).unwrap().value);
    }
}

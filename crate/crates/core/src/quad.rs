//! Double-exponential quadrature for the two integral shapes used by the
//! product representations:
//!
//! * semi-infinite: ∫_L^∞ e^{-t} (t - L)^α g(t) dt
//! * finite:        ∫_L^U (t - L)^α (U - t)^β g(t) dt
//!
//! Endpoint powers are applied analytically in the node weights, so `g` only
//! has to be smooth. The integrand receives a [`Node`] carrying the exact
//! distances to both endpoints, which lets it form factors such as
//! `x^2 - 2t` without cancellation.
//!
//! Finite intervals use the tanh-sinh rule. Semi-infinite intervals are split
//! at a knot `L + T`: tanh-sinh on `[L, L + T]` and exp-sinh beyond.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::gamma;

pub const DEFAULT_REL_TOL: f64 = 1e-11;
pub const DEFAULT_ABS_TOL: f64 = 1e-14;
pub const DEFAULT_MAX_EVALS: usize = 200_000;
/// Environment variable overriding the evaluation budget.
pub const MAX_EVALS_ENV: &str = "PCFPROD_MAX_EVALS";

const H0: f64 = 0.5;
const MIN_LEVEL: usize = 2;
const NEGLIGIBLE: f64 = 1e-20;
const U_CAP: f64 = 7.0;
/// Endpoint exponents below this get endpoint subtraction.
pub const SUBTRACT_BELOW: f64 = -0.75;

/// Quadrature node handed to the integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    pub t: f64,
    /// `t - lower`, computed without cancellation.
    pub from_lower: f64,
    /// `upper - t`; infinite for the semi-infinite shape.
    pub to_upper: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Shape {
    SemiInfinite,
    Finite,
}

pub type Integrand<'a> = &'a dyn Fn(Node) -> Result<f64>;

/// Description of one integral.
pub struct QuadSpec<'a> {
    pub shape: Shape,
    pub lower: f64,
    /// Ignored for the semi-infinite shape.
    pub upper: f64,
    pub left_exponent: f64,
    pub right_exponent: f64,
    pub smooth_factor: Integrand<'a>,
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
    /// Length T of the finite head of a semi-infinite integral.
    pub knot: Option<f64>,
}

impl<'a> QuadSpec<'a> {
    pub fn semi_infinite(lower: f64, left_exponent: f64, g: Integrand<'a>) -> QuadSpec<'a> {
        QuadSpec {
            shape: Shape::SemiInfinite,
            lower,
            upper: f64::INFINITY,
            left_exponent,
            right_exponent: 0.0,
            smooth_factor: g,
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
            max_evals: DEFAULT_MAX_EVALS,
            knot: None,
        }
    }

    pub fn finite(lower: f64, upper: f64, left_exponent: f64, right_exponent: f64, g: Integrand<'a>) -> QuadSpec<'a> {
        QuadSpec {
            shape: Shape::Finite,
            lower,
            upper,
            left_exponent,
            right_exponent,
            smooth_factor: g,
            rel_tol: DEFAULT_REL_TOL,
            abs_tol: DEFAULT_ABS_TOL,
            max_evals: DEFAULT_MAX_EVALS,
            knot: None,
        }
    }

    pub fn tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn max_evals(mut self, n: usize) -> Self {
        self.max_evals = n;
        self
    }

    pub fn knot(mut self, t: f64) -> Self {
        self.knot = Some(t);
        self
    }

    fn validate(&self) -> Result<()> {
        if !self.lower.is_finite() {
            return Err(Error::Spec(format!("lower limit {} is not finite", self.lower)));
        }
        if !(self.left_exponent > -1.0) {
            return Err(Error::Spec(format!("left exponent {} must exceed -1", self.left_exponent)));
        }
        if self.shape == Shape::Finite {
            if !self.upper.is_finite() || self.upper < self.lower {
                return Err(Error::Spec(format!("invalid interval [{}, {}]", self.lower, self.upper)));
            }
            if !(self.right_exponent > -1.0) {
                return Err(Error::Spec(format!("right exponent {} must exceed -1", self.right_exponent)));
            }
        }
        if !(self.rel_tol > 0.0) || !(self.abs_tol >= 0.0) {
            return Err(Error::Spec("tolerances must be positive".into()));
        }
        if let Some(k) = self.knot {
            if !(k > 0.0 && k.is_finite()) {
                return Err(Error::Spec(format!("knot {k} must be positive")));
            }
        }
        if self.max_evals == 0 {
            return Err(Error::Spec("evaluation budget is zero".into()));
        }
        Ok(())
    }
}

/// Result of an integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadOutcome {
    pub value: f64,
    pub abs_err_est: f64,
    pub evals: usize,
    pub converged: bool,
}

impl QuadOutcome {
    pub fn zero() -> QuadOutcome {
        QuadOutcome { value: 0.0, abs_err_est: 0.0, evals: 0, converged: true }
    }
}

/// Evaluation budget from [`MAX_EVALS_ENV`], or the default.
pub fn max_evals_from_env() -> usize {
    std::env::var(MAX_EVALS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(DEFAULT_MAX_EVALS)
}

#[derive(Clone, Copy)]
enum Rule {
    /// tanh-sinh on [a, a + len]; `exp_weight` multiplies by e^{-t}.
    TanhSinh { a: f64, len: f64, alpha: f64, beta: f64, exp_weight: bool, upper: f64 },
    /// exp-sinh on [lower + knot, ∞) with weight e^{-t} (t - lower)^α.
    ExpSinh { lower: f64, knot: f64, alpha: f64 },
}

struct Sample {
    term: f64,
    weight: f64,
    node: Node,
    /// Integrand density in t at the node.
    density: f64,
}

impl Rule {
    /// Node, log-weight and log of the weight function alone at abscissa u;
    /// `None` once the node leaves the representable range.
    fn node(&self, u: f64) -> Option<(Node, f64, f64)> {
        match *self {
            Rule::TanhSinh { a, len, alpha, beta, exp_weight, upper } => {
                let s = FRAC_PI_2 * u.sinh();
                let e = (-2.0 * s.abs()).exp();
                let near = len * e / (1.0 + e);
                let far = len / (1.0 + e);
                let (dl, du) = if s >= 0.0 { (far, near) } else { (near, far) };
                if dl < 1e-300 || du < 1e-300 {
                    return None;
                }
                let t = if s >= 0.0 { a + len - du } else { a + dl };
                let ln_cosh = u.abs() + (-2.0 * u.abs()).exp().ln_1p() - std::f64::consts::LN_2;
                let mut lw = len.ln() + PI.ln() + ln_cosh - 2.0 * s.abs() - 2.0 * e.ln_1p();
                let jac = lw;
                if alpha != 0.0 {
                    lw += alpha * dl.ln();
                }
                if beta != 0.0 {
                    lw += beta * du.ln();
                }
                if exp_weight {
                    lw -= t;
                }
                let to_upper = if upper.is_finite() { du } else { f64::INFINITY };
                Some((Node { t, from_lower: dl, to_upper }, lw, lw - jac))
            }
            Rule::ExpSinh { lower, knot, alpha } => {
                let ls = FRAC_PI_2 * u.sinh();
                if ls > 7.0 {
                    return None;
                }
                let sigma = ls.exp();
                let from_lower = knot + sigma;
                let t = lower + from_lower;
                let ln_cosh = u.abs() + (-2.0 * u.abs()).exp().ln_1p() - std::f64::consts::LN_2;
                let jac = ls + FRAC_PI_2.ln() + ln_cosh;
                let mut lw = jac - t;
                if alpha != 0.0 {
                    lw += alpha * from_lower.ln();
                }
                Some((Node { t, from_lower, to_upper: f64::INFINITY }, lw, lw - jac))
            }
        }
    }

    fn sample(&self, u: f64, g: Integrand<'_>, evals: &mut usize) -> Result<Option<Sample>> {
        let Some((node, lw, lwt)) = self.node(u) else { return Ok(None) };
        let weight = lw.exp();
        if weight == 0.0 {
            return Ok(Some(Sample { term: 0.0, weight: 0.0, node, density: 0.0 }));
        }
        *evals += 1;
        let v = g(node)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { t: node.t, value: v });
        }
        Ok(Some(Sample { term: weight * v, weight, node, density: lwt.exp() * v }))
    }

    /// Mass of an endpoint beyond the last representable node, modelled as
    /// density × δ/(exponent + 1).
    fn truncated_mass(&self, last: &Sample, dir: f64) -> f64 {
        let Rule::TanhSinh { alpha, beta, .. } = *self else { return 0.0 };
        let (delta, e) = if dir < 0.0 { (last.node.from_lower, alpha) } else { (last.node.to_upper, beta) };
        if !delta.is_finite() {
            return 0.0;
        }
        (last.density * delta / (e + 1.0)).abs()
    }
}

struct Panel {
    rule: Rule,
    u_lo: f64,
    u_hi: f64,
    sum: f64,
    abs_sum: f64,
    level: usize,
    estimate: f64,
    previous: f64,
    /// Estimated integrand mass lost beyond the representable nodes.
    truncation: f64,
}

impl Panel {
    fn start(rule: Rule, g: Integrand<'_>, evals: &mut usize) -> Result<Panel> {
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        let mut max_term = 0.0f64;
        let mut max_weight = 0.0f64;
        if let Some(s) = rule.sample(0.0, g, evals)? {
            sum += s.term;
            abs_sum += s.term.abs();
            max_term = s.term.abs();
            max_weight = s.weight;
        }
        let mut bounds = [0.0f64; 2];
        let mut truncation = 0.0;
        for (d, dir) in [-1.0f64, 1.0].into_iter().enumerate() {
            let mut k = 1;
            let mut quiet = 0;
            let mut last: Option<Sample> = None;
            loop {
                let u = dir * k as f64 * H0;
                if u.abs() > U_CAP {
                    break;
                }
                let Some(s) = rule.sample(u, g, evals)? else {
                    if let Some(l) = &last {
                        truncation += rule.truncated_mass(l, dir);
                    }
                    break;
                };
                sum += s.term;
                abs_sum += s.term.abs();
                bounds[d] = u;
                max_term = max_term.max(s.term.abs());
                max_weight = max_weight.max(s.weight);
                if s.term.abs() <= NEGLIGIBLE * max_term && s.weight <= NEGLIGIBLE * max_weight {
                    quiet += 1;
                    if quiet >= 2 {
                        break;
                    }
                } else {
                    quiet = 0;
                }
                last = Some(s);
                k += 1;
            }
        }
        let estimate = H0 * sum;
        Ok(Panel { rule, u_lo: bounds[0], u_hi: bounds[1], sum, abs_sum, level: 0, estimate, previous: f64::NAN, truncation })
    }

    fn points_next_level(&self) -> usize {
        let h = H0 / 2f64.powi(self.level as i32 + 1);
        ((self.u_hi - self.u_lo) / (2.0 * h)).ceil() as usize + 1
    }

    fn refine(&mut self, g: Integrand<'_>, evals: &mut usize) -> Result<()> {
        self.level += 1;
        let h = H0 / 2f64.powi(self.level as i32);
        let mut u = self.u_lo + h;
        while u < self.u_hi {
            if let Some(s) = self.rule.sample(u, g, evals)? {
                self.sum += s.term;
                self.abs_sum += s.term.abs();
            }
            u += 2.0 * h;
        }
        self.previous = self.estimate;
        self.estimate = h * self.sum;
        Ok(())
    }

    fn h(&self) -> f64 {
        H0 / 2f64.powi(self.level as i32)
    }

    fn error(&self) -> f64 {
        let diff = if self.previous.is_nan() { self.estimate.abs() } else { (self.estimate - self.previous).abs() };
        diff + 16.0 * f64::EPSILON * self.h() * self.abs_sum + self.truncation
    }
}

fn run(rules: &[Rule], spec: &QuadSpec, g: Integrand<'_>, offset: f64) -> Result<QuadOutcome> {
    let mut evals = 0usize;
    let mut panels = Vec::with_capacity(rules.len());
    for &r in rules {
        panels.push(Panel::start(r, g, &mut evals)?);
    }
    loop {
        let value: f64 = offset + panels.iter().map(|p| p.estimate).sum::<f64>();
        let err: f64 = panels.iter().map(Panel::error).sum::<f64>() + 4.0 * f64::EPSILON * offset.abs();
        let target = spec.abs_tol.max(spec.rel_tol * value.abs());
        let level = panels[0].level;
        if level >= MIN_LEVEL && err <= target {
            return Ok(QuadOutcome { value, abs_err_est: err, evals, converged: true });
        }
        let next: usize = panels.iter().map(Panel::points_next_level).sum();
        if evals + next > spec.max_evals || level >= 14 {
            return Ok(QuadOutcome { value, abs_err_est: err, evals, converged: false });
        }
        for p in panels.iter_mut() {
            p.refine(g, &mut evals)?;
        }
    }
}

/// Endpoint value of the smooth factor, if it is finite there.
fn endpoint(g: Integrand<'_>, node: Node) -> Option<f64> {
    g(node).ok().filter(|v| v.is_finite())
}

/// Integrate one [`QuadSpec`].
///
/// When an endpoint exponent is below [`SUBTRACT_BELOW`] the endpoint value
/// of the smooth factor is subtracted and its contribution added in closed
/// form, since the mass of t^α for α near -1 sits below the smallest
/// representable node.
///
/// Budget exhaustion is not an error: the outcome carries `converged = false`
/// and the best available estimate.
pub fn integrate(spec: &QuadSpec) -> Result<QuadOutcome> {
    spec.validate()?;
    let g = spec.smooth_factor;
    let (alpha, beta) = (spec.left_exponent, spec.right_exponent);
    match spec.shape {
        Shape::Finite => {
            let len = spec.upper - spec.lower;
            if len == 0.0 {
                return Ok(QuadOutcome::zero());
            }
            let rule = Rule::TanhSinh { a: spec.lower, len, alpha, beta, exp_weight: false, upper: spec.upper };
            let ga = if alpha < SUBTRACT_BELOW {
                endpoint(g, Node { t: spec.lower, from_lower: 0.0, to_upper: len })
            } else {
                None
            };
            let gb = if beta < SUBTRACT_BELOW {
                endpoint(g, Node { t: spec.upper, from_lower: len, to_upper: 0.0 })
            } else {
                None
            };
            let scale = len.powf(alpha + beta + 1.0);
            let (ga, gb) = (ga.unwrap_or(0.0), gb.unwrap_or(0.0));
            if ga == 0.0 && gb == 0.0 {
                return run(&[rule], spec, g, 0.0);
            }
            // subtract ga (du/L) + gb (dl/L), or a constant when only one end is treated
            let wa = if ga != 0.0 && gb != 0.0 { 1.0 } else { 0.0 };
            let offset = if wa == 0.0 {
                (ga + gb) * scale * beta_fn(alpha + 1.0, beta + 1.0)?
            } else {
                scale * (ga * beta_fn(alpha + 1.0, beta + 2.0)? + gb * beta_fn(alpha + 2.0, beta + 1.0)?)
            };
            let h = move |n: Node| -> Result<f64> {
                let c = if wa == 0.0 { ga + gb } else { (ga * n.to_upper + gb * n.from_lower) / len };
                Ok(g(n)? - c)
            };
            run(&[rule], spec, &h, offset)
        }
        Shape::SemiInfinite => {
            let knot = spec.knot.unwrap_or(1.0);
            let head = Rule::TanhSinh { a: spec.lower, len: knot, alpha, beta: 0.0, exp_weight: true, upper: f64::INFINITY };
            let tail = Rule::ExpSinh { lower: spec.lower, knot, alpha };
            let g0 = if alpha < SUBTRACT_BELOW {
                endpoint(g, Node { t: spec.lower, from_lower: 0.0, to_upper: f64::INFINITY }).unwrap_or(0.0)
            } else {
                0.0
            };
            if g0 == 0.0 {
                return run(&[head, tail], spec, g, 0.0);
            }
            let offset = g0 * (-spec.lower).exp() * gamma(alpha + 1.0)?;
            let h = move |n: Node| -> Result<f64> { Ok(g(n)? - g0) };
            run(&[head, tail], spec, &h, offset)
        }
    }
}

fn beta_fn(p: f64, q: f64) -> Result<f64> {
    Ok(gamma(p)? * gamma(q)? / gamma(p + q)?)
}

/// Integrate two adjacent pieces and add the results.
pub fn integrate_split(left: &QuadSpec, right: &QuadSpec) -> Result<QuadOutcome> {
    if left.shape != Shape::Finite {
        return Err(Error::Spec("the left piece of a split must be finite".into()));
    }
    if left.upper != right.lower {
        return Err(Error::Spec(format!("pieces do not meet: {} vs {}", left.upper, right.lower)));
    }
    let a = integrate(left)?;
    let b = integrate(right)?;
    Ok(QuadOutcome {
        value: a.value + b.value,
        abs_err_est: a.abs_err_est + b.abs_err_est,
        evals: a.evals + b.evals,
        converged: a.converged && b.converged,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1e-300)
    }

    #[test]
    fn gamma_integrals() {
        // ∫_0^∞ e^{-t} t^α dt = Γ(α + 1)
        for &alpha in &[-0.9, -0.5, 0.0, 0.7, 2.5] {
            let g = |_: Node| Ok(1.0);
            let r = integrate(&QuadSpec::semi_infinite(0.0, alpha, &g)).unwrap();
            let exact = crate::specfun::gamma(alpha + 1.0).unwrap();
            assert!(r.converged, "alpha = {alpha}");
            assert!(close(r.value, exact, 1e-12), "alpha = {alpha}: {} vs {exact}", r.value);
        }
    }

    #[test]
    fn beta_integral() {
        // ∫_0^1 t^{-0.7} (1-t)^{-0.4} dt = B(0.3, 0.6)
        let g = |_: Node| Ok(1.0);
        let r = integrate(&QuadSpec::finite(0.0, 1.0, -0.7, -0.4, &g)).unwrap();
        let exact = crate::specfun::reductions::beta(0.3, 0.6).unwrap();
        assert!(r.converged);
        assert!(close(r.value, exact, 1e-12));
    }

    #[test]
    fn shifted_lower_limit() {
        // ∫_2^∞ e^{-t} (t-2)^{1/2} dt = e^{-2} Γ(3/2)
        let g = |_: Node| Ok(1.0);
        let r = integrate(&QuadSpec::semi_infinite(2.0, 0.5, &g)).unwrap();
        assert!(close(r.value, (-2.0f64).exp() * std::f64::consts::PI.sqrt() / 2.0, 1e-12));
    }

    #[test]
    fn node_distances_are_exact() {
        let g = |n: Node| {
            assert!((n.t - 1.0 - n.from_lower).abs() <= 1e-15 * n.t.abs().max(1.0));
            assert!((3.0 - n.t - n.to_upper).abs() <= 1e-15 * 3.0);
            Ok(1.0)
        };
        let r = integrate(&QuadSpec::finite(1.0, 3.0, 0.0, 0.0, &g)).unwrap();
        assert!(close(r.value, 2.0, 1e-13));
    }

    #[test]
    fn split_at_one() {
        let left_g = |n: Node| Ok((-n.t).exp());
        let one = |_: Node| Ok(1.0);
        let left = QuadSpec::finite(0.0, 1.0, 0.0, 0.0, &left_g);
        let right = QuadSpec::semi_infinite(1.0, 0.0, &one);
        let r = integrate_split(&left, &right).unwrap();
        assert!(close(r.value, 1.0, 1e-13));
        let rr = integrate(&right).unwrap();
        assert!(close(rr.value, (-1.0f64).exp(), 1e-13));
    }

    #[test]
    fn invalid_specs() {
        let g = |_: Node| Ok(1.0);
        assert!(integrate(&QuadSpec::semi_infinite(0.0, -1.0, &g)).is_err());
        assert!(integrate(&QuadSpec::finite(1.0, 0.0, 0.0, 0.0, &g)).is_err());
        assert!(integrate(&QuadSpec::finite(0.0, 1.0, 0.0, -1.5, &g)).is_err());
        let bad = |_: Node| Ok(f64::NAN);
        assert!(matches!(integrate(&QuadSpec::finite(0.0, 1.0, 0.0, 0.0, &bad)), Err(Error::NonFinite { .. })));
    }

    #[test]
    fn tiny_budget_reports_non_convergence() {
        let g = |n: Node| Ok((10.0 * n.t).sin());
        let r = integrate(&QuadSpec::semi_infinite(0.0, 0.0, &g).max_evals(60)).unwrap();
        assert!(!r.converged);
        assert!(r.abs_err_est > 0.0);
    }
}

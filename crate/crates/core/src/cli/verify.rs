//! Verification suites and the machine-readable report they produce.

use std::f64::consts::PI;

use serde::Serialize;

use crate::dd::{self, Dd};
use crate::error::Result;
use crate::oracle::{direct_product, laplace_residual, reference, LaplaceIdentity};
use crate::pcf::{pcf_d, pcf_sum_residuals};
use crate::products::{EvalPoint, Evaluator, Representation};
use crate::quad::{integrate, Node, QuadSpec};
use crate::specfun::reductions::{arcsin_form, b_plus_one_via_beta, beta, one_three_halves_via_beta, quadratic_via_ferrers, three_halves_via_ferrers};
use crate::specfun::{bessel_i, bessel_k, elliptic_k, erfc, gamma, gauss_2f1, kummer_phi, legendre_p, legendre_p_equal, rgamma, HypParams};

/// Absolute floor of the product comparisons near zeros of the oracle.
pub const ABS_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Products,
    Laplace,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Products => "products",
            Suite::Laplace => "laplace",
        }
    }
}

/// One checked value against its reference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub suite: &'static str,
    /// Representation tag for product rows, check name otherwise.
    pub rep: String,
    pub nu: f64,
    pub mu: f64,
    pub x: f64,
    pub y: f64,
    pub value: f64,
    pub abs_err_est: f64,
    pub oracle: f64,
    pub rel_diff: f64,
    pub threshold: f64,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Evidence for one coefficient × integral term of (4.3)/(4.4): the factor
/// the coefficient would need for the terms to sum to the oracle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditRow {
    pub rep: &'static str,
    pub nu: f64,
    pub mu: f64,
    pub x: f64,
    pub y: f64,
    pub term: &'static str,
    pub coefficient: f64,
    pub term_value: f64,
    pub implied_factor: Option<f64>,
    /// Whether a factor of 2 in this coefficient would exceed the tolerance.
    pub factor_two_detectable: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub max_rel_diff: f64,
    pub audit_terms: usize,
    pub audit_failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    /// Tolerance of the product and Laplace comparisons; identity rows carry
    /// their own thresholds.
    pub tol: f64,
    pub abs_floor: f64,
    pub suites: Vec<&'static str>,
    pub rows: Vec<ReportRow>,
    pub audit: Vec<AuditRow>,
    pub summary: Summary,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0 && self.summary.audit_failed == 0
    }

    /// Rows whose `rep` field starts with `prefix`.
    pub fn rows_for<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a ReportRow> + 'a {
        self.rows.iter().filter(move |r| r.rep.starts_with(prefix))
    }
}

struct Rows {
    suite: &'static str,
    rows: Vec<ReportRow>,
}

impl Rows {
    fn new(suite: Suite) -> Rows {
        Rows { suite: suite.name(), rows: Vec::new() }
    }

    /// Relative comparison with an absolute floor.
    #[allow(clippy::too_many_arguments)]
    fn compare(&mut self, rep: &str, p: [f64; 4], value: f64, abs_err_est: f64, oracle: f64, threshold: f64, floor: f64, detail: String) {
        let diff = (value - oracle).abs();
        let rel_diff = if oracle == 0.0 { diff } else { diff / oracle.abs() };
        let pass = diff.is_finite() && diff <= (threshold * oracle.abs()).max(floor);
        self.rows.push(ReportRow {
            suite: self.suite,
            rep: rep.to_string(),
            nu: p[0],
            mu: p[1],
            x: p[2],
            y: p[3],
            value,
            abs_err_est,
            oracle,
            rel_diff,
            threshold,
            pass,
            detail,
        });
    }

    fn rel(&mut self, rep: &str, p: [f64; 4], value: f64, oracle: f64, threshold: f64) {
        self.compare(rep, p, value, 0.0, oracle, threshold, 0.0, String::new());
    }

    /// A residual already scaled to a relative quantity.
    fn residual(&mut self, rep: &str, p: [f64; 4], residual: f64, threshold: f64) {
        let pass = residual.is_finite() && residual <= threshold;
        self.rows.push(ReportRow {
            suite: self.suite,
            rep: rep.to_string(),
            nu: p[0],
            mu: p[1],
            x: p[2],
            y: p[3],
            value: residual,
            abs_err_est: 0.0,
            oracle: 0.0,
            rel_diff: residual,
            threshold,
            pass,
            detail: String::new(),
        });
    }

    fn failure(&mut self, rep: &str, p: [f64; 4], threshold: f64, err: &crate::Error) {
        self.rows.push(ReportRow {
            suite: self.suite,
            rep: rep.to_string(),
            nu: p[0],
            mu: p[1],
            x: p[2],
            y: p[3],
            value: f64::NAN,
            abs_err_est: f64::NAN,
            oracle: f64::NAN,
            rel_diff: f64::INFINITY,
            threshold,
            pass: false,
            detail: err.to_string(),
        });
    }

    fn try_rel(&mut self, rep: &str, p: [f64; 4], threshold: f64, f: impl FnOnce() -> Result<(f64, f64)>) {
        match f() {
            Ok((v, o)) => self.rel(rep, p, v, o, threshold),
            Err(e) => self.failure(rep, p, threshold, &e),
        }
    }
}

fn agm_k(m: f64) -> f64 {
    let (mut a, mut b) = (1.0f64, (1.0 - m).sqrt());
    for _ in 0..60 {
        let (an, bn) = (0.5 * (a + b), (a * b).sqrt());
        a = an;
        b = bn;
        if (a - b).abs() <= 1e-17 * a {
            break;
        }
    }
    PI / (2.0 * a)
}

fn f21(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    Ok(gauss_2f1(HypParams::new(a, b, c, z))?.value)
}

/// Identity and special-value checks of the special-function and D_ν layers.
pub fn identities_suite() -> Vec<ReportRow> {
    let mut r = Rows::new(Suite::Identities);

    for &a in &[-0.9, -0.3, 0.4] {
        for &b in &[0.5, 1.5] {
            for &z in &[0.5, 2.0, 10.0] {
                r.try_rel("kummer-transform", [a, b, 0.0, z], 1e-10, || {
                    let lhs = kummer_phi(a, b, z)?.value;
                    let (inner, _) = dd::kummer(Dd::new(b - a), Dd::new(b), Dd::new(-z), 500)?;
                    Ok((lhs, (Dd::new(z).exp() * inner).to_f64()))
                });
            }
        }
    }

    for &nu in &[-2.0, -1.2, -0.5, 0.3, 1.5] {
        for &z in &[0.0, 0.8, 2.0, 4.0] {
            match pcf_sum_residuals(nu, z) {
                Ok(s) => {
                    r.residual("pcf-sum", [nu, 0.0, z, 0.0], s.sum, 1e-10);
                    r.residual("pcf-difference", [nu, 0.0, z, 0.0], s.difference, 1e-10);
                }
                Err(e) => r.failure("pcf-sum", [nu, 0.0, z, 0.0], 1e-10, &e),
            }
        }
    }

    for &z in &[-2.0, -0.5, 0.0, 0.5, 2.0, 5.0] {
        r.try_rel("pcf-erfc", [-1.0, 0.0, z, 0.0], 1e-10, || {
            Ok((pcf_d(-1.0, z)?.value, (z * z / 4.0).exp() * (PI / 2.0).sqrt() * erfc(z / 2f64.sqrt())))
        });
    }
    for &z in &[0.25, 1.0, 1.3, 3.0] {
        r.try_rel("pcf-bessel-k", [-0.5, 0.0, z, 0.0], 1e-10, || {
            Ok((pcf_d(-0.5, z)?.value, (z / (2.0 * PI)).sqrt() * bessel_k(0.25, z * z / 4.0)?))
        });
    }

    // D_ν(-x) D_μ(y) from the two factorizations through Φ
    for &nu in &[-1.75, -1.0, -0.5, -0.1] {
        for &mu in &[-1.5, -0.5, 0.5, 0.9] {
            for &x in &[0.25, 1.0, 2.5] {
                for &y in &[0.0, 1.0, 2.5] {
                    let p = [nu, mu, x, y];
                    let direct = || -> Result<(f64, f64, f64)> {
                        let dm = pcf_d(mu, y)?.value;
                        let dx = pcf_d(nu, x)?.value;
                        let g = (-x * x / 4.0).exp() * PI.sqrt();
                        let a = dx * dm + x * 2f64.powf((nu + 3.0) / 2.0) * g * rgamma(-nu / 2.0) * dm * kummer_phi((1.0 - nu) / 2.0, 1.5, x * x / 2.0)?.value;
                        let b = -dx * dm + 2f64.powf((nu + 2.0) / 2.0) * g * rgamma((1.0 - nu) / 2.0) * dm * kummer_phi(-nu / 2.0, 0.5, x * x / 2.0)?.value;
                        Ok((a, b, pcf_d(nu, -x)?.value * dm))
                    };
                    match direct() {
                        Ok((a, b, o)) => {
                            r.rel("product-difference-form", p, a, o, 1e-9);
                            r.rel("product-sum-form", p, b, o, 1e-9);
                        }
                        Err(e) => r.failure("product-difference-form", p, 1e-9, &e),
                    }
                }
            }
        }
    }

    for &(a, z) in &[(0.75, 2.0), (0.3, 0.5), (1.6, 4.0)] {
        r.try_rel("kummer-bessel-i", [a, 2.0 * a, 0.0, z], 1e-11, || {
            let rhs = gamma(a + 0.5)? * (z / 4.0).powf(0.5 - a) * (z / 2.0).exp() * bessel_i(a - 0.5, z / 2.0)?;
            Ok((kummer_phi(a, 2.0 * a, z)?.value, rhs))
        });
    }

    let tuples = [
        (0.3, 0.7, 1.55),
        (-0.4, 0.25, 0.8),
        (1.2, -0.6, 2.1),
        (0.5, 0.5, 1.5),
        (-1.3, 0.9, 0.35),
        (2.2, 1.1, 3.7),
        (0.15, -0.85, 1.05),
        (-0.75, -0.3, 0.6),
        (0.9, 1.4, 0.45),
        (1.75, 0.2, 2.65),
    ];
    let z = 0.3;
    for &(a, b, c) in &tuples {
        let p = [a, b, c, z];
        r.try_rel("euler", p, 1e-11, || Ok((f21(a, b, c, z)?, (1.0 - z).powf(c - a - b) * f21(c - a, c - b, c, z)?)));
        let zt = z / (z - 1.0);
        r.try_rel("pfaff-a", p, 1e-11, || Ok((f21(a, b, c, z)?, (1.0 - z).powf(-a) * f21(a, c - b, c, zt)?)));
        r.try_rel("pfaff-b", p, 1e-11, || Ok((f21(a, b, c, z)?, (1.0 - z).powf(-b) * f21(c - a, b, c, zt)?)));
        r.rows.push(symmetry_row(r.suite, a, b, c));
    }

    for &(a, b) in &[(-0.2, 0.3), (0.25, 0.25)] {
        for &z in &[0.1, 0.5, 0.9] {
            let c = a + b + 0.5;
            r.try_rel("quadratic", [a, b, c, z], 1e-10, || Ok((f21(a, b, c, z)?, f21(2.0 * a, 2.0 * b, c, 0.5 * (1.0 - (1.0 - z).sqrt()))?)));
        }
    }

    for &(a, b) in &[(0.3, 0.4), (-0.2, 0.45), (0.6, 0.15)] {
        for &x in &[0.1, 0.5, 0.9] {
            r.try_rel("quadratic-ferrers", [a, b, a + b + 0.5, x], 1e-9, || Ok((quadratic_via_ferrers(a, b, x)?, f21(a, b, a + b + 0.5, x)?)));
        }
    }

    for &(a, b, z) in &[(0.3, 0.7, 0.4), (-0.5, 0.25, 0.8), (1.3, 1.5, 0.2), (0.8, 0.6, 0.95), (-1.2, 2.0, 0.5), (0.45, 0.1, 0.7)] {
        r.try_rel("beta-form", [a, b, b + 1.0, z], 1e-10, || Ok((b_plus_one_via_beta(a, b, z)?, f21(a, b, b + 1.0, z)?)));
    }

    for &(a, b) in &[(0.8, 0.7), (1.25, 0.9), (0.3, 0.45)] {
        for &x in &[0.1, 0.5, 0.9] {
            r.try_rel("three-halves-ferrers", [a, b, 1.5, x], 1e-9, || Ok((three_halves_via_ferrers(a, b, x)?, f21(a, b, 1.5, x)?)));
        }
    }

    for &m in &[0.0, 0.5, 0.9, 0.999999] {
        let tol = if m > 0.99 { 1e-10 } else { 1e-12 };
        r.try_rel("elliptic-k", [0.5, 0.5, 1.0, m], tol, || Ok((elliptic_k(m)?, agm_k(m))));
    }

    for &z in &[0.25f64, 0.5, 0.9] {
        r.try_rel("arcsin-form", [0.5, 0.5, 1.5, z * z], 1e-12, || Ok((f21(0.5, 0.5, 1.5, z * z)?, arcsin_form(z))));
    }

    for &nu in &[-0.5, -1.0, -1.7] {
        for &x in &[-0.6, 0.0, 0.5, 0.9] {
            r.try_rel("ferrers-equal", [nu, nu, x, 0.0], 1e-10, || Ok((legendre_p_equal(nu, x)?, legendre_p(nu, nu, x)?)));
        }
    }

    for &b in &[0.75, 1.25] {
        for &x in &[0.2, 0.6] {
            r.try_rel("one-three-halves-beta", [1.0, b, 1.5, x], 1e-9, || Ok((one_three_halves_via_beta(b, x)?, f21(1.0, b, 1.5, x)?)));
        }
    }

    for &(a, b, c) in &[(0.3, 0.4, 1.2), (-0.25, -0.3, 0.775), (0.5, 0.5, 1.5), (-1.5, 0.7, 0.1)] {
        r.try_rel("gauss-point", [a, b, c, 1.0], 1e-12, || {
            let closed = gamma(c)? * gamma(c - a - b)? * rgamma(c - a) * rgamma(c - b);
            Ok((f21(a, b, c, 1.0)?, closed))
        });
    }

    for row in quadrature_rows() {
        r.rows.push(row);
    }
    r.rows
}

fn symmetry_row(suite: &'static str, a: f64, b: f64, c: f64) -> ReportRow {
    let z = 0.3;
    let (u, v) = (f21(a, b, c, z), f21(b, a, c, z));
    let same = matches!((&u, &v), (Ok(p), Ok(q)) if p.to_bits() == q.to_bits());
    ReportRow {
        suite,
        rep: "symmetry".into(),
        nu: a,
        mu: b,
        x: c,
        y: z,
        value: u.unwrap_or(f64::NAN),
        abs_err_est: 0.0,
        oracle: v.unwrap_or(f64::NAN),
        rel_diff: if same { 0.0 } else { f64::INFINITY },
        threshold: 0.0,
        pass: same,
        detail: "bitwise".into(),
    }
}

/// Γ(α+1) and B(α+1, β+1) from the quadrature engine with g ≡ 1.
pub fn quadrature_rows() -> Vec<ReportRow> {
    let mut r = Rows::new(Suite::Identities);
    let one = |_: Node| -> Result<f64> { Ok(1.0) };
    let exps = [-0.9, -0.5, 0.0, 0.7];
    for &a in &exps {
        r.try_rel("quadrature-gamma", [a, 0.0, 0.0, 0.0], 1e-12, || {
            Ok((integrate(&QuadSpec::semi_infinite(0.0, a, &one))?.value, gamma(a + 1.0)?))
        });
        for &b in &exps {
            r.try_rel("quadrature-beta", [a, b, 0.0, 1.0], 1e-12, || {
                Ok((integrate(&QuadSpec::finite(0.0, 1.0, a, b, &one))?.value, beta(a + 1.0, b + 1.0)?))
            });
        }
    }
    r.rows
}

/// The product test grid.
pub const GRID_NU: [f64; 4] = [-1.75, -1.0, -0.5, -0.1];
pub const GRID_MU: [f64; 6] = [-1.5, -1.0, -0.5, 0.0, 0.5, 0.9];
pub const GRID_XY: [f64; 5] = [0.0, 0.25, 1.0, 2.5, 5.0];

/// Points of the product test grid inside the region of `rep`, in grid order.
pub fn product_grid(rep: Representation) -> Vec<EvalPoint> {
    let mut out = Vec::new();
    for &nu in &GRID_NU {
        for &mu in &GRID_MU {
            for &x in &GRID_XY {
                for &y in &GRID_XY {
                    let pt = EvalPoint::new(nu, mu, x, y);
                    let ok = rep.contains(&pt) && (rep != Representation::R42 || (x > 0.0 && y > 0.0));
                    if ok {
                        out.push(pt);
                    }
                }
            }
        }
    }
    out
}

/// The 3×3×3×3 grid for the D_ν·Φ representation.
pub fn phi_grid() -> Vec<EvalPoint> {
    let mut out = Vec::new();
    for &nu in &[-1.5, -0.5, -0.1] {
        for &mu in &[-1.5, 0.0, 0.9] {
            for &x in &[0.25, 1.0, 2.5] {
                for &y in &[0.25, 1.0, 2.5] {
                    out.push(EvalPoint::new(nu, mu, x, y));
                }
            }
        }
    }
    out
}

/// Points for the four specializations; unused orders are zero.
pub fn specialization_points(rep: Representation) -> Vec<EvalPoint> {
    let mut out = Vec::new();
    match rep {
        Representation::KK => {
            for &x in &[0.25, 1.0, 2.5] {
                for &y in &[0.5, 3.0] {
                    out.push(EvalPoint::new(0.0, 0.0, x, y));
                }
            }
        }
        Representation::Erfc2 => {
            for &x in &[0.0, 0.25, 1.0, 2.5] {
                for &y in &[0.0, 1.0, 2.5] {
                    out.push(EvalPoint::new(0.0, 0.0, x, y));
                }
            }
        }
        Representation::DI => {
            for &nu in &GRID_NU {
                for &x in &[0.25, 2.5] {
                    for &y in &[0.25, 3.0] {
                        out.push(EvalPoint::new(nu, 0.0, x, y));
                    }
                }
            }
        }
        Representation::DnegErfc => {
            for &nu in &GRID_NU {
                for &x in &[0.0, 1.0, 2.5] {
                    for &y in &[0.25, 1.5] {
                        out.push(EvalPoint::new(nu, 0.0, x, y));
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn pt4(p: &EvalPoint) -> [f64; 4] {
    [p.nu, p.mu, p.x, p.y]
}

fn oracle_rows(r: &mut Rows, ev: &Evaluator, rep: Representation, pts: &[EvalPoint], tol: f64) {
    for pt in pts {
        let o = match reference(rep, *pt) {
            Ok(o) => o,
            Err(e) => {
                r.failure(rep.tag(), pt4(pt), tol, &e);
                continue;
            }
        };
        match ev.eval(rep, *pt) {
            Ok(v) => r.compare(rep.tag(), pt4(pt), v.value, v.abs_err_est, o.value, tol, ABS_FLOOR, String::new()),
            Err(e) => r.failure(rep.tag(), pt4(pt), tol, &e),
        }
    }
}

/// Products against their oracles, cross-representation agreement and the
/// special values.
pub fn products_suite(ev: &Evaluator, tol: f64) -> Vec<ReportRow> {
    let mut r = Rows::new(Suite::Products);
    for rep in [Representation::R41, Representation::R42, Representation::R43, Representation::R44] {
        oracle_rows(&mut r, ev, rep, &product_grid(rep), tol);
    }
    oracle_rows(&mut r, ev, Representation::R51, &phi_grid(), tol);
    for rep in [Representation::KK, Representation::Erfc2, Representation::DI, Representation::DnegErfc] {
        oracle_rows(&mut r, ev, rep, &specialization_points(rep), tol);
    }

    for pt in product_grid(Representation::R42) {
        r.try_rel("4.2-vs-4.1", pt4(&pt), 1e-7, || Ok((ev.dd_legendre(pt)?.value, ev.dd(pt)?.value)));
    }
    for pt in product_grid(Representation::R44) {
        if pt.mu < 0.0 {
            r.try_rel("4.3-vs-4.4", pt4(&pt), 1e-7, || Ok((ev.dneg_d_43(pt)?.value, ev.dneg_d_44(pt)?.value)));
        }
    }
    for &(x, y) in &[(1.0, 1.0), (0.5, 2.0), (2.0, 0.25)] {
        let p = [-0.5, -0.5, x, y];
        r.try_rel("kk-via-4.1", p, tol, || {
            let dd = ev.dd(EvalPoint::new(-0.5, -0.5, 2.0 * x.sqrt(), 2.0 * y.sqrt()))?.value;
            let scale = (x.sqrt() / PI).sqrt() * (y.sqrt() / PI).sqrt();
            Ok((ev.kk(x, y)?.value, dd / scale))
        });
    }
    match ev.erfc2(0.0, 0.0) {
        Ok(v) => r.compare("erfc2-origin", [0.0; 4], v.value, v.abs_err_est, 1.0, 0.0, 1e-10, "absolute".into()),
        Err(e) => r.failure("erfc2-origin", [0.0; 4], 0.0, &e),
    }
    r.rows
}

/// Per-term audit of the three-integral forms on their grid slices.
pub fn audit(ev: &Evaluator, tol: f64) -> Vec<AuditRow> {
    let mut out = Vec::new();
    for rep in [Representation::R43, Representation::R44] {
        for pt in product_grid(rep).into_iter().filter(|p| p.x > 0.0) {
            let Ok(b) = ev.eval_terms(rep, pt) else {
                out.push(AuditRow {
                    rep: rep.tag(),
                    nu: pt.nu,
                    mu: pt.mu,
                    x: pt.x,
                    y: pt.y,
                    term: "all",
                    coefficient: f64::NAN,
                    term_value: f64::NAN,
                    implied_factor: None,
                    factor_two_detectable: false,
                    pass: false,
                });
                continue;
            };
            let target = direct_product(pt.nu, pt.mu, -pt.x, pt.y).map(|o| o.value).unwrap_or(f64::NAN);
            let first = direct_product(pt.nu, pt.mu, pt.x, pt.y).map(|o| o.value).unwrap_or(f64::NAN);
            let total: f64 = b.value();
            let scale = target.abs().max(ABS_FLOOR / tol);
            for (i, t) in b.terms.iter().enumerate() {
                let tv = t.value();
                let others = total - tv;
                let implied = if tv != 0.0 { Some((target - others) / tv) } else { None };
                let pass = match implied {
                    Some(f) => ((f - 1.0) * tv).abs() <= tol * scale,
                    None => (target - others).abs() <= tol * scale,
                };
                out.push(AuditRow {
                    rep: rep.tag(),
                    nu: pt.nu,
                    mu: pt.mu,
                    x: pt.x,
                    y: pt.y,
                    term: t.label,
                    coefficient: t.coefficient,
                    term_value: tv,
                    implied_factor: implied,
                    factor_two_detectable: tv.abs() > tol * scale,
                    pass,
                });
                if i == 0 {
                    // the first integral is ± the product at +x on its own
                    let sign = if rep == Representation::R44 { -1.0 } else { 1.0 };
                    let own = if tv != 0.0 { Some(sign * first / tv) } else { None };
                    out.push(AuditRow {
                        rep: rep.tag(),
                        nu: pt.nu,
                        mu: pt.mu,
                        x: pt.x,
                        y: pt.y,
                        term: "I1-direct",
                        coefficient: t.coefficient,
                        term_value: tv,
                        implied_factor: own,
                        factor_two_detectable: tv.abs() > tol * first.abs().max(ABS_FLOOR / tol),
                        pass: own.is_some_and(|f| ((f - 1.0) * tv).abs() <= tol * first.abs().max(ABS_FLOOR / tol)),
                    });
                }
            }
        }
    }
    out
}

/// Parameter tuples of the Laplace suite, three per identity.
pub fn laplace_tuples(id: LaplaceIdentity) -> [EvalPoint; 3] {
    let e = EvalPoint::new;
    match id {
        LaplaceIdentity::I31 => [e(-0.5, 0.0, 0.5, 0.0), e(-1.3, 0.0, 2.0, 0.0), e(-0.1, 0.0, 0.2, 0.0)],
        LaplaceIdentity::I32 => [e(0.0, 0.5, 0.0, 0.5), e(0.0, -1.5, 0.0, 2.0), e(0.0, 0.9, 0.0, 0.1)],
        LaplaceIdentity::I35 => [e(-0.5, 0.0, 1.0, 0.0), e(-1.7, 0.0, 2.0, 0.0), e(0.8, 0.0, 0.3, 0.0)],
        LaplaceIdentity::I38 => [e(-0.5, 0.0, 1.2, 0.0), e(-0.9, 0.0, 2.0, 0.0), e(-0.1, 0.0, 0.4, 0.0)],
        LaplaceIdentity::I33 => [e(-0.5, -0.5, 1.0, 1.0), e(-1.5, 0.5, 0.3, 2.0), e(-0.1, -1.0, 2.5, 0.2)],
        LaplaceIdentity::I37 => [e(-0.5, -0.7, 1.0, 0.8), e(-1.5, -0.2, 2.0, 0.3), e(0.5, -1.5, 0.5, 1.5)],
        LaplaceIdentity::I39 => [e(-0.5, 0.3, 1.2, 0.6), e(-0.9, -1.0, 0.5, 2.0), e(-0.2, 0.8, 2.0, 0.4)],
    }
}

pub const LAPLACE_P: [f64; 3] = [0.7, 1.0, 2.0];

pub fn laplace_suite(tol: f64) -> Vec<ReportRow> {
    let mut r = Rows::new(Suite::Laplace);
    for id in LaplaceIdentity::ALL {
        for pt in laplace_tuples(id) {
            for &p in &LAPLACE_P {
                let rep = format!("{}@p={p}", id.tag());
                match laplace_residual(id, p, pt) {
                    Ok(res) => r.residual(&rep, pt4(&pt), res, tol),
                    Err(e) => r.failure(&rep, pt4(&pt), tol, &e),
                }
            }
        }
    }
    r.rows
}

/// Run the selected suites and assemble the report.
pub fn run_suites(suites: &[Suite], ev: &Evaluator, tol: f64) -> VerifyReport {
    let mut rows = Vec::new();
    let mut audit_rows = Vec::new();
    for s in suites {
        match s {
            Suite::Identities => rows.extend(identities_suite()),
            Suite::Products => {
                rows.extend(products_suite(ev, tol));
                audit_rows.extend(audit(ev, tol));
            }
            Suite::Laplace => rows.extend(laplace_suite(tol)),
        }
    }
    let passed = rows.iter().filter(|r| r.pass).count();
    let max_rel_diff = rows.iter().map(|r| r.rel_diff).fold(0.0, f64::max);
    let summary = Summary {
        total: rows.len(),
        passed,
        failed: rows.len() - passed,
        max_rel_diff,
        audit_terms: audit_rows.len(),
        audit_failed: audit_rows.iter().filter(|a| !a.pass).count(),
    };
    VerifyReport { tol, abs_floor: ABS_FLOOR, suites: suites.iter().map(|s| s.name()).collect(), rows, audit: audit_rows, summary }
}

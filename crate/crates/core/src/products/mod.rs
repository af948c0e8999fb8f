//! Products of parabolic cylinder functions from their integral
//! representations.
//!
//! Each evaluator returns a [`ProductValue`]; the `*_terms` variants expose
//! the individual coefficient × integral terms, so every coefficient can be
//! audited separately.

mod kernels;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quad::{self, QuadOutcome};

pub use kernels::{one_minus_z_41, one_minus_z_43_finite, one_minus_z_43_tail};

/// Relative accuracy assumed for the special functions inside an integrand.
const SPECFUN_REL: f64 = 1e-14;

/// Orders and arguments of a product evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalPoint {
    pub nu: f64,
    pub mu: f64,
    pub x: f64,
    pub y: f64,
}

impl EvalPoint {
    pub fn new(nu: f64, mu: f64, x: f64, y: f64) -> EvalPoint {
        EvalPoint { nu, mu, x, y }
    }

    fn swapped(self) -> EvalPoint {
        EvalPoint { nu: self.mu, mu: self.nu, x: self.y, y: self.x }
    }

    fn finite(&self) -> Result<()> {
        if [self.nu, self.mu, self.x, self.y].iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::Parameter("non-finite evaluation point".into()))
        }
    }
}

/// Which integral representation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Representation {
    R41,
    R42,
    R43,
    R44,
    R51,
    KK,
    Erfc2,
    DI,
    DnegErfc,
}

impl Representation {
    pub const ALL: [Representation; 9] = [
        Representation::R41,
        Representation::R42,
        Representation::R43,
        Representation::R44,
        Representation::R51,
        Representation::KK,
        Representation::Erfc2,
        Representation::DI,
        Representation::DnegErfc,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Representation::R41 => "4.1",
            Representation::R42 => "4.2",
            Representation::R43 => "4.3",
            Representation::R44 => "4.4",
            Representation::R51 => "5.1",
            Representation::KK => "kk",
            Representation::Erfc2 => "erfc2",
            Representation::DI => "di",
            Representation::DnegErfc => "dneg-erfc",
        }
    }

    /// Whether `pt` lies in the region where this representation is valid.
    /// For (4.1) the symmetric swap is taken into account.
    pub fn contains(self, pt: &EvalPoint) -> bool {
        region_check(self, pt).is_ok()
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Representation> {
        Representation::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown representation tag {s:?}")))
    }
}

impl Serialize for ProductValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ProductValue", 5)?;
        st.serialize_field("value", &self.value)?;
        st.serialize_field("abs_err_est", &self.abs_err_est)?;
        st.serialize_field("representation", self.representation.tag())?;
        st.serialize_field("swapped", &self.swapped)?;
        st.serialize_field("evals", &self.evals)?;
        st.end()
    }
}

/// Value of a product with its aggregated error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductValue {
    pub value: f64,
    pub abs_err_est: f64,
    pub representation: Representation,
    /// True when (ν, x) and (μ, y) were exchanged before evaluation.
    pub swapped: bool,
    pub evals: usize,
}

/// One coefficient × integral term of a representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Term {
    pub label: &'static str,
    pub coefficient: f64,
    pub integral: QuadOutcome,
}

impl Term {
    pub fn value(&self) -> f64 {
        self.coefficient * self.integral.value
    }

    pub fn abs_err(&self) -> f64 {
        self.coefficient.abs() * self.integral.abs_err_est + SPECFUN_REL * self.value().abs()
    }
}

/// All terms of one evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Breakdown {
    pub representation: Representation,
    pub swapped: bool,
    pub terms: Vec<Term>,
}

impl Breakdown {
    pub fn value(&self) -> f64 {
        self.terms.iter().map(Term::value).sum()
    }

    pub fn converged(&self) -> bool {
        self.terms.iter().all(|t| t.integral.converged)
    }

    /// Collapse to a [`ProductValue`], failing if any integral did not converge.
    pub fn total(&self) -> Result<ProductValue> {
        let value = self.value();
        let abs_err_est: f64 = self.terms.iter().map(Term::abs_err).sum::<f64>() + f64::EPSILON * value.abs();
        let evals = self.terms.iter().map(|t| t.integral.evals).sum();
        if !self.converged() {
            return Err(Error::Quadrature { value, abs_err: abs_err_est, evals });
        }
        Ok(ProductValue { value, abs_err_est, representation: self.representation, swapped: self.swapped, evals })
    }
}

/// Quadrature settings shared by all terms of an evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Settings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_evals: usize,
}

impl Default for Settings {
    fn default() -> Settings {
        Settings { rel_tol: quad::DEFAULT_REL_TOL, abs_tol: quad::DEFAULT_ABS_TOL, max_evals: quad::DEFAULT_MAX_EVALS }
    }
}

impl Settings {
    /// Defaults with the evaluation budget taken from `PCFPROD_MAX_EVALS`.
    pub fn from_env() -> Settings {
        Settings { max_evals: quad::max_evals_from_env(), ..Settings::default() }
    }
}

fn region(msg: String) -> Error {
    Error::Region(msg)
}

fn region_check(rep: Representation, pt: &EvalPoint) -> Result<()> {
    pt.finite()?;
    let EvalPoint { nu, mu, x, y } = *pt;
    let ok = match rep {
        Representation::R41 | Representation::R42 => {
            let direct = nu < 0.0 && mu < 1.0;
            let swap = (0.0..1.0).contains(&nu) && mu < 0.0;
            (direct || swap) && x >= 0.0 && y >= 0.0
        }
        Representation::R43 => nu > -2.0 && nu < 0.0 && mu < 0.0 && x >= 0.0 && y > 0.0,
        Representation::R44 => nu > -1.0 && nu < 0.0 && mu < 1.0 && x > 0.0 && y > 0.0,
        Representation::R51 => nu < 0.0 && mu > -2.0 && mu < 1.0 && x > 0.0 && y > 0.0,
        Representation::KK => x > 0.0 && y > 0.0,
        Representation::Erfc2 => x >= 0.0 && y >= 0.0,
        Representation::DI => nu < 0.0 && x > 0.0 && y > 0.0,
        Representation::DnegErfc => nu > -2.0 && nu < 0.0 && x >= 0.0 && y > 0.0,
    };
    if ok {
        Ok(())
    } else {
        Err(region(format!("({nu}, {mu}, {x}, {y}) is outside the region of ({})", rep.tag())))
    }
}

/// Evaluator carrying quadrature [`Settings`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Evaluator {
    pub settings: Settings,
}

impl Evaluator {
    pub fn new(settings: Settings) -> Evaluator {
        Evaluator { settings }
    }

    /// D_ν(x) D_μ(y) from the (4.1) integral, swapping (ν,x) ↔ (μ,y) when
    /// only the swapped point satisfies ν < 0.
    pub fn dd_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        region_check(Representation::R41, &pt)?;
        let swap = pt.nu >= 0.0;
        let p = if swap { pt.swapped() } else { pt };
        Ok(Breakdown { representation: Representation::R41, swapped: swap, terms: vec![kernels::term_41(&p, &self.settings, 1.0)?] })
    }

    pub fn dd(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.dd_terms(pt)?.total()
    }

    /// D_ν(x) D_μ(y) from the Ferrers-function form (4.2); falls back to
    /// (4.1) when x or y is zero.
    pub fn dd_legendre_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        region_check(Representation::R42, &pt)?;
        if pt.x == 0.0 || pt.y == 0.0 {
            return self.dd_terms(pt);
        }
        let swap = pt.nu >= 0.0;
        let p = if swap { pt.swapped() } else { pt };
        Ok(Breakdown { representation: Representation::R42, swapped: swap, terms: vec![kernels::term_42(&p, &self.settings)?] })
    }

    pub fn dd_legendre(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.dd_legendre_terms(pt)?.total()
    }

    /// D_ν(-x) D_μ(y) from the three-integral form (4.3).
    pub fn dneg_d_43_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        region_check(Representation::R43, &pt)?;
        let mut terms = vec![kernels::term_41(&pt, &self.settings, 1.0)?];
        if pt.x > 0.0 {
            terms.push(kernels::term_43_finite(&pt, &self.settings)?);
            terms.push(kernels::term_43_tail(&pt, &self.settings)?);
        }
        Ok(Breakdown { representation: Representation::R43, swapped: false, terms })
    }

    pub fn dneg_d_43(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.dneg_d_43_terms(pt)?.total()
    }

    /// D_ν(-x) D_μ(y) from the three-integral form (4.4).
    pub fn dneg_d_44_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        region_check(Representation::R44, &pt)?;
        let terms = vec![
            kernels::term_41(&pt, &self.settings, -1.0)?,
            kernels::term_44_finite(&pt, &self.settings)?,
            kernels::term_44_tail(&pt, &self.settings)?,
        ];
        Ok(Breakdown { representation: Representation::R44, swapped: false, terms })
    }

    pub fn dneg_d_44(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.dneg_d_44_terms(pt)?.total()
    }

    /// D_ν(-x) D_μ(y) by whichever of (4.3), (4.4) applies, preferring (4.4).
    pub fn dneg_dispatch_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        if Representation::R44.contains(&pt) {
            self.dneg_d_44_terms(pt)
        } else if Representation::R43.contains(&pt) {
            self.dneg_d_43_terms(pt)
        } else {
            pt.finite()?;
            Err(region(format!(
                "({}, {}, {}, {}) is outside the regions of (4.3) and (4.4)",
                pt.nu, pt.mu, pt.x, pt.y
            )))
        }
    }

    pub fn dneg_dispatch(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.dneg_dispatch_terms(pt)?.total()
    }

    /// D_ν(x) Φ((1-μ)/2; 3/2; y) from (5.1).
    pub fn d_phi_terms(&self, pt: EvalPoint) -> Result<Breakdown> {
        region_check(Representation::R51, &pt)?;
        let terms = vec![kernels::term_51_finite(&pt, &self.settings)?, kernels::term_51_tail(&pt, &self.settings)?];
        Ok(Breakdown { representation: Representation::R51, swapped: false, terms })
    }

    pub fn d_phi(&self, pt: EvalPoint) -> Result<ProductValue> {
        self.d_phi_terms(pt)?.total()
    }

    /// K_{1/4}(x) K_{1/4}(y).
    pub fn kk_terms(&self, x: f64, y: f64) -> Result<Breakdown> {
        let pt = EvalPoint::new(-0.5, -0.5, x, y);
        region_check(Representation::KK, &pt)?;
        Ok(Breakdown { representation: Representation::KK, swapped: false, terms: vec![kernels::term_kk(x, y, &self.settings)?] })
    }

    pub fn kk(&self, x: f64, y: f64) -> Result<ProductValue> {
        self.kk_terms(x, y)?.total()
    }

    /// erfc(x) erfc(y).
    pub fn erfc2_terms(&self, x: f64, y: f64) -> Result<Breakdown> {
        region_check(Representation::Erfc2, &EvalPoint::new(-1.0, -1.0, x, y))?;
        Ok(Breakdown { representation: Representation::Erfc2, swapped: false, terms: vec![kernels::term_erfc2(x, y, &self.settings)?] })
    }

    pub fn erfc2(&self, x: f64, y: f64) -> Result<ProductValue> {
        self.erfc2_terms(x, y)?.total()
    }

    /// D_ν(x) I_{1/4}(y).
    pub fn di_terms(&self, nu: f64, x: f64, y: f64) -> Result<Breakdown> {
        region_check(Representation::DI, &EvalPoint::new(nu, -0.5, x, y))?;
        let terms = vec![kernels::term_di_finite(nu, x, y, &self.settings)?, kernels::term_di_tail(nu, x, y, &self.settings)?];
        Ok(Breakdown { representation: Representation::DI, swapped: false, terms })
    }

    pub fn di(&self, nu: f64, x: f64, y: f64) -> Result<ProductValue> {
        self.di_terms(nu, x, y)?.total()
    }

    /// D_ν(-x) erfc(y).
    pub fn dneg_erfc_terms(&self, nu: f64, x: f64, y: f64) -> Result<Breakdown> {
        region_check(Representation::DnegErfc, &EvalPoint::new(nu, -1.0, x, y))?;
        let mut terms = vec![kernels::term_de_first(nu, x, y, &self.settings)?];
        if x > 0.0 {
            terms.push(kernels::term_de_finite(nu, x, y, &self.settings)?);
            terms.push(kernels::term_de_tail(nu, x, y, &self.settings)?);
        }
        Ok(Breakdown { representation: Representation::DnegErfc, swapped: false, terms })
    }

    pub fn dneg_erfc(&self, nu: f64, x: f64, y: f64) -> Result<ProductValue> {
        self.dneg_erfc_terms(nu, x, y)?.total()
    }

    /// Evaluate by representation; (ν, μ) unused by a representation are ignored.
    pub fn eval_terms(&self, rep: Representation, pt: EvalPoint) -> Result<Breakdown> {
        match rep {
            Representation::R41 => self.dd_terms(pt),
            Representation::R42 => self.dd_legendre_terms(pt),
            Representation::R43 => self.dneg_d_43_terms(pt),
            Representation::R44 => self.dneg_d_44_terms(pt),
            Representation::R51 => self.d_phi_terms(pt),
            Representation::KK => self.kk_terms(pt.x, pt.y),
            Representation::Erfc2 => self.erfc2_terms(pt.x, pt.y),
            Representation::DI => self.di_terms(pt.nu, pt.x, pt.y),
            Representation::DnegErfc => self.dneg_erfc_terms(pt.nu, pt.x, pt.y),
        }
    }

    pub fn eval(&self, rep: Representation, pt: EvalPoint) -> Result<ProductValue> {
        self.eval_terms(rep, pt)?.total()
    }
}

pub fn product_dd(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().dd(pt)
}

pub fn product_dd_legendre(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().dd_legendre(pt)
}

pub fn product_dneg_d_43(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().dneg_d_43(pt)
}

pub fn product_dneg_d_44(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().dneg_d_44(pt)
}

pub fn product_dneg_dispatch(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().dneg_dispatch(pt)
}

pub fn product_d_phi(pt: EvalPoint) -> Result<ProductValue> {
    Evaluator::default().d_phi(pt)
}

pub fn product_kk(x: f64, y: f64) -> Result<ProductValue> {
    Evaluator::default().kk(x, y)
}

pub fn product_erfc2(x: f64, y: f64) -> Result<ProductValue> {
    Evaluator::default().erfc2(x, y)
}

pub fn product_di(nu: f64, x: f64, y: f64) -> Result<ProductValue> {
    Evaluator::default().di(nu, x, y)
}

pub fn product_dneg_erfc(nu: f64, x: f64, y: f64) -> Result<ProductValue> {
    Evaluator::default().dneg_erfc(nu, x, y)
}

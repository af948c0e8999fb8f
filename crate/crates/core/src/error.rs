use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at {0}")]
    Pole(f64),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("argument outside the domain: {0}")]
    Domain(String),
    #[error("series diverges at z = 1 (c - a - b = {0})")]
    Divergent(f64),
    #[error("{what}: no convergence within {terms} terms")]
    SeriesBudget { what: &'static str, terms: usize },
    #[error("outside the accuracy envelope: {0}")]
    Range(String),
    #[error("point outside the region of validity: {0}")]
    Region(String),
    #[error("quadrature did not converge (value {value:e}, error estimate {abs_err:e}, {evals} evaluations)")]
    Quadrature { value: f64, abs_err: f64, evals: usize },
    #[error("invalid quadrature specification: {0}")]
    Spec(String),
    #[error("integrand returned {value} at t = {t}")]
    NonFinite { t: f64, value: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by a parameter point outside a representation's region.
    pub fn is_region(&self) -> bool {
        matches!(self, Error::Region(_))
    }

    /// True for iterative failures (series budget, quadrature budget).
    pub fn is_convergence(&self) -> bool {
        matches!(self, Error::SeriesBudget { .. } | Error::Quadrature { .. })
    }
}

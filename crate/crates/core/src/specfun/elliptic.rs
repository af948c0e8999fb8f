use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use crate::error::{Error, Result};

use super::hyp2f1::Gauss2F1;

fn plan() -> &'static Gauss2F1 {
    static PLAN: OnceLock<Gauss2F1> = OnceLock::new();
    PLAN.get_or_init(|| Gauss2F1::new(0.5, 0.5, 1.0).expect("valid parameters"))
}

/// Complete elliptic integral of the first kind in the parameter convention:
/// K(m) = (π/2) F(1/2, 1/2; 1; m).
pub fn elliptic_k(m: f64) -> Result<f64> {
    elliptic_k_with(m, 1.0 - m)
}

/// [`elliptic_k`] with the complementary parameter `1 - m` supplied exactly.
pub fn elliptic_k_with(m: f64, one_minus_m: f64) -> Result<f64> {
    if m >= 1.0 || one_minus_m <= 0.0 {
        return Err(Error::Domain(format!("elliptic K at m = {m}")));
    }
    Ok(FRAC_PI_2 * plan().eval(m, one_minus_m)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn agm_k(m: f64) -> f64 {
        let (mut a, mut b) = (1.0f64, (1.0 - m).sqrt());
        for _ in 0..40 {
            let (na, nb) = ((a + b) / 2.0, (a * b).sqrt());
            a = na;
            b = nb;
        }
        FRAC_PI_2 / a
    }

    #[test]
    fn matches_agm() {
        for &m in &[0.0, 0.1, 0.5, 0.9, 0.999, 0.999_999] {
            let k = elliptic_k(m).unwrap();
            assert!((k - agm_k(m)).abs() < 2e-14 * k, "m = {m}");
        }
        assert!(elliptic_k(1.0).is_err());
    }
}

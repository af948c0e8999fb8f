use proptest::prelude::*;

use pcfprod::dd::{self, Dd};
use pcfprod::oracle::direct_product;
use pcfprod::products::{one_minus_z_41, one_minus_z_43_finite, one_minus_z_43_tail, EvalPoint, Evaluator};
use pcfprod::quad::{integrate, integrate_split, Node, QuadSpec};
use pcfprod::specfun::{gauss_2f1, kummer_phi, HypParams};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hyp2f1_symmetric_bitwise(a in -3.0..3.0f64, b in -3.0..3.0f64, c in 0.1..4.0f64, z in -5.0..0.95f64) {
        let u = gauss_2f1(HypParams::new(a, b, c, z));
        let v = gauss_2f1(HypParams::new(b, a, c, z));
        match (u, v) {
            (Ok(u), Ok(v)) => prop_assert_eq!(u.value.to_bits(), v.value.to_bits()),
            (u, v) => prop_assert_eq!(u.is_err(), v.is_err()),
        }
    }

    #[test]
    fn kummer_transform(a in -2.0..2.0f64, b in 0.3..3.0f64, z in -6.0..6.0f64) {
        let lhs = kummer_phi(a, b, z).unwrap().value;
        let (inner, _) = dd::kummer(Dd::new(b - a), Dd::new(b), Dd::new(-z), 500).unwrap();
        let rhs = (Dd::new(z).exp() * inner).to_f64();
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs.abs().max(1e-3), "{} vs {}", lhs, rhs);
    }

    #[test]
    fn direct_product_symmetric(nu in -3.0..2.0f64, mu in -3.0..2.0f64, x in -4.0..6.0f64, y in 0.0..6.0f64) {
        let a = direct_product(nu, mu, x, y).unwrap().value;
        let b = direct_product(mu, nu, y, x).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-13 * a.abs(), "{} vs {}", a, b);
    }

    #[test]
    fn exact_complements(x in 0.1..5.0f64, y in 0.1..5.0f64, s in 0.0..1.0f64) {
        let (x2, y2) = (x * x, y * y);
        let t = 10.0 * s;
        let (z, w) = one_minus_z_41(x, y, t);
        if z < 0.99 {
            prop_assert!((w - (1.0 - z)).abs() <= 1e-6 * w);
        }
        let t = s * x2 / 2.0;
        let (z, w) = one_minus_z_43_finite(x, y, t, x2 / 2.0 - t);
        if z.abs() < 0.99 && t < x2 / 2.0 {
            prop_assert!((w - (1.0 - z)).abs() <= 1e-6 * w.abs());
        }
        let t = x2 / 2.0 + 10.0 * s;
        let (z, w) = one_minus_z_43_tail(x, y, t, t - x2 / 2.0);
        if z < 0.99 {
            prop_assert!((w - (1.0 - z)).abs() <= 1e-6 * w.abs(), "{} {} {}", z, w, y2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_symmetric_under_swap(nu in -1.9..-0.05f64, mu in -1.9..-0.05f64, x in 0.0..4.0f64, y in 0.0..4.0f64) {
        let ev = Evaluator::default();
        let a = ev.dd(EvalPoint::new(nu, mu, x, y)).unwrap().value;
        let b = ev.dd(EvalPoint::new(mu, nu, y, x)).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * a.abs(), "{} vs {}", a, b);
    }

    #[test]
    fn erfc2_symmetric(x in 0.0..3.0f64, y in 0.0..3.0f64) {
        let ev = Evaluator::default();
        let a = ev.erfc2(x, y).unwrap().value;
        let b = ev.erfc2(y, x).unwrap().value;
        prop_assert!((a - b).abs() <= 1e-12 * a.abs());
    }
}

// The closed complements are polynomial identities; check them exactly on integers.
#[test]
fn complements_are_exact_identities() {
    for x2 in 1..12i128 {
        for y2 in 1..12i128 {
            for t in 0..12i128 {
                let s = 2 * t;
                assert_eq!((x2 + s) * (y2 + s) - s * (x2 + y2 + s), x2 * y2);
                assert_eq!((x2 - s) * (y2 + s) - s * (x2 - y2 - s), x2 * y2);
                assert_eq!(s * (y2 - x2 + s) - x2 * y2, (s - x2) * (s + y2));
            }
        }
    }
}

#[test]
fn dispatch_at_zero_reduces_to_direct_form() {
    let ev = Evaluator::default();
    for &nu in &[-1.75, -1.0, -0.5, -0.1] {
        for &mu in &[-1.5, -1.0, -0.5] {
            for &y in &[0.25, 1.0, 2.5, 5.0] {
                let pt = EvalPoint::new(nu, mu, 0.0, y);
                let a = ev.dneg_dispatch(pt).unwrap().value;
                let b = ev.dd(pt).unwrap().value;
                assert!((a - b).abs() <= 1e-9 * b.abs(), "{pt:?}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn tighter_tolerance_never_hurts() {
    let g = |n: Node| -> pcfprod::Result<f64> { Ok((0.3 * n.t).cos() / (1.0 + n.t)) };
    let reference = integrate(&QuadSpec::semi_infinite(0.0, -0.5, &g).tolerances(1e-15, 0.0)).unwrap().value;
    let mut last = f64::INFINITY;
    for &tol in &[1e-4, 5e-5, 2.5e-5, 1.25e-5, 6.25e-6] {
        let v = integrate(&QuadSpec::semi_infinite(0.0, -0.5, &g).tolerances(tol, 0.0)).unwrap().value;
        let e = (v - reference).abs();
        assert!(e <= last.max(1e-15), "tol {tol}: error {e:e} grew from {last:e}");
        last = e;
    }
}

#[test]
fn split_matches_unsplit() {
    let g = |n: Node| -> pcfprod::Result<f64> { Ok((-n.t).exp() * (1.0 + n.t * n.t).recip()) };
    let whole = integrate(&QuadSpec::finite(0.0, 3.0, 0.0, 0.0, &g)).unwrap();
    let parts = integrate_split(&QuadSpec::finite(0.0, 1.2, 0.0, 0.0, &g), &QuadSpec::finite(1.2, 3.0, 0.0, 0.0, &g)).unwrap();
    assert!((whole.value - parts.value).abs() <= whole.abs_err_est + parts.abs_err_est + 1e-15);
}

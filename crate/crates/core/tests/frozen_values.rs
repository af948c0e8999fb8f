//! Values frozen from an independent 40-digit evaluation (mpmath).

use std::path::PathBuf;

use pcfprod::pcf::pcf_d;
use pcfprod::products::{EvalPoint, Evaluator, Representation};
use pcfprod::specfun::{bessel_i, bessel_k, elliptic_k, erfc, gamma, gauss_2f1, incomplete_beta, kummer_phi, legendre_p, HypParams};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn product_points() {
    let ev = Evaluator::default();
    let mut rdr = csv::Reader::from_path(data("products_mpmath.csv")).unwrap();
    let mut n = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let rep: Representation = rec[0].parse().unwrap();
        let f = |i: usize| rec[i].parse::<f64>().unwrap();
        let pt = EvalPoint::new(f(1), f(2), f(3), f(4));
        let v = ev.eval(rep, pt).unwrap();
        let e = rel(v.value, f(5));
        assert!(e < 1e-12, "{rep} at {pt:?}: {} vs {} (rel {e:e})", v.value, f(5));
        assert!((v.value - f(5)).abs() <= 10.0 * v.abs_err_est + 1e-14 * f(5).abs(), "{rep} at {pt:?}: estimate too small");
        n += 1;
    }
    assert_eq!(n, 20);
}

#[test]
fn hypergeometric_points() {
    let mut rdr = csv::Reader::from_path(data("hyp2f1_mpmath.csv")).unwrap();
    let mut n = 0;
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let f = |i: usize| rec[i].parse::<f64>().unwrap();
        let (a, b, c, z, want) = (f(0), f(1), f(2), f(3), f(4));
        let got = gauss_2f1(HypParams::new(a, b, c, z)).unwrap();
        let err = (got.value - want).abs() / want.abs().max(1e-300);
        let est = got.abs_err_est / want.abs().max(1e-300);
        assert!(err <= 1e-13 + 4.0 * est && err < 1e-9, "F({a},{b};{c};{z}) = {} vs {want}: err {err:e}, est {est:e}", got.value);
        n += 1;
    }
    assert!(n >= 250);
}

#[test]
fn scalar_functions() {
    let mut rdr = csv::Reader::from_path(data("specfun_mpmath.csv")).unwrap();
    for rec in rdr.records() {
        let rec = rec.unwrap();
        let p = |i: usize| rec[i].parse::<f64>().unwrap();
        let want = p(4);
        let (got, tol) = match &rec[0] {
            "gamma" => (gamma(p(1)).unwrap(), 1e-14),
            "erfc" => (erfc(p(1)), 1e-14),
            "kummer_phi" => (kummer_phi(p(1), p(2), p(3)).unwrap().value, 1e-13),
            "incomplete_beta" => (incomplete_beta(p(1), p(2), p(3)).unwrap(), 1e-13),
            "elliptic_k" => (elliptic_k(p(1)).unwrap(), 1e-13),
            "legendre_p" => (legendre_p(p(1), p(2), p(3)).unwrap(), 1e-13),
            "bessel_i" => (bessel_i(p(1), p(2)).unwrap(), 1e-13),
            "bessel_k" => (bessel_k(p(1), p(2)).unwrap(), 1e-13),
            "pcf_d" => (pcf_d(p(1), p(2)).unwrap().value, 1e-12),
            other => panic!("unknown function {other}"),
        };
        assert!(rel(got, want) <= tol, "{}({}, {}, {}) = {got} vs {want}", &rec[0], &rec[1], &rec[2], &rec[3]);
    }
}

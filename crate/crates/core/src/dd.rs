//! Double-double arithmetic.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`, giving
//! roughly 32 significant decimal digits. Only the operations needed by the
//! extended-precision series (products, quotients, exp, ln, gamma) are here.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Unit roundoff of double-double arithmetic (2^-104, with slack).
pub const EPS: f64 = 4.930380657631324e-32;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };
pub const HALF_LN_2PI: Dd = Dd { hi: 0.9189385332046728, lo: -3.8782941580672414e-17 };
pub const SQRT_PI: Dd = Dd { hi: 1.772453850905516, lo: -7.666586499825799e-17 };
pub const SQRT2: Dd = Dd { hi: 1.4142135623730951, lo: -9.667293313452913e-17 };

#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    const SPLITTER: f64 = 134217729.0;
    let t = SPLITTER * a;
    let hi = t - (t - a);
    (hi, a - hi)
}

/// Exact product: `a*b = p + e`.
#[inline]
pub fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    (p, ((ah * bh - p) + ah * bl + al * bh) + al * bl)
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub const fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Dd {
        let (h, l) = quick_two_sum(hi, lo);
        Dd { hi: h, lo: l }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 { -self } else { self }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    /// Exact multiplication by a power of two.
    #[inline]
    pub fn scale(self, factor: f64) -> Dd {
        Dd { hi: self.hi * factor, lo: self.lo * factor }
    }

    fn ldexp(self, k: i32) -> Dd {
        let half = k / 2;
        let f1 = 2f64.powi(half);
        let f2 = 2f64.powi(k - half);
        self.scale(f1).scale(f2)
    }

    pub fn sqr(self) -> Dd {
        self * self
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 { Dd::ZERO } else { Dd::new(f64::NAN) };
        }
        let x = 1.0 / self.hi.sqrt();
        let ax = self.hi * x;
        let corr = (self - Dd::new(ax).sqr()).hi * (x * 0.5);
        let (h, l) = two_sum(ax, corr);
        Dd { hi: h, lo: l }
    }

    pub fn exp(self) -> Dd {
        if self.hi > 709.78 {
            return Dd::new(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = (self - LN2 * k).scale(1.0 / 1024.0);
        // expm1 by Taylor series, then ten doublings expm1(2r) = 2e + e^2.
        let mut s = r;
        let mut term = r;
        for i in 2..=14 {
            term = term * r / i as f64;
            s = s + term;
            if term.hi.abs() < 1e-36 * s.hi.abs().max(1e-300) {
                break;
            }
        }
        for _ in 0..10 {
            s = s.scale(2.0) + s.sqr();
        }
        (s + 1.0).ldexp(k as i32)
    }

    pub fn ln(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::new(if self.hi == 0.0 { f64::NEG_INFINITY } else { f64::NAN });
        }
        let mut x = Dd::new(self.hi.ln());
        for _ in 0..2 {
            x = x + self * (-x).exp() - 1.0;
        }
        x
    }

    /// `self^y` for `self > 0`.
    pub fn powd(self, y: Dd) -> Dd {
        (y * self.ln()).exp()
    }

    /// `2^y`.
    pub fn exp2(y: Dd) -> Dd {
        (y * LN2).exp()
    }

    pub fn is_nonpositive_integer(self) -> bool {
        self.hi <= 0.0 && self.hi == self.hi.floor() && self.lo == self.lo.floor() && self.lo == 0.0
    }

    /// Parse a decimal literal such as `-1.234e-5`, correct to a few units of [`EPS`].
    pub fn parse(s: &str) -> Option<Dd> {
        let s = s.trim();
        let (neg, body) = match s.as_bytes().first()? {
            b'-' => (true, &s[1..]),
            b'+' => (false, &s[1..]),
            _ => (false, s),
        };
        let (mant, exp) = match body.find(['e', 'E']) {
            Some(i) => (&body[..i], body[i + 1..].parse::<i32>().ok()?),
            None => (body, 0),
        };
        let mut v = Dd::ZERO;
        let mut frac = 0i32;
        let mut seen_dot = false;
        let mut any = false;
        for ch in mant.chars() {
            match ch {
                '.' if !seen_dot => seen_dot = true,
                '0'..='9' => {
                    v = v * 10.0 + (ch as u8 - b'0') as f64;
                    any = true;
                    if seen_dot {
                        frac += 1;
                    }
                }
                _ => return None,
            }
        }
        if !any {
            return None;
        }
        let e10 = exp - frac;
        let mut p = Dd::ONE;
        for _ in 0..e10.unsigned_abs() {
            p = p * 10.0;
        }
        let v = if e10 >= 0 { v * p } else { v / p };
        Some(if neg { -v } else { v })
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, b.hi);
        let (t1, t2) = two_sum(self.lo, b.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Dd::renorm(s1, s2 + t2)
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, b: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, b);
        Dd::renorm(s1, s2 + self.lo)
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, b: f64) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        Dd::renorm(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        Dd::renorm(p, e + self.lo * b)
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * q1;
        let q2 = r.hi / b.hi;
        let r = r - b * q2;
        let q3 = r.hi / b.hi;
        Dd::renorm(q1, q2) + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    fn div(self, b: f64) -> Dd {
        self / Dd::new(b)
    }
}

const BERNOULLI: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// ln Γ(w) for w >= 25 by the Stirling series.
fn ln_gamma_large(w: Dd) -> Dd {
    let mut s = (w - 0.5) * w.ln() - w + HALF_LN_2PI;
    let inv = w.recip();
    let inv2 = inv.sqr();
    let mut pw = inv;
    for (k, &(num, den)) in BERNOULLI.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        let coef = Dd::new(num) / (Dd::new(den) * (n * (n - 1.0)));
        s = s + coef * pw;
        pw = pw * inv2;
    }
    s
}

/// Γ(x) in double-double. Negative non-integer arguments are handled by the
/// upward recurrence, which needs no reflection.
pub fn gamma(x: Dd) -> Result<Dd> {
    if x.is_nonpositive_integer() {
        return Err(Error::Pole(x.hi));
    }
    let mut w = x;
    let mut prod = Dd::ONE;
    while w.hi < 25.0 {
        prod = prod * w;
        w = w + 1.0;
    }
    Ok(ln_gamma_large(w).exp() / prod)
}

/// 1/Γ(x); exactly zero at the poles.
pub fn rgamma(x: Dd) -> Dd {
    if x.is_nonpositive_integer() {
        return Dd::ZERO;
    }
    let mut w = x;
    let mut prod = Dd::ONE;
    while w.hi < 25.0 {
        prod = prod * w;
        w = w + 1.0;
    }
    prod * (-ln_gamma_large(w)).exp()
}

/// Kummer series Φ(a; b; z) summed in double-double.
///
/// Returns the sum and an absolute error bound covering truncation and the
/// accumulated rounding of every term.
pub fn kummer(a: Dd, b: Dd, z: Dd, budget: usize) -> Result<(Dd, f64)> {
    if b.is_nonpositive_integer() {
        return Err(Error::Parameter(format!("Kummer b = {} is a non-positive integer", b.hi)));
    }
    let mut term = Dd::ONE;
    let mut sum = Dd::ONE;
    let mut abs_sum = 1.0f64;
    for k in 0..budget {
        let kf = k as f64;
        term = term * (a + kf) * z / ((b + kf) * (kf + 1.0));
        sum = sum + term;
        abs_sum += term.hi.abs() * (kf + 2.0);
        if term.hi == 0.0 {
            return Ok((sum, 8.0 * EPS * abs_sum));
        }
        let r = ((a.hi + kf + 1.0) * z.hi / ((b.hi + kf + 1.0) * (kf + 2.0))).abs();
        if r < 0.9 {
            let tail = term.hi.abs() * r / (1.0 - r);
            if tail <= 1e-34 * sum.hi.abs() {
                return Ok((sum, tail + 8.0 * EPS * abs_sum));
            }
        }
    }
    Err(Error::SeriesBudget { what: "extended Kummer series", terms: budget })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Dd, b: Dd) -> f64 {
        ((a - b) / b).hi.abs()
    }

    #[test]
    fn basic_identities() {
        let two = Dd::new(2.0);
        assert!(rel(two.sqrt().sqr(), two) < 1e-31);
        assert!(rel(SQRT2, two.sqrt()) < 1e-31);
        assert!(rel(Dd::ONE.exp().ln(), Dd::ONE) < 1e-31);
        assert!(rel(PI.sqrt(), SQRT_PI) < 1e-31);
        let x = Dd::new(37.25);
        assert!(rel((x.ln()).exp(), x) < 1e-30);
    }

    #[test]
    fn exp_matches_reference() {
        // e = 2.71828182845904523536028747135266...
        let e = Dd::parse("2.718281828459045235360287471352662").unwrap();
        assert!(rel(Dd::ONE.exp(), e) < 1e-31);
        // e^-20 = 2.061153622438557827965940380155...e-9
        let r = Dd::parse("2.061153622438557827965940380155e-9").unwrap();
        assert!(rel(Dd::new(-20.0).exp(), r) < 1e-29);
    }

    #[test]
    fn gamma_values() {
        // Γ(1/2) = √π
        assert!(rel(gamma(Dd::new(0.5)).unwrap(), SQRT_PI) < 1e-30);
        // Γ(-1/2) = -2√π
        assert!(rel(gamma(Dd::new(-0.5)).unwrap(), SQRT_PI * -2.0) < 1e-30);
        // Γ(10) = 362880
        assert!(rel(gamma(Dd::new(10.0)).unwrap(), Dd::new(362880.0)) < 1e-30);
        assert_eq!(rgamma(Dd::new(-3.0)), Dd::ZERO);
        assert!(gamma(Dd::new(0.0)).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let v = Dd::parse("-1.25e3").unwrap();
        assert_eq!(v.to_f64(), -1250.0);
        assert!(Dd::parse("abc").is_none());
        let third = Dd::parse("0.3333333333333333333333333333333333").unwrap();
        assert!(rel(third, Dd::ONE / 3.0) < 1e-31);
    }
}

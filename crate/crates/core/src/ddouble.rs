//! Minimal double-double arithmetic used for exact-ish product expansion.
//!
//! A value is the unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`, giving
//! roughly 106 bits of significand.

use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub(crate) struct DoubleDouble {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl DoubleDouble {
    pub(crate) const ZERO: Self = Self { hi: 0.0, lo: 0.0 };

    pub(crate) fn from_f64(x: f64) -> Self {
        Self { hi: x, lo: 0.0 }
    }

    pub(crate) fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Sign of `self - other`, resolved to double-double precision.
    pub(crate) fn cmp_value(self, other: Self) -> std::cmp::Ordering {
        let d = self - other;
        d.hi.partial_cmp(&0.0).unwrap_or(std::cmp::Ordering::Equal)
    }

    pub(crate) fn mul_f64(self, x: f64) -> Self {
        let (p, e) = two_prod(self.hi, x);
        let (hi, lo) = quick_two_sum(p, e + self.lo * x);
        Self { hi, lo }
    }

    pub(crate) fn div_f64(self, d: f64) -> Self {
        let q1 = self.hi / d;
        let r = self - Self::from_f64(q1).mul_f64(d);
        let q2 = r.hi / d;
        let (hi, lo) = quick_two_sum(q1, q2);
        Self { hi, lo }
    }

    /// `(sin x, cos x)` for an `f64` argument, accurate to double-double
    /// precision for `|x| <= 4`.
    pub(crate) fn sin_cos(x: f64) -> (Self, Self) {
        const PIO2: DoubleDouble = DoubleDouble {
            hi: std::f64::consts::FRAC_PI_2,
            lo: 6.123233995736766e-17,
        };
        let k = (x / PIO2.hi).round();
        let y = Self::from_f64(x) - PIO2.mul_f64(k);
        let y2 = y * y;
        let (mut s, mut c) = (y, Self::from_f64(1.0));
        let (mut ts, mut tc) = (y, Self::from_f64(1.0));
        for j in 1..20 {
            let j = j as f64;
            ts = -(ts * y2).div_f64((2.0 * j) * (2.0 * j + 1.0));
            tc = -(tc * y2).div_f64((2.0 * j - 1.0) * (2.0 * j));
            s = s + ts;
            c = c + tc;
        }
        match (k as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Self { hi, lo }
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Self { hi, lo }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_product_rounding_error() {
        // (1 + 2^-30)^2 = 1 + 2^-29 + 2^-60; the last term is lost in f64.
        let x = DoubleDouble::from_f64(1.0 + 2f64.powi(-30));
        let sq = x * x;
        let exact_tail = sq - DoubleDouble::from_f64(1.0 + 2f64.powi(-29));
        assert_eq!(exact_tail.to_f64(), 2f64.powi(-60));
    }

    #[test]
    fn sin_cos_matches_f64() {
        for &x in &[-3.1, -2.0, -0.7, 0.0, 0.3, 1.2, 2.5, 3.1] {
            let (s, c) = DoubleDouble::sin_cos(x);
            assert!((s.to_f64() - x.sin()).abs() <= 2e-16);
            assert!((c.to_f64() - x.cos()).abs() <= 2e-16);
            let one = s * s + c * c - DoubleDouble::from_f64(1.0);
            assert!(one.to_f64().abs() <= 1e-30);
        }
    }

    #[test]
    fn cancellation_is_exact() {
        let a = DoubleDouble::from_f64(0.1) * DoubleDouble::from_f64(0.1);
        let b = DoubleDouble::from_f64(0.1) * DoubleDouble::from_f64(0.1);
        assert_eq!((a - b).to_f64(), 0.0);
    }
}

//! Brute-force reference computations.
//!
//! These deliberately avoid the fast paths of the rest of the crate (no Horner,
//! no trigonometric expansion, no root finding) and serve as independent
//! oracles for the verification suites and the tests.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::ddouble::DoubleDouble;
use crate::poly::Polynomial;

/// `Σ a_k z^k` with explicitly accumulated powers of `z`.
pub fn power_sum_eval(p: &Polynomial, z: Complex64) -> Complex64 {
    let mut zk = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for &a in p.coeffs() {
        sum += a * zk;
        zk *= z;
    }
    sum
}

fn modulus(p: &Polynomial, r: f64, theta: f64) -> f64 {
    power_sum_eval(p, Complex64::from_polar(r, theta)).norm()
}

/// Central finite difference of `f` at `x`.
pub fn central_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Maximizes `f` on `[a, b]` by golden-section search.
pub fn golden_section_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// `|p(re^{iθ})|²` in double-double arithmetic, so that values near a flat
/// peak can still be ordered.
fn modulus_sq_dd(p: &Polynomial, r: f64, theta: f64) -> DoubleDouble {
    let (s, c) = DoubleDouble::sin_cos(theta);
    let (zr, zi) = (c.mul_f64(r), s.mul_f64(r));
    let (mut re, mut im) = (DoubleDouble::ZERO, DoubleDouble::ZERO);
    let (mut pr, mut pi) = (DoubleDouble::from_f64(1.0), DoubleDouble::ZERO);
    for a in p.coeffs() {
        re = re + pr.mul_f64(a.re) - pi.mul_f64(a.im);
        im = im + pr.mul_f64(a.im) + pi.mul_f64(a.re);
        let next_r = pr * zr - pi * zi;
        pi = pr * zi + pi * zr;
        pr = next_r;
    }
    re * re + im * im
}

/// Golden-section search on `[a, b]` comparing values in double-double.
fn golden_section_max_dd(f: impl Fn(f64) -> DoubleDouble, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc.cmp_value(fd).is_ge() {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

/// Global maximizers of `|p|` on `|z| = r` from a uniform grid of `n`
/// angles, with every discrete local maximum refined by golden-section
/// search on `|p|²` evaluated in double-double arithmetic. Returns `(M(r, p), angles within rel_tie of it)`.
pub fn grid_maximizers(p: &Polynomial, r: f64, n: usize, rel_tie: f64) -> (f64, Vec<f64>) {
    let h = 2.0 * PI / n as f64;
    let vals: Vec<f64> = (0..n).map(|k| modulus(p, r, -PI + h * k as f64)).collect();
    let mut peaks = Vec::new();
    for k in 0..n {
        let prev = vals[(k + n - 1) % n];
        let next = vals[(k + 1) % n];
        if vals[k] >= prev && vals[k] >= next {
            let centre = -PI + h * k as f64;
            let theta =
                golden_section_max_dd(|t| modulus_sq_dd(p, r, t), centre - h, centre + h, 1e-13);
            peaks.push((theta, modulus(p, r, theta)));
        }
    }
    let best = peaks.iter().map(|p| p.1).fold(0.0, f64::max);
    let mut angles: Vec<f64> = Vec::new();
    for (theta, v) in peaks {
        if v >= best * (1.0 - rel_tie) {
            let t = crate::circlemax::wrap_angle(theta);
            if !angles
                .iter()
                .any(|a| crate::circlemax::angle_diff(*a, t).abs() < 1e-6)
            {
                angles.push(t);
            }
        }
    }
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    (best, angles)
}

/// Angles where `f` changes sign on a uniform grid of `n` points over
/// `(-π, π]`, located to grid resolution.
pub fn grid_sign_changes(f: impl Fn(f64) -> f64, n: usize) -> Vec<f64> {
    let h = 2.0 * PI / n as f64;
    let mut out = Vec::new();
    for k in 0..n {
        let a = -PI + h * k as f64;
        let (fa, fb) = (f(a), f(a + h));
        if fa == 0.0 {
            out.push(a);
        } else if fa * fb < 0.0 {
            out.push(a + h * fa / (fa - fb));
        }
    }
    out
}

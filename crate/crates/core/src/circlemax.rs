//! Maximum modulus on a single circle `|z| = r`.
//!
//! The stationary points of `θ ↦ |p(re^{iθ})|²` are the real zeros of the
//! differentiated cosine/sine profile. Writing that derivative as a Laurent
//! polynomial `Σ_{m=-n}^{n} c_m w^m` in `w = e^{iθ}` and multiplying by `w^n`
//! turns them into the unit-circle roots of a degree-`2n` polynomial. The
//! global maximizers are then picked by direct evaluation of `|p|` at every
//! stationary angle.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, TrigProfile};
use crate::roots::polynomial_roots;

/// Numeric tolerances for the circle maximization.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Relative tie tolerance: a stationary angle is a global maximizer when
    /// its modulus is within `value_tie * max` of the maximum.
    pub value_tie: f64,
    /// Roots with `||w| - 1|` below this are stationary angles outright.
    pub unit_circle: f64,
    /// Roots within this distance of the unit circle are kept only if a real
    /// Newton iteration on the derivative converges from their argument.
    pub capture: f64,
    /// Angles closer than this (radians) are merged.
    pub angle_merge: f64,
    /// Profiles with harmonic norm below `degeneracy * c0` are angle-independent.
    pub degeneracy: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            value_tie: 1e-12,
            unit_circle: 1e-8,
            capture: 1e-3,
            angle_merge: 1e-7,
            degeneracy: 1e-13,
        }
    }
}

/// `M(r, p)` together with every angle where it is attained.
#[derive(Clone, Debug, PartialEq)]
pub struct RadialMaxima {
    pub r: f64,
    pub value: f64,
    /// Sorted maximizing arguments in `(-π, π]`; empty iff `is_full_circle`.
    pub angles: Vec<f64>,
    pub is_full_circle: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StationaryKind {
    Max,
    Min,
    /// Second derivative indistinguishable from zero.
    Flat,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StationaryPoint {
    pub theta: f64,
    /// `|p(re^{iθ})|`
    pub modulus: f64,
    pub kind: StationaryKind,
}

/// Everything computed on one circle: the global maxima plus the full list of
/// stationary points (sorted by angle), which the tracer uses for chaining.
#[derive(Clone, Debug, PartialEq)]
pub struct CircleScan {
    pub maxima: RadialMaxima,
    pub stationary: Vec<StationaryPoint>,
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t <= -PI {
        t += 2.0 * PI;
    }
    t
}

/// Signed shortest angular difference `b - a` in `(-π, π]`.
pub fn angle_diff(a: f64, b: f64) -> f64 {
    wrap_angle(b - a)
}

/// Term-wise θ-derivative: `cos(mθ) ↦ -m sin(mθ)`, `sin(mθ) ↦ m cos(mθ)`.
pub fn profile_derivative(t: &TrigProfile) -> TrigProfile {
    let cos_coeffs = t
        .sin_coeffs
        .iter()
        .enumerate()
        .map(|(i, b)| (i + 1) as f64 * b)
        .collect();
    let sin_coeffs = t
        .cos_coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| -((i + 1) as f64) * a)
        .collect();
    TrigProfile {
        r: t.r,
        c0: 0.0,
        cos_coeffs,
        sin_coeffs,
    }
}

/// Value, first and second derivative of a profile at θ.
fn profile_jet(t: &TrigProfile, theta: f64) -> (f64, f64, f64) {
    let (mut f, mut d1, mut d2) = (t.c0, 0.0, 0.0);
    for (i, (a, b)) in t.cos_coeffs.iter().zip(&t.sin_coeffs).enumerate() {
        let m = (i + 1) as f64;
        let (s, c) = (m * theta).sin_cos();
        f += a * c + b * s;
        d1 += m * (b * c - a * s);
        d2 -= m * m * (a * c + b * s);
    }
    (f, d1, d2)
}

/// Rounding-scale bounds for the first and second derivative.
fn derivative_scales(t: &TrigProfile) -> (f64, f64) {
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    for (i, (a, b)) in t.cos_coeffs.iter().zip(&t.sin_coeffs).enumerate() {
        let m = (i + 1) as f64;
        s1 += m * (a.abs() + b.abs());
        s2 += m * m * (a.abs() + b.abs());
    }
    (s1, s2)
}

/// Safeguarded Newton iteration on the profile derivative. Returns the
/// polished angle and whether it converged within `max_wander` of the start.
fn polish_stationary(t: &TrigProfile, theta0: f64, max_wander: f64) -> (f64, bool) {
    let (s1, _) = derivative_scales(t);
    let floor = 16.0 * f64::EPSILON * s1;
    let mut theta = theta0;
    for _ in 0..60 {
        let (_, d1, d2) = profile_jet(t, theta);
        if d1.abs() <= floor {
            return (theta, angle_diff(theta0, theta).abs() <= max_wander);
        }
        if d2 == 0.0 {
            return (theta, false);
        }
        let mut step = d1 / d2;
        let limit = 0.05f64.min(max_wander);
        if step.abs() > limit {
            step = limit.copysign(step);
        }
        theta -= step;
        if angle_diff(theta0, theta).abs() > max_wander {
            return (theta, false);
        }
        if step.abs() <= 4.0 * f64::EPSILON * theta.abs().max(1.0) {
            return (theta, true);
        }
    }
    let (_, d1, _) = profile_jet(t, theta);
    (theta, d1.abs() <= 1e3 * floor)
}

fn laurent_derivative(t: &TrigProfile) -> Vec<Complex64> {
    // Derivative harmonic m: A'_m = m B_m, B'_m = -m A_m, and
    // A' cos + B' sin = Re((A' - i B') e^{imθ}).
    let d = profile_derivative(t);
    let mags: Vec<f64> = d
        .cos_coeffs
        .iter()
        .zip(&d.sin_coeffs)
        .map(|(a, b)| a.hypot(*b))
        .collect();
    let hmax = mags.iter().copied().fold(0.0, f64::max);
    let mut top = mags.len();
    while top > 0 && mags[top - 1] <= 1e-17 * hmax {
        top -= 1;
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); 2 * top + 1];
    for m in 1..=top {
        let c = Complex64::new(d.cos_coeffs[m - 1], -d.sin_coeffs[m - 1]) * 0.5;
        coeffs[top + m] = c;
        coeffs[top - m] = c.conj();
    }
    coeffs
}

fn merge_sorted_angles(mut angles: Vec<f64>, tol: f64) -> Vec<f64> {
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut out: Vec<f64> = Vec::with_capacity(angles.len());
    for a in angles {
        if out.last().is_some_and(|&l| angle_diff(l, a).abs() <= tol) {
            continue;
        }
        out.push(a);
    }
    if out.len() > 1 && angle_diff(out[out.len() - 1], out[0]).abs() <= tol {
        out.pop();
    }
    out
}

/// All stationary angles of the profile in `(-π, π]`, with default tolerances.
pub fn stationary_angles(t: &TrigProfile) -> Result<Vec<f64>> {
    stationary_angles_with(t, &Tolerances::default())
}

pub fn stationary_angles_with(t: &TrigProfile, tol: &Tolerances) -> Result<Vec<f64>> {
    let laurent = laurent_derivative(t);
    if laurent.len() == 1 {
        return Err(Error::InvalidParameter("profile has no harmonics".into()));
    }
    let roots = polynomial_roots(&laurent).map_err(|_| Error::RootFinding {
        radius: t.r,
        coeffs: laurent.iter().map(|c| [c.re, c.im]).collect(),
    })?;
    let mut angles = Vec::new();
    for w in roots {
        let dist = (w.norm() - 1.0).abs();
        if dist > tol.capture {
            continue;
        }
        let (theta, ok) = polish_stationary(t, w.arg(), 0.05);
        if ok {
            angles.push(wrap_angle(theta));
        } else if dist <= tol.unit_circle {
            angles.push(wrap_angle(w.arg()));
        }
    }
    Ok(merge_sorted_angles(angles, tol.angle_merge))
}

fn classify(t: &TrigProfile, theta: f64) -> StationaryKind {
    let (_, s2) = derivative_scales(t);
    let (_, _, d2) = profile_jet(t, theta);
    let flat = 64.0 * f64::EPSILON * s2;
    if d2 < -flat {
        StationaryKind::Max
    } else if d2 > flat {
        StationaryKind::Min
    } else {
        StationaryKind::Flat
    }
}

fn modulus_at(p: &Polynomial, r: f64, theta: f64) -> f64 {
    p.eval(Complex64::from_polar(r, theta)).norm()
}

fn check_radius(r: f64) -> Result<()> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "radius must be positive, got {r}"
        )));
    }
    Ok(())
}

/// Stationary points and global maxima of `|p|` on `|z| = r`.
pub fn scan_circle(p: &Polynomial, r: f64, tol: &Tolerances) -> Result<CircleScan> {
    check_radius(r)?;
    let t = p.trig_profile(r);
    if t.harmonic_norm() <= tol.degeneracy * t.c0 || t.harmonics() == 0 {
        return Ok(CircleScan {
            maxima: RadialMaxima {
                r,
                value: modulus_at(p, r, 0.0),
                angles: Vec::new(),
                is_full_circle: true,
            },
            stationary: Vec::new(),
        });
    }
    let with_coeffs = |e: Error| match e {
        Error::RootFinding { radius, .. } => Error::RootFinding {
            radius,
            coeffs: p.coeff_pairs(),
        },
        e => e,
    };
    let mut angles = stationary_angles_with(&t, tol).map_err(with_coeffs)?;

    // Coarse sweep: any sample above the best stationary value means a
    // maximizer was filtered out; recover it by local Newton from there.
    let samples = 8 * (t.harmonics() + 1);
    let best = angles
        .iter()
        .map(|&a| modulus_at(p, r, a))
        .fold(0.0, f64::max);
    let mut extra = Vec::new();
    for k in 0..samples {
        let theta = -PI + 2.0 * PI * (k as f64 + 0.5) / samples as f64;
        if modulus_at(p, r, theta) > best * (1.0 + 1e-9) {
            let (polished, ok) = polish_stationary(&t, theta, PI / samples as f64 * 2.0);
            if ok {
                extra.push(wrap_angle(polished));
            }
        }
    }
    if !extra.is_empty() {
        angles.extend(extra);
        angles = merge_sorted_angles(angles, tol.angle_merge);
    }
    if angles.is_empty() {
        return Err(Error::RootFinding {
            radius: r,
            coeffs: p.coeff_pairs(),
        });
    }

    let stationary: Vec<StationaryPoint> = angles
        .iter()
        .map(|&theta| StationaryPoint {
            theta,
            modulus: modulus_at(p, r, theta),
            kind: classify(&t, theta),
        })
        .collect();
    let value = stationary.iter().map(|s| s.modulus).fold(0.0, f64::max);
    let maxima = RadialMaxima {
        r,
        value,
        angles: stationary
            .iter()
            .filter(|s| s.modulus >= value * (1.0 - tol.value_tie))
            .map(|s| s.theta)
            .collect(),
        is_full_circle: false,
    };
    Ok(CircleScan { maxima, stationary })
}

/// `M(r, p)` and the complete set of maximizing angles.
pub fn global_maximizers(p: &Polynomial, r: f64) -> Result<RadialMaxima> {
    global_maximizers_with(p, r, &Tolerances::default())
}

pub fn global_maximizers_with(p: &Polynomial, r: f64, tol: &Tolerances) -> Result<RadialMaxima> {
    scan_circle(p, r, tol).map(|s| s.maxima)
}

/// `M(r, p)` for `r >= 0` (the sign of `r` is ignored); `|a_0|` at `r = 0`.
pub fn max_modulus(p: &Polynomial, r: f64) -> f64 {
    let r = r.abs();
    if r == 0.0 {
        return p.coeffs()[0].norm();
    }
    match global_maximizers(p, r) {
        Ok(m) => m.value,
        Err(_) => sampled_max(p, r),
    }
}

fn sampled_max(p: &Polynomial, r: f64) -> f64 {
    let t = p.trig_profile(r);
    let n = 64 * (t.harmonics() + 1);
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            let (polished, ok) = polish_stationary(&t, theta, PI / n as f64 * 2.0);
            let a = modulus_at(p, r, theta);
            if ok {
                a.max(modulus_at(p, r, polished))
            } else {
                a
            }
        })
        .fold(0.0, f64::max)
}

/// Follows the local maximum of `|p(re^{iθ})|` nearest `theta_guess`.
///
/// Returns `(θ, |p(re^{iθ})|)` if Newton converges to a local maximum within
/// `max_wander` radians of the guess.
pub fn follow_local_max(
    p: &Polynomial,
    r: f64,
    theta_guess: f64,
    max_wander: f64,
) -> Option<(f64, f64)> {
    if r.is_nan() || r <= 0.0 {
        return None;
    }
    let t = p.trig_profile(r);
    let (theta, ok) = polish_stationary(&t, theta_guess, max_wander);
    if !ok || classify(&t, theta) != StationaryKind::Max {
        return None;
    }
    let theta = wrap_angle(theta);
    Some((theta, modulus_at(p, r, theta)))
}

//! Certified constructions `p = a(z² + 1) + p̂` with prescribed discontinuities
//! (odd factor `z ∏(z² − a_k²)`) or singleton components (odd factor
//! `−z ∏(z² − a_k²)²`).
//!
//! The size of `a` comes from explicit bounds. Write
//! `|p(re^{iθ})|² = a²|q|² + β(θ)` with `q = z² + 1` and
//! `β(θ) = Σ_m b_m cos mθ`. Each `b_m` is bounded for `r ≤ R′` by
//! `a·U_m + V_m`, where `U_m` collects the cross terms between `q` and `p̂` and
//! `V_m` the self terms of `p̂`. With `S = Σ m² U_m` and `T = Σ m² V_m`, both
//! `|β′(θ)/θ|` and `|β″(θ)|` are at most `S·a + T`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::circlemax::{angle_diff, global_maximizers_with, Tolerances};
use crate::error::{Error, Result};
use crate::poly::{odd_product_t1, odd_product_t2, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionKind {
    /// Discontinuities at the targets, degree `2n + 1`.
    T1,
    /// Singleton components at the targets, degree `4n + 1`.
    T2,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConstructionSpec {
    pub targets: Vec<f64>,
    pub kind: ConstructionKind,
    pub theta0: f64,
}

impl ConstructionSpec {
    pub fn new(kind: ConstructionKind, targets: Vec<f64>) -> Result<Self> {
        Self::with_theta0(kind, targets, PI / 8.0)
    }

    pub fn with_theta0(kind: ConstructionKind, targets: Vec<f64>, theta0: f64) -> Result<Self> {
        validate_targets(&targets)?;
        check_theta0(theta0)?;
        Ok(Self {
            targets,
            kind,
            theta0,
        })
    }

    pub fn p_hat(&self) -> Result<Polynomial> {
        match self.kind {
            ConstructionKind::T1 => odd_product_t1(&self.targets),
            ConstructionKind::T2 => odd_product_t2(&self.targets),
        }
    }

    pub fn expected_degree(&self) -> usize {
        match self.kind {
            ConstructionKind::T1 => 2 * self.targets.len() + 1,
            ConstructionKind::T2 => 4 * self.targets.len() + 1,
        }
    }
}

fn validate_targets(targets: &[f64]) -> Result<()> {
    if targets.is_empty() {
        return Err(Error::InvalidTargets("target list is empty".into()));
    }
    if let Some(t) = targets.iter().find(|t| !(t.is_finite() && **t > 0.0)) {
        return Err(Error::InvalidTargets(format!(
            "target {t} is not a positive real"
        )));
    }
    for (i, a) in targets.iter().enumerate() {
        if targets[..i].contains(a) {
            return Err(Error::InvalidTargets(format!("target {a} is repeated")));
        }
    }
    Ok(())
}

fn check_theta0(theta0: f64) -> Result<()> {
    if theta0 > 0.0 && theta0 < PI / 4.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "theta0 must lie in (0, pi/4), got {theta0}"
        )))
    }
}

/// `(R, R′) = (min/2, 2·max)` of the targets.
pub fn default_annulus(targets: &[f64]) -> Result<(f64, f64)> {
    validate_targets(targets)?;
    let min = targets.iter().copied().fold(f64::INFINITY, f64::min);
    let max = targets.iter().copied().fold(0.0, f64::max);
    Ok((min / 2.0, 2.0 * max))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theta0: f64,
    pub alpha: f64,
    #[serde(rename = "K_bound")]
    pub k_bound: f64,
    #[serde(rename = "R")]
    pub r: f64,
    #[serde(rename = "R_prime")]
    pub r_prime: f64,
    /// `S` in the bound `S·a + T` on the β harmonics.
    pub beta_slope: f64,
    /// `T` in the bound `S·a + T`.
    pub beta_intercept: f64,
    /// Bound on `|β′(θ)/θ|` at `a = a_cert`.
    pub beta1_bound: f64,
    /// Bound on `|β″(θ)|` at `a = a_cert`.
    pub beta2_bound: f64,
    pub a_first: f64,
    pub a_station: f64,
    pub a_concave: f64,
    pub a_cert: f64,
}

/// Smallest `a ≥ 0` with `A a² ≥ S a + T`.
fn quadratic_threshold(quad: f64, s: f64, t: f64) -> f64 {
    (s + (s * s + 4.0 * quad * t).sqrt()) / (2.0 * quad)
}

/// Harmonic bounds `(Σ m² U_m, Σ m² V_m)` at radius `r`.
fn beta_bounds(p_hat: &[f64], r: f64) -> (f64, f64) {
    let n = p_hat.len().max(3);
    let q = [1.0, 0.0, 1.0];
    let e = |j: usize| q.get(j).copied().unwrap_or(0.0);
    let c = |j: usize| p_hat.get(j).copied().unwrap_or(0.0);
    let (mut s, mut t) = (0.0, 0.0);
    for m in 1..n {
        let (mut u, mut v) = (0.0, 0.0);
        for j in 0..n - m {
            let rp = r.powi((2 * j + m) as i32);
            u += (e(j) * c(j + m) + c(j) * e(j + m)).abs() * rp;
            v += (c(j) * c(j + m)).abs() * rp;
        }
        let m2 = (m * m) as f64;
        s += m2 * 2.0 * u;
        t += m2 * 2.0 * v;
    }
    (s, t)
}

/// Explicit `a` making the real-axis confinement hold on `R ≤ |z| ≤ R′`.
pub fn certify_a(p_hat: &Polynomial, r: f64, r_prime: f64, theta0: f64) -> Result<Certificate> {
    check_theta0(theta0)?;
    if !(r > 0.0 && r < r_prime && r_prime.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "need 0 < R < R', got R = {r}, R' = {r_prime}"
        )));
    }
    if !p_hat.is_real() {
        return Err(Error::InvalidParameter(
            "p_hat must have real coefficients".into(),
        ));
    }
    let c = p_hat.real_coeffs();
    let alpha = 1.0 - (2.0 * theta0).cos();
    let k_bound = p_hat.abs_coeff_sum(r_prime);
    let a_first = 2.0 * k_bound * (r * r + 1.0) / (alpha * r * r);
    let (s, t) = beta_bounds(&c, r_prime);
    let a_station = quadratic_threshold(4.0 * r * r * (2.0 * theta0).sin() / theta0, s, t);
    let a_concave = quadratic_threshold(8.0 * r * r * (2.0 * theta0).cos(), s, t);
    let worst = a_first.max(a_station).max(a_concave);
    let a_cert = if worst > 0.0 { 2.0 * worst } else { 1.0 };
    Ok(Certificate {
        theta0,
        alpha,
        k_bound,
        r,
        r_prime,
        beta_slope: s,
        beta_intercept: t,
        beta1_bound: s * a_cert + t,
        beta2_bound: s * a_cert + t,
        a_first,
        a_station,
        a_concave,
        a_cert,
    })
}

/// `a(z² + 1) + p̂`.
pub fn with_even_part(p_hat: &Polynomial, a: f64) -> Polynomial {
    let q = Polynomial::from_real(&[a, 0.0, a]).expect("finite coefficients");
    p_hat.add(&q)
}

/// Builds the certified polynomial for `spec`.
pub fn build(spec: &ConstructionSpec) -> Result<(Polynomial, Certificate)> {
    let p_hat = spec.p_hat()?;
    let (r, r_prime) = default_annulus(&spec.targets)?;
    let cert = certify_a(&p_hat, r, r_prime, spec.theta0)?;
    Ok((with_even_part(&p_hat, cert.a_cert), cert))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignCase {
    PosOnly,
    NegOnly,
    Both,
}

impl SignCase {
    /// Expected maximizer angles on the circle of radius `r`.
    pub fn angles(self) -> &'static [f64] {
        match self {
            SignCase::PosOnly => &[0.0],
            SignCase::NegOnly => &[PI],
            SignCase::Both => &[0.0, PI],
        }
    }
}

fn check_odd_real(p_hat: &Polynomial) -> Result<Vec<f64>> {
    if !p_hat.is_real() {
        return Err(Error::InvalidParameter(
            "p_hat must have real coefficients".into(),
        ));
    }
    let c = p_hat.real_coeffs();
    let scale = c.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    if c.iter().step_by(2).any(|x| x.abs() > 1e-14 * scale) {
        return Err(Error::InvalidParameter("p_hat must be odd".into()));
    }
    Ok(c)
}

/// Case selected by the sign of `p̂(r)`, with `|p̂(r)| ≤ 1e-9 Σ|ĉ_k| r^k`
/// counted as zero.
pub fn expected_case(p_hat: &Polynomial, r: f64) -> Result<SignCase> {
    expected_case_with_tol(p_hat, r, 1e-9 * p_hat.abs_coeff_sum(r))
}

pub fn expected_case_with_tol(p_hat: &Polynomial, r: f64, zero_tol: f64) -> Result<SignCase> {
    check_odd_real(p_hat)?;
    let v = p_hat.eval_real(r);
    Ok(if v > zero_tol {
        SignCase::PosOnly
    } else if v < -zero_tol {
        SignCase::NegOnly
    } else {
        SignCase::Both
    })
}

/// Zero tolerance for `p̂(r)` matching the circle-maximum tie rule: `p(r)`
/// and `p(−r)` tie exactly when `2|p̂(r)| ≤ ε (a q(r) + |p̂(r)|)`.
pub fn tie_consistent_tol(a: f64, r: f64, value_tie: f64) -> f64 {
    value_tie * a * (r * r + 1.0) / (2.0 - value_tie)
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrichotomyMismatch {
    pub r: f64,
    pub expected: SignCase,
    pub angles: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrichotomyReport {
    pub radii_checked: usize,
    pub mismatches: Vec<TrichotomyMismatch>,
}

impl TrichotomyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares the circle maximizers of `a(z² + 1) + p̂` with the sign case at
/// `samples` uniformly spaced radii of `[R, R′]`.
pub fn verify_trichotomy(
    p_hat: &Polynomial,
    a: f64,
    r: f64,
    r_prime: f64,
    samples: usize,
    tol: &Tolerances,
) -> Result<TrichotomyReport> {
    check_odd_real(p_hat)?;
    let p = with_even_part(p_hat, a);
    let mut mismatches = Vec::new();
    let n = samples.max(2);
    for i in 0..n {
        let rho = r + (r_prime - r) * i as f64 / (n - 1) as f64;
        let expected =
            expected_case_with_tol(p_hat, rho, tie_consistent_tol(a, rho, tol.value_tie))?;
        let got = global_maximizers_with(&p, rho, tol)?;
        let want = expected.angles();
        let matches = got.angles.len() == want.len()
            && want
                .iter()
                .all(|w| got.angles.iter().any(|g| angle_diff(*g, *w).abs() <= 1e-9));
        if !matches {
            mismatches.push(TrichotomyMismatch {
                r: rho,
                expected,
                angles: got.angles,
            });
        }
    }
    Ok(TrichotomyReport {
        radii_checked: n,
        mismatches,
    })
}

//! Seeded self-check suites comparing the fast paths with the brute-force
//! oracles and with the structural identities they must satisfy.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circlemax::{angle_diff, global_maximizers, max_modulus};
use crate::constructor::{
    certify_a, default_annulus, verify_trichotomy, ConstructionKind, ConstructionSpec,
};
use crate::error::Result;
use crate::oracle::{grid_maximizers, power_sum_eval};
use crate::poly::Polynomial;
use crate::tracer::{global_discontinuities, trace, AnnulusWindow, GlobalOptions};

/// Suite sizes and thresholds. `tol_scale` multiplies every pass threshold;
/// setting it to zero makes any nonzero error a failure.
#[derive(Clone, Debug, PartialEq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub tol_scale: f64,
    pub expansion_polys: usize,
    pub expansion_points: usize,
    pub argmax_polys: usize,
    pub argmax_radii: usize,
    pub argmax_grid: usize,
    pub random_target_sets: usize,
    pub trichotomy_radii: usize,
    pub duality_polys: usize,
    pub finiteness_polys: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            tol_scale: 1.0,
            expansion_polys: 200,
            expansion_points: 100,
            argmax_polys: 100,
            argmax_radii: 20,
            argmax_grid: 100_000,
            random_target_sets: 20,
            trichotomy_radii: 500,
            duality_polys: 50,
            finiteness_polys: 20,
        }
    }
}

impl VerifyConfig {
    /// A small configuration for smoke runs.
    pub fn quick(seed: u64) -> Self {
        Self {
            seed,
            expansion_polys: 20,
            expansion_points: 20,
            argmax_polys: 10,
            argmax_radii: 5,
            argmax_grid: 20_000,
            random_target_sets: 3,
            trichotomy_radii: 100,
            duality_polys: 5,
            finiteness_polys: 2,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Largest observed error in the suite's own metric.
    pub worst: f64,
    pub threshold: f64,
    pub detail: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<12} {} cases={} failures={} worst={:.3e} threshold={:.1e}",
            self.name,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.failures,
            self.worst,
            self.threshold
        )
    }
}

/// Random polynomial of degree in `1..=max_degree` with coefficients in the
/// unit square; real coefficients when `real` is set. Never a monomial.
pub fn random_polynomial(rng: &mut impl Rng, max_degree: usize, real: bool) -> Polynomial {
    loop {
        let n = rng.gen_range(1..=max_degree);
        let coeffs: Vec<Complex64> = (0..=n)
            .map(|_| {
                let re = rng.gen_range(-1.0..1.0);
                let im = if real { 0.0 } else { rng.gen_range(-1.0..1.0) };
                Complex64::new(re, im)
            })
            .collect();
        let p = Polynomial::new(coeffs).expect("finite coefficients");
        if !p.is_monomial() {
            return p;
        }
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `|p|²` from the trigonometric expansion against direct evaluation,
/// relative to `|p|²`.
pub fn expansion_suite(cfg: &VerifyConfig) -> SuiteReport {
    let threshold = 1e-9 * cfg.tol_scale;
    let mut rng = rng_for(cfg.seed, 1);
    let (mut worst, mut failures, mut detail) = (0.0f64, 0, Vec::new());
    for i in 0..cfg.expansion_polys {
        let p = random_polynomial(&mut rng, 12, i % 4 == 0);
        for _ in 0..cfg.expansion_points {
            let r = rng.gen_range(0.05..2.5);
            let theta = rng.gen_range(-PI..PI);
            let direct = power_sum_eval(&p, Complex64::from_polar(r, theta)).norm_sqr();
            let expanded = p.trig_profile(r).eval(theta);
            let err = (expanded - direct).abs() / direct;
            worst = worst.max(err);
            if err.is_nan() || err > threshold {
                failures += 1;
                detail.push(format!("poly {i}: r={r} theta={theta} rel err {err:.3e}"));
            }
        }
    }
    SuiteReport {
        name: "expansion",
        cases: cfg.expansion_polys * cfg.expansion_points,
        failures,
        worst,
        threshold,
        detail,
    }
}

/// Circle maxima against the dense-grid oracle: value within `1e-9`
/// relative, same number of maximizers, angles within `1e-6`.
pub fn argmax_suite(cfg: &VerifyConfig) -> SuiteReport {
    let value_tol = 1e-9 * cfg.tol_scale;
    let angle_tol = 1e-6 * cfg.tol_scale;
    let mut rng = rng_for(cfg.seed, 2);
    let (mut worst, mut failures, mut detail) = (0.0f64, 0, Vec::new());
    for i in 0..cfg.argmax_polys {
        let p = random_polynomial(&mut rng, 10, i % 4 == 0);
        for _ in 0..cfg.argmax_radii {
            let r = rng.gen_range(0.2..3.0);
            let got = match global_maximizers(&p, r) {
                Ok(g) => g,
                Err(e) => {
                    failures += 1;
                    detail.push(format!("poly {i}: r={r}: {e}"));
                    continue;
                }
            };
            let (value, angles) = grid_maximizers(&p, r, cfg.argmax_grid, 1e-12);
            let value_err = (got.value - value).abs() / value;
            let same_count = got.angles.len() == angles.len();
            let angle_err = if same_count {
                got.angles
                    .iter()
                    .zip(&angles)
                    .map(|(a, b)| angle_diff(*a, *b).abs())
                    .fold(0.0, f64::max)
            } else {
                f64::INFINITY
            };
            worst = worst.max(value_err / 1e-9).max(angle_err / 1e-6);
            if !(value_err <= value_tol && angle_err <= angle_tol) {
                failures += 1;
                detail.push(format!(
                    "poly {i}: r={r} value err {value_err:.3e}, angles {:?} vs oracle {:?}",
                    got.angles, angles
                ));
            }
        }
    }
    // `worst` is reported in units of the unscaled thresholds.
    SuiteReport {
        name: "argmax",
        cases: cfg.argmax_polys * cfg.argmax_radii,
        failures,
        worst,
        threshold: cfg.tol_scale,
        detail,
    }
}

/// Random set of `1..=4` distinct targets in `[0.2, 2.5]`, at least `0.05`
/// apart.
pub fn random_targets(rng: &mut impl Rng) -> Vec<f64> {
    let n = rng.gen_range(1..=4);
    let mut out: Vec<f64> = Vec::with_capacity(n);
    while out.len() < n {
        let t: f64 = rng.gen_range(0.2..2.5);
        if out.iter().all(|u| (u - t).abs() >= 0.05) {
            out.push(t);
        }
    }
    out
}

/// Certified constructions satisfy the sign trichotomy at `a_cert` and
/// `10·a_cert`. The metric is the number of mismatching radii.
pub fn trichotomy_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(cfg.seed, 3);
    let mut sets = vec![vec![1.0], vec![0.5, 1.0], vec![0.5, 1.0, 2.0]];
    sets.extend((0..cfg.random_target_sets).map(|_| random_targets(&mut rng)));
    let tol = crate::circlemax::Tolerances::default();
    let (mut worst, mut failures, mut detail, mut cases) = (0.0f64, 0, Vec::new(), 0);
    for targets in &sets {
        for kind in [ConstructionKind::T1, ConstructionKind::T2] {
            let run = || -> Result<Vec<(f64, usize)>> {
                let spec = ConstructionSpec::new(kind, targets.clone())?;
                let p_hat = spec.p_hat()?;
                let (r, r_prime) = default_annulus(targets)?;
                let cert = certify_a(&p_hat, r, r_prime, spec.theta0)?;
                [1.0, 10.0]
                    .iter()
                    .map(|f| {
                        let rep = verify_trichotomy(
                            &p_hat,
                            f * cert.a_cert,
                            r,
                            r_prime,
                            cfg.trichotomy_radii,
                            &tol,
                        )?;
                        Ok((*f, rep.mismatches.len()))
                    })
                    .collect()
            };
            match run() {
                Ok(results) => {
                    for (f, bad) in results {
                        cases += 1;
                        worst = worst.max(bad as f64);
                        if bad > 0 {
                            failures += 1;
                            detail.push(format!(
                                "{kind:?} {targets:?} at {f}x a_cert: {bad} mismatching radii"
                            ));
                        }
                    }
                }
                Err(e) => {
                    failures += 1;
                    cases += 1;
                    detail.push(format!("{kind:?} {targets:?}: {e}"));
                }
            }
        }
    }
    SuiteReport {
        name: "trichotomy",
        cases,
        failures,
        worst,
        threshold: 0.0,
        detail,
    }
}

/// Every traced maximizer `w` of the reciprocal maps to a maximizer `1/w` of
/// `p`, up to `1e-8` relative deficit.
pub fn duality_suite(cfg: &VerifyConfig) -> SuiteReport {
    let threshold = 1e-8 * cfg.tol_scale;
    let mut rng = rng_for(cfg.seed, 4);
    let window = AnnulusWindow::new(0.25, 2.0, 200).expect("valid window");
    let (mut worst, mut failures, mut detail, mut cases) = (0.0f64, 0, Vec::new(), 0);
    for i in 0..cfg.duality_polys {
        let p = random_polynomial(&mut rng, 8, i % 4 == 0);
        let set = match p.reciprocal().and_then(|q| trace(&q, &window)) {
            Ok(s) => s,
            Err(e) => {
                failures += 1;
                detail.push(format!("poly {i}: {e}"));
                continue;
            }
        };
        for pt in set.components.iter().flat_map(|c| &c.points) {
            cases += 1;
            let z = Complex64::from_polar(1.0 / pt.r, -pt.theta);
            let m = max_modulus(&p, 1.0 / pt.r);
            let deficit = 1.0 - p.eval(z).norm() / m;
            worst = worst.max(deficit.abs());
            if deficit.is_nan() || deficit > threshold {
                failures += 1;
                detail.push(format!(
                    "poly {i}: w = {} e^{}i: deficit {deficit:.3e}",
                    pt.r, pt.theta
                ));
            }
        }
    }
    SuiteReport {
        name: "duality",
        cases,
        failures,
        worst,
        threshold,
        detail,
    }
}

fn reference_polys() -> Vec<Polynomial> {
    let p = crate::constructor::with_even_part(
        &crate::poly::odd_product_t1(&[0.5, 1.0, 2.0]).unwrap(),
        1000.0,
    );
    let pt = crate::constructor::with_even_part(
        &crate::poly::odd_product_t2(&[0.5, 1.0]).unwrap(),
        100.0,
    );
    vec![p, pt]
}

/// Global discontinuity counts agree at 2000 and 4000 steps. The metric is
/// the largest count difference.
pub fn finiteness_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rng = rng_for(cfg.seed, 5);
    let mut polys = reference_polys();
    polys.extend((0..cfg.finiteness_polys).map(|i| random_polynomial(&mut rng, 7, i % 2 == 0)));
    let (mut worst, mut failures, mut detail) = (0.0f64, 0, Vec::new());
    for (i, p) in polys.iter().enumerate() {
        let count = |steps| {
            global_discontinuities(
                p,
                &GlobalOptions {
                    steps,
                    ..Default::default()
                },
            )
            .map(|d| d.len())
        };
        match (count(2000), count(4000)) {
            (Ok(a), Ok(b)) => {
                let diff = a.abs_diff(b) as f64;
                worst = worst.max(diff);
                if a != b {
                    failures += 1;
                    detail.push(format!(
                        "poly {i}: {a} discontinuities at 2000 steps, {b} at 4000"
                    ));
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                failures += 1;
                detail.push(format!("poly {i}: {e}"));
            }
        }
    }
    SuiteReport {
        name: "finiteness",
        cases: polys.len(),
        failures,
        worst,
        threshold: 0.0,
        detail,
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    vec![
        expansion_suite(cfg),
        argmax_suite(cfg),
        trichotomy_suite(cfg),
        duality_suite(cfg),
        finiteness_suite(cfg),
    ]
}

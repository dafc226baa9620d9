//! Radius sweeps of the maximum modulus set.
//!
//! A sweep evaluates the circle maxima at a sorted list of radii and links
//! maximizers at adjacent radii into connected components. Two maximizers
//! at neighbouring radii are linked when no local minimum of `|p|` on either
//! circle lies strictly between them, i.e. they sit on the same peak of the
//! angular profile. This follows the peak through square-root type turns
//! (a maximum splitting symmetrically off the real axis) that a fixed
//! angular tolerance would break, while a jump of the global maximum from one
//! peak to another always crosses a valley and is never linked.
//!
//! After the coarse sweep the tracer
//! 1. looks for radii strictly between samples where a secondary peak just
//!    touches the maximum (candidate singletons) and adds them,
//! 2. re-sweeps every interval in which a component opens or closes at
//!    10× finer spacing, up to three times,
//! 3. collapses components that only exist through a quadratic touch of the
//!    maximum onto the single radius of the touch.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::circlemax::{
    angle_diff, follow_local_max, scan_circle, CircleScan, StationaryKind, Tolerances,
};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Uniform,
    Geometric,
}

/// Radius range `[r_min, r_max]` sampled at `steps` radii.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AnnulusWindow {
    pub r_min: f64,
    pub r_max: f64,
    pub steps: usize,
    pub spacing: Spacing,
}

impl AnnulusWindow {
    /// Geometric spacing when `r_max / r_min > 10`, uniform otherwise.
    pub fn new(r_min: f64, r_max: f64, steps: usize) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite() && r_min > 0.0 && r_min < r_max) {
            return Err(Error::InvalidParameter(format!(
                "annulus window needs 0 < r_min < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if steps < 2 {
            return Err(Error::InvalidParameter(format!(
                "steps must be at least 2, got {steps}"
            )));
        }
        let spacing = if r_max / r_min > 10.0 {
            Spacing::Geometric
        } else {
            Spacing::Uniform
        };
        Ok(Self {
            r_min,
            r_max,
            steps,
            spacing,
        })
    }

    pub fn radii(&self) -> Vec<f64> {
        let n = self.steps - 1;
        let mut out: Vec<f64> = (0..=n)
            .map(|i| {
                let t = i as f64 / n as f64;
                match self.spacing {
                    Spacing::Uniform => self.r_min + (self.r_max - self.r_min) * t,
                    Spacing::Geometric => self.r_min * (self.r_max / self.r_min).powf(t),
                }
            })
            .collect();
        out[0] = self.r_min;
        out[n] = self.r_max;
        out
    }

    /// Spacing of the base grid near radius `r`.
    pub fn base_step_at(&self, r: f64) -> f64 {
        let n = (self.steps - 1) as f64;
        match self.spacing {
            Spacing::Uniform => (self.r_max - self.r_min) / n,
            Spacing::Geometric => r * ((self.r_max / self.r_min).powf(1.0 / n) - 1.0),
        }
    }
}

/// One maximizer `r e^{iθ}` with `value = |p(r e^{iθ})|`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MaxPoint {
    pub r: f64,
    pub theta: f64,
    pub value: f64,
}

impl MaxPoint {
    pub fn x(&self) -> f64 {
        self.r * self.theta.cos()
    }

    pub fn y(&self) -> f64 {
        self.r * self.theta.sin()
    }
}

/// A connected component of the sampled maximum modulus set.
#[derive(Clone, Debug, PartialEq)]
pub struct CurveComponent {
    /// Sorted by radius (then angle).
    pub points: Vec<MaxPoint>,
    pub min_modulus: f64,
    pub max_modulus: f64,
    /// Touches the inner window boundary, so its true inner end is unknown.
    pub censored_inner: bool,
    pub censored_outer: bool,
    pub is_singleton: bool,
    /// For singletons: half the gap between the neighbouring sampled radii,
    /// i.e. the radial resolution at which the component is a single point.
    pub singleton_resolution: Option<f64>,
}

impl CurveComponent {
    pub fn first(&self) -> &MaxPoint {
        &self.points[0]
    }
}

/// Traced components of the maximum modulus set inside a window.
#[derive(Clone, Debug, PartialEq)]
pub struct MaxModSet {
    pub window: AnnulusWindow,
    pub components: Vec<CurveComponent>,
    /// Radii at which `|p|` was constant on the whole circle.
    pub full_circle_radii: Vec<f64>,
}

impl MaxModSet {
    pub fn point_count(&self) -> usize {
        self.components.iter().map(|c| c.points.len()).sum()
    }
}

/// A component whose smallest modulus is positive and inside the window.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Discontinuity {
    pub modulus: f64,
    pub component_index: usize,
    /// `(r, θ)` of the component's innermost point.
    pub location: (f64, f64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceOptions {
    pub tolerances: Tolerances,
    /// Number of local refinement passes around component events.
    pub refine_levels: usize,
    /// Subdivision factor per refinement pass.
    pub refine_factor: usize,
    /// Secondary peaks with relative deficit below this are watched for
    /// touching the maximum between samples.
    pub watch_deficit: f64,
}

impl Default for TraceOptions {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            refine_levels: 3,
            refine_factor: 10,
            watch_deficit: 1e-2,
        }
    }
}

/// Circle data at one radius, in the coordinates of the traced polynomial.
#[derive(Clone, Debug)]
pub(crate) struct Sample {
    pub r: f64,
    pub max_value: f64,
    pub full_circle: bool,
    /// Global maximizers `(θ, |p|)`.
    pub maxima: Vec<(f64, f64)>,
    /// Local maxima `(θ, |p|)`, global ones included.
    pub peaks: Vec<(f64, f64)>,
    pub valleys: Vec<f64>,
}

impl Sample {
    fn from_scan(scan: CircleScan) -> Self {
        let m = scan.maxima;
        let maxima = m
            .angles
            .iter()
            .map(|&a| {
                let v = scan
                    .stationary
                    .iter()
                    .find(|s| s.theta == a)
                    .map_or(m.value, |s| s.modulus);
                (a, v)
            })
            .collect();
        let peaks = scan
            .stationary
            .iter()
            .filter(|s| s.kind == StationaryKind::Max || m.angles.contains(&s.theta))
            .map(|s| (s.theta, s.modulus))
            .collect();
        let valleys = scan
            .stationary
            .iter()
            .filter(|s| s.kind == StationaryKind::Min)
            .map(|s| s.theta)
            .collect();
        Self {
            r: m.r,
            max_value: m.value,
            full_circle: m.is_full_circle,
            maxima,
            peaks,
            valleys,
        }
    }

    /// The same circle data seen through `z ↦ 1/z` for the reciprocal of a
    /// degree-`n` polynomial: `|p(1/w)| = |q(w)| / |w|^n`.
    pub(crate) fn inverted(&self, n: usize) -> Self {
        let scale = self.r.powi(-(n as i32));
        let flip = |v: &Vec<(f64, f64)>| {
            let mut out: Vec<(f64, f64)> = v
                .iter()
                .map(|&(a, val)| (crate::circlemax::wrap_angle(-a), val * scale))
                .collect();
            out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            out
        };
        let mut valleys: Vec<f64> = self
            .valleys
            .iter()
            .map(|a| crate::circlemax::wrap_angle(-a))
            .collect();
        valleys.sort_by(|a, b| a.partial_cmp(b).unwrap());
        Self {
            r: 1.0 / self.r,
            max_value: self.max_value * scale,
            full_circle: self.full_circle,
            maxima: flip(&self.maxima),
            peaks: flip(&self.peaks),
            valleys,
        }
    }
}

fn compute_samples(p: &Polynomial, radii: &[f64], tol: &Tolerances) -> Result<Vec<Sample>> {
    radii
        .par_iter()
        .map(|&r| scan_circle(p, r, tol).map(Sample::from_scan))
        .collect()
}

fn merge_samples(samples: &mut Vec<Sample>, extra: Vec<Sample>) {
    samples.extend(extra);
    samples.sort_by(|a, b| a.r.partial_cmp(&b.r).unwrap());
    samples.dedup_by(|b, a| (a.r - b.r).abs() <= 1e-14 * a.r);
}

/// Whether `theta_a` on circle `a` and `theta_b` on circle `b` lie on the same
/// peak: no valley of either circle strictly between them.
fn same_hill(a: &Sample, theta_a: f64, b: &Sample, theta_b: f64, merge_tol: f64) -> bool {
    let d = angle_diff(theta_a, theta_b);
    if d.abs() <= merge_tol {
        return true;
    }
    a.valleys.iter().chain(&b.valleys).all(|&v| {
        let dv = angle_diff(theta_a, v);
        !(dv.signum() == d.signum() && dv.abs() > merge_tol && dv.abs() < d.abs() - merge_tol)
    })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Components as lists of `(sample index, maximizer index)`, ordered by their
/// first point.
fn chain(samples: &[Sample], merge_tol: f64) -> Vec<Vec<(usize, usize)>> {
    let mut offsets = Vec::with_capacity(samples.len() + 1);
    let mut total = 0;
    for s in samples {
        offsets.push(total);
        total += s.maxima.len();
    }
    offsets.push(total);
    let mut uf = UnionFind::new(total);
    for i in 0..samples.len().saturating_sub(1) {
        let (a, b) = (&samples[i], &samples[i + 1]);
        for (ia, &(ta, _)) in a.maxima.iter().enumerate() {
            for (ib, &(tb, _)) in b.maxima.iter().enumerate() {
                if same_hill(a, ta, b, tb, merge_tol) {
                    uf.union(offsets[i] + ia, offsets[i + 1] + ib);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, s) in samples.iter().enumerate() {
        for j in 0..s.maxima.len() {
            let root = uf.find(offsets[i] + j);
            groups.entry(root).or_default().push((i, j));
        }
    }
    groups.into_values().collect()
}

/// Intervals `(i, i + 1)` around radii where a component starts or stops.
fn event_intervals(groups: &[Vec<(usize, usize)>], n_samples: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for g in groups {
        let first = g.iter().map(|e| e.0).min().unwrap();
        let last = g.iter().map(|e| e.0).max().unwrap();
        if first > 0 {
            out.push(first - 1);
        }
        if last + 1 < n_samples {
            out.push(last);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Relative amount by which the peak followed from `theta` falls short of
/// the circle maximum; `1` when the peak cannot be followed.
fn peak_deficit(p: &Polynomial, r: f64, theta: f64, tol: &Tolerances) -> (f64, f64) {
    let Ok(scan) = scan_circle(p, r, tol) else {
        return (1.0, theta);
    };
    let m = scan.maxima.value;
    match follow_local_max(p, r, theta, 0.1) {
        Some((t, v)) if m > 0.0 => ((1.0 - v / m).max(0.0), t),
        _ => (1.0, theta),
    }
}

/// Golden-section minimization of the peak deficit over `[a, b]`.
fn minimize_deficit(
    p: &Polynomial,
    a: f64,
    b: f64,
    theta: f64,
    tol: &Tolerances,
) -> (f64, f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (a, b);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut tc) = peak_deficit(p, c, theta, tol);
    let (mut fd, mut td) = peak_deficit(p, d, theta, tol);
    let stop = 1e-13 * b.abs().max(1.0);
    while b - a > stop {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            td = tc;
            c = b - inv_phi * (b - a);
            (fc, tc) = peak_deficit(p, c, tc, tol);
        } else {
            a = c;
            c = d;
            fc = fd;
            tc = td;
            d = a + inv_phi * (b - a);
            (fd, td) = peak_deficit(p, d, td, tol);
        }
        if fc.min(fd) == 0.0 {
            break;
        }
    }
    if fc <= fd {
        (c, fc, tc)
    } else {
        (d, fd, td)
    }
}

/// Radii strictly between samples where a watched secondary peak reaches
/// the maximum.
fn touch_radii(p: &Polynomial, samples: &[Sample], opts: &TraceOptions) -> Vec<f64> {
    let tol = &opts.tolerances;
    let deficit = |s: &Sample, v: f64| 1.0 - v / s.max_value;
    let candidates: Vec<(usize, f64)> = (1..samples.len().saturating_sub(1))
        .flat_map(|i| {
            let (prev, cur, next) = (&samples[i - 1], &samples[i], &samples[i + 1]);
            cur.peaks
                .iter()
                .filter_map(move |&(theta, v)| {
                    let d = deficit(cur, v);
                    if d <= tol.value_tie || d > opts.watch_deficit {
                        return None;
                    }
                    let neighbour = |s: &Sample| {
                        s.peaks
                            .iter()
                            .filter(|(t, _)| same_hill(cur, theta, s, *t, tol.angle_merge))
                            .map(|&(_, w)| deficit(s, w))
                            .fold(f64::INFINITY, f64::min)
                    };
                    let (dp, dn) = (neighbour(prev), neighbour(next));
                    (dp > tol.value_tie
                        && dn > tol.value_tie
                        && dp >= d
                        && dn >= d
                        && dp.is_finite()
                        && dn.is_finite())
                    .then_some((i, theta))
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut found: Vec<f64> = candidates
        .par_iter()
        .filter_map(|&(i, theta)| {
            let (r, d, _) = minimize_deficit(p, samples[i - 1].r, samples[i + 1].r, theta, tol);
            (d <= tol.value_tie).then_some(r)
        })
        .collect();
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    found
}

fn refine_events(
    p: &Polynomial,
    samples: &mut Vec<Sample>,
    window: &AnnulusWindow,
    opts: &TraceOptions,
) -> Result<()> {
    let factor = opts.refine_factor.max(2);
    let floor = (factor as f64).powi(opts.refine_levels as i32);
    for _ in 0..opts.refine_levels {
        let groups = chain(samples, opts.tolerances.angle_merge);
        let mut new_radii = Vec::new();
        for i in event_intervals(&groups, samples.len()) {
            let (a, b) = (samples[i].r, samples[i + 1].r);
            if b - a <= 1.5 * window.base_step_at(a) / floor {
                continue;
            }
            for k in 1..factor {
                new_radii.push(a + (b - a) * k as f64 / factor as f64);
            }
        }
        if new_radii.is_empty() {
            break;
        }
        let extra = compute_samples(p, &new_radii, &opts.tolerances)?;
        merge_samples(samples, extra);
    }
    Ok(())
}

/// Components that exist only through a quadratic touch of the maximum get
/// collapsed onto the radius of the touch.
fn collapse_touches(p: &Polynomial, samples: &mut Vec<Sample>, opts: &TraceOptions) -> Result<()> {
    let tol = &opts.tolerances;
    let groups = chain(samples, tol.angle_merge);
    let mut owner: Vec<Vec<usize>> = samples
        .iter()
        .map(|s| vec![usize::MAX; s.maxima.len()])
        .collect();
    for (g, members) in groups.iter().enumerate() {
        for &(i, j) in members {
            owner[i][j] = g;
        }
    }
    let last = samples.len() - 1;
    let mut plans = Vec::new();
    for (g, members) in groups.iter().enumerate() {
        let first = members.iter().map(|e| e.0).min().unwrap();
        let end = members.iter().map(|e| e.0).max().unwrap();
        if first == 0 || end == last || members.len() < 2 {
            continue;
        }
        let tie_only = members.iter().all(|&(i, j)| {
            let own = samples[i].maxima[j].1;
            samples[i]
                .maxima
                .iter()
                .enumerate()
                .any(|(k, &(_, v))| owner[i][k] != g && own <= v * (1.0 + 1e-14))
        });
        if !tie_only {
            continue;
        }
        let (i0, j0) = members[0];
        let theta = samples[i0].maxima[j0].0;
        let (r_star, d_star, theta_star) =
            minimize_deficit(p, samples[first - 1].r, samples[end + 1].r, theta, tol);
        if d_star > tol.value_tie {
            continue;
        }
        let half = (r_star - samples[first].r).max(samples[end].r - r_star);
        let probe = |r: f64| peak_deficit(p, r, theta_star, tol).0;
        if probe(r_star - 0.5 * half) > 1e-2 * tol.value_tie
            && probe(r_star + 0.5 * half) > 1e-2 * tol.value_tie
        {
            plans.push((samples[first - 1].r, samples[end + 1].r, r_star));
        }
    }
    if plans.is_empty() {
        return Ok(());
    }
    samples.retain(|s| !plans.iter().any(|&(lo, hi, _)| s.r > lo && s.r < hi));
    let extra = compute_samples(p, &plans.iter().map(|pl| pl.2).collect::<Vec<_>>(), tol)?;
    merge_samples(samples, extra);
    Ok(())
}

fn check_traceable(p: &Polynomial) -> Result<()> {
    if p.is_monomial() {
        return Err(Error::Monomial);
    }
    Ok(())
}

pub(crate) fn trace_samples(
    p: &Polynomial,
    window: &AnnulusWindow,
    opts: &TraceOptions,
) -> Result<Vec<Sample>> {
    check_traceable(p)?;
    let tol = &opts.tolerances;
    let mut samples = compute_samples(p, &window.radii(), tol)?;
    let touches = touch_radii(p, &samples, opts);
    if !touches.is_empty() {
        let extra = compute_samples(p, &touches, tol)?;
        merge_samples(&mut samples, extra);
    }
    refine_events(p, &mut samples, window, opts)?;
    collapse_touches(p, &mut samples, opts)?;
    Ok(samples)
}

pub(crate) fn assemble(samples: &[Sample], window: AnnulusWindow, merge_tol: f64) -> MaxModSet {
    let groups = chain(samples, merge_tol);
    let last = samples.len().saturating_sub(1);
    let mut components: Vec<CurveComponent> = groups
        .iter()
        .map(|members| {
            let mut points: Vec<MaxPoint> = members
                .iter()
                .map(|&(i, j)| {
                    let (theta, value) = samples[i].maxima[j];
                    MaxPoint {
                        r: samples[i].r,
                        theta,
                        value,
                    }
                })
                .collect();
            points.sort_by(|a, b| {
                a.r.partial_cmp(&b.r)
                    .unwrap()
                    .then(a.theta.partial_cmp(&b.theta).unwrap())
            });
            let first = members.iter().map(|e| e.0).min().unwrap();
            let end = members.iter().map(|e| e.0).max().unwrap();
            let censored_inner = first == 0;
            let censored_outer = end == last;
            let is_singleton = points.len() == 1 && !censored_inner && !censored_outer;
            let singleton_resolution =
                is_singleton.then(|| 0.5 * (samples[first + 1].r - samples[first - 1].r));
            CurveComponent {
                min_modulus: points[0].r,
                max_modulus: points[points.len() - 1].r,
                points,
                censored_inner,
                censored_outer,
                is_singleton,
                singleton_resolution,
            }
        })
        .collect();
    components.sort_by(|a, b| {
        a.min_modulus
            .partial_cmp(&b.min_modulus)
            .unwrap()
            .then(a.first().theta.partial_cmp(&b.first().theta).unwrap())
    });
    let full_circle_radii = samples
        .iter()
        .filter(|s| s.full_circle)
        .map(|s| s.r)
        .collect();
    MaxModSet {
        window,
        components,
        full_circle_radii,
    }
}

/// Traces the maximum modulus set of `p` over `window` with default options.
pub fn trace(p: &Polynomial, window: &AnnulusWindow) -> Result<MaxModSet> {
    trace_with(p, window, &TraceOptions::default())
}

pub fn trace_with(
    p: &Polynomial,
    window: &AnnulusWindow,
    opts: &TraceOptions,
) -> Result<MaxModSet> {
    let samples = trace_samples(p, window, opts)?;
    Ok(assemble(&samples, *window, opts.tolerances.angle_merge))
}

/// One record per component that is not censored at the inner boundary,
/// singletons included.
pub fn detect_discontinuities(set: &MaxModSet) -> Vec<Discontinuity> {
    set.components
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.censored_inner && c.min_modulus > 0.0)
        .map(|(i, c)| Discontinuity {
            modulus: c.min_modulus,
            component_index: i,
            location: (c.first().r, c.first().theta),
        })
        .collect()
}

/// `(r, θ)` of every singleton component.
pub fn detect_singletons(set: &MaxModSet) -> Vec<(f64, f64)> {
    set.components
        .iter()
        .filter(|c| c.is_singleton)
        .map(|c| (c.first().r, c.first().theta))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GlobalOptions {
    /// Radius separating the directly traced part from the part traced
    /// through the reciprocal polynomial.
    pub r_split: f64,
    pub steps: usize,
    /// Inner cutoff as a fraction of `r_split`; the component reaching it is
    /// taken to be the component of the origin.
    pub inner_cutoff: f64,
    pub trace: TraceOptions,
}

impl Default for GlobalOptions {
    fn default() -> Self {
        Self {
            r_split: 1.0,
            steps: 2000,
            inner_cutoff: 1e-3,
            trace: TraceOptions::default(),
        }
    }
}

/// Traces `p` on `[ε, r_split]` and its reciprocal `q` on `[ε / r_split², 1 / r_split]`
/// (the same window when `r_split = 1`), maps the maximizers `w` of `q` to
/// `1/w` and links everything into one set over `[ε, r_split² / ε]`.
pub fn global_trace(p: &Polynomial, opts: &GlobalOptions) -> Result<MaxModSet> {
    check_traceable(p)?;
    if !(opts.r_split.is_finite() && opts.r_split > 0.0)
        || !(opts.inner_cutoff > 0.0 && opts.inner_cutoff < 1.0)
    {
        return Err(Error::InvalidParameter(
            "r_split must be positive and inner_cutoff in (0, 1)".into(),
        ));
    }
    let eps = opts.inner_cutoff * opts.r_split;
    let inner_window = AnnulusWindow::new(eps, opts.r_split, opts.steps)?;
    let outer_window = AnnulusWindow::new(
        opts.inner_cutoff / opts.r_split,
        1.0 / opts.r_split,
        opts.steps,
    )?;
    let q = p.reciprocal()?;
    let mut samples = trace_samples(p, &inner_window, &opts.trace)?;
    let n = p.degree();
    let outer: Vec<Sample> = trace_samples(&q, &outer_window, &opts.trace)?
        .iter()
        .map(|s| s.inverted(n))
        .collect();
    merge_samples(&mut samples, outer);
    let r_max = opts.r_split / opts.inner_cutoff;
    let window = AnnulusWindow {
        r_min: eps,
        r_max,
        steps: 2 * opts.steps - 1,
        spacing: Spacing::Geometric,
    };
    Ok(assemble(
        &samples,
        window,
        opts.trace.tolerances.angle_merge,
    ))
}

/// Discontinuities of the whole maximum modulus set, found by combining a
/// direct trace inside `r_split` with a trace of the reciprocal polynomial.
pub fn global_discontinuities(p: &Polynomial, opts: &GlobalOptions) -> Result<Vec<Discontinuity>> {
    Ok(detect_discontinuities(&global_trace(p, opts)?))
}

//! All roots of a complex polynomial by Aberth–Ehrlich simultaneous iteration.
//!
//! Initial approximations are placed on circles whose radii come from the
//! upper convex hull of `(k, log|c_k|)` (the Newton polygon), which keeps the
//! iteration well behaved for coefficient lists spanning many orders of
//! magnitude. A root is frozen once `|p(z)|` drops below the a-priori
//! rounding bound of Horner's rule at `z`, so the result has backward error
//! on the order of a few units in the last place of the coefficients.

use num_complex::Complex64;

const MAX_ITERATIONS: usize = 500;

#[derive(Debug, Clone, PartialEq)]
pub struct RootsError {
    pub converged: usize,
    pub degree: usize,
}

/// Returns all `n` roots of `Σ coeffs[k] z^k`, with multiplicity.
///
/// The leading coefficient must be nonzero; zero low-order coefficients
/// produce exact zero roots.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>, RootsError> {
    let zero = Complex64::new(0.0, 0.0);
    let mut end = coeffs.len();
    while end > 0 && coeffs[end - 1] == zero {
        end -= 1;
    }
    let coeffs = &coeffs[..end];
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let shift = coeffs.iter().position(|c| *c != zero).unwrap();
    let mut roots = vec![zero; shift];
    let reduced = &coeffs[shift..];
    let n = reduced.len() - 1;
    match n {
        0 => {}
        1 => roots.push(-reduced[0] / reduced[1]),
        _ => roots.extend(aberth(reduced)?),
    }
    Ok(roots)
}

fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > 0.0)
        .map(|(k, c)| (k, c.norm().ln()))
        .collect();
    // Upper convex hull, left to right.
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (x1, y1) = hull[hull.len() - 2];
            let (x2, y2) = hull[hull.len() - 1];
            let cross = (x2 as f64 - x1 as f64) * (p.1 - y1) - (y2 - y1) * (p.0 as f64 - x1 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let mut guesses = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (k0, y0) = w[0];
        let (k1, y1) = w[1];
        let count = k1 - k0;
        let radius = ((y0 - y1) / count as f64).exp();
        for j in 0..count {
            let angle = 2.0 * std::f64::consts::PI * j as f64 / count as f64
                + 2.0 * std::f64::consts::PI * k0 as f64 / n as f64
                + sigma;
            guesses.push(Complex64::from_polar(radius, angle));
        }
    }
    guesses
}

/// Newton correction `p(z)/p'(z)` and whether `|p(z)|` is within the Horner
/// rounding bound.
fn newton_ratio(coeffs: &[Complex64], z: Complex64) -> (Complex64, bool) {
    let n = coeffs.len() - 1;
    let eps = f64::EPSILON;
    if z.norm() <= 1.0 {
        let mut p = coeffs[n];
        let mut dp = Complex64::new(0.0, 0.0);
        let mut bound = coeffs[n].norm();
        let az = z.norm();
        for k in (0..n).rev() {
            dp = dp * z + p;
            p = p * z + coeffs[k];
            bound = bound * az + coeffs[k].norm();
        }
        let small = p.norm() <= 4.0 * (n as f64) * eps * bound;
        (p / dp, small)
    } else {
        // Evaluate the reversed polynomial at y = 1/z to avoid overflow.
        let y = z.inv();
        let ay = y.norm();
        let mut r = coeffs[0];
        let mut dr = Complex64::new(0.0, 0.0);
        let mut bound = coeffs[0].norm();
        for &c in &coeffs[1..] {
            dr = dr * y + r;
            r = r * y + c;
            bound = bound * ay + c.norm();
        }
        let small = r.norm() <= 4.0 * (n as f64) * eps * bound;
        // p(z) = z^n r(y), p'(z) = z^{n-1} (n r(y) - y r'(y))
        let denom = r * n as f64 - y * dr;
        (z * r / denom, small)
    }
}

fn aberth(coeffs: &[Complex64]) -> Result<Vec<Complex64>, RootsError> {
    let n = coeffs.len() - 1;
    let mut z = initial_guesses(coeffs);
    debug_assert_eq!(z.len(), n);
    let mut done = vec![false; n];
    for _ in 0..MAX_ITERATIONS {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (ratio, small) = newton_ratio(coeffs, z[i]);
            if small {
                done[i] = true;
                continue;
            }
            all_done = false;
            if !ratio.re.is_finite() || !ratio.im.is_finite() {
                // Stationary point of p: nudge off it.
                z[i] *= Complex64::from_polar(1.0 + 1e-3, 0.1);
                continue;
            }
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    sum += (z[i] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() <= f64::EPSILON * z[i].norm() {
                done[i] = true;
            }
        }
        if all_done {
            return Ok(z);
        }
    }
    let converged = done.iter().filter(|&&d| d).count();
    if converged == n {
        Ok(z)
    } else {
        Err(RootsError {
            converged,
            degree: n,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn from_roots(roots: &[Complex64]) -> Vec<Complex64> {
        let mut p = vec![c(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![c(0.0, 0.0); p.len() + 1];
            for (k, &a) in p.iter().enumerate() {
                next[k + 1] += a;
                next[k] -= a * r;
            }
            p = next;
        }
        p
    }

    fn assert_same_roots(mut got: Vec<Complex64>, want: &[Complex64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for w in want {
            let (idx, d) = got
                .iter()
                .enumerate()
                .map(|(i, g)| (i, (g - w).norm()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
                .unwrap();
            assert!(
                d <= tol * (1.0 + w.norm()),
                "root {w} missing (closest {d})"
            );
            got.remove(idx);
        }
    }

    #[test]
    fn quadratic_and_linear() {
        assert_same_roots(
            polynomial_roots(&[c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap(),
            &[c(0.0, 1.0), c(0.0, -1.0)],
            1e-14,
        );
        assert_eq!(
            polynomial_roots(&[c(2.0, 0.0), c(-4.0, 0.0)]).unwrap(),
            vec![c(0.5, 0.0)]
        );
        assert!(polynomial_roots(&[c(3.0, 0.0)]).unwrap().is_empty());
    }

    #[test]
    fn zero_roots_and_trailing_zeros() {
        let roots = polynomial_roots(&[
            c(0.0, 0.0),
            c(0.0, 0.0),
            c(-1.0, 0.0),
            c(1.0, 0.0),
            c(0.0, 0.0),
        ])
        .unwrap();
        assert_same_roots(roots, &[c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)], 1e-14);
    }

    #[test]
    fn unit_circle_roots_of_unity() {
        let n = 24;
        let mut coeffs = vec![c(0.0, 0.0); n + 1];
        coeffs[0] = c(-1.0, 0.0);
        coeffs[n] = c(1.0, 0.0);
        let want: Vec<_> = (0..n)
            .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
            .collect();
        assert_same_roots(polynomial_roots(&coeffs).unwrap(), &want, 1e-13);
    }

    #[test]
    fn widely_scaled_roots() {
        let want = [
            c(1e-6, 0.0),
            c(0.0, 1.0),
            c(0.6, -0.8),
            c(1e5, 3e4),
            c(-2e3, 0.0),
        ];
        assert_same_roots(polynomial_roots(&from_roots(&want)).unwrap(), &want, 1e-10);
    }

    #[test]
    fn wilkinson_like_cluster() {
        let want: Vec<_> = (1..=12)
            .map(|k| c(k as f64 / 4.0, 0.1 * k as f64))
            .collect();
        assert_same_roots(polynomial_roots(&from_roots(&want)).unwrap(), &want, 1e-6);
    }
}

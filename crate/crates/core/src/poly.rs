//! Complex polynomials in ascending coefficient order, the modulus-squared
//! cosine/sine expansion on a circle, reciprocal polynomials, and the odd
//! product polynomials used by the constructions.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::ddouble::DoubleDouble;
use crate::error::{Error, Result};

/// A polynomial `Σ a_k z^k` with complex coefficients.
///
/// `coeffs[k]` is the coefficient of `z^k`. The list is never empty and, in
/// canonical form, its last entry is nonzero unless the polynomial is
/// identically zero (then it is `[0]`).
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<Complex64>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(Error::InvalidParameter("non-finite coefficient".into()));
        }
        let mut coeffs = coeffs;
        while coeffs.len() > 1 && *coeffs.last().unwrap() == Complex64::new(0.0, 0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Ok(Self { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0)],
        }
    }

    /// The monomial `c z^k`.
    pub fn monomial(c: Complex64, k: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs).expect("finite monomial")
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Complex64::new(0.0, 0.0)
    }

    /// True when exactly one coefficient is nonzero (constants included).
    pub fn is_monomial(&self) -> bool {
        self.coeffs
            .iter()
            .filter(|c| **c != Complex64::new(0.0, 0.0))
            .count()
            <= 1
    }

    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| *c != Complex64::new(0.0, 0.0))
            .unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.im == 0.0)
    }

    /// Real parts of the coefficients.
    pub fn real_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.re).collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Evaluation at a real point with real arithmetic on the real parts.
    pub fn eval_real(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c.re)
    }

    /// `Σ |a_k| r^k`, an upper bound for `|p(z)|` on `|z| = r`.
    pub fn abs_coeff_sum(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect()).expect("finite scale")
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Complex64::new(0.0, 0.0);
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).copied().unwrap_or(zero)
                    + other.coeffs.get(k).copied().unwrap_or(zero)
            })
            .collect();
        Self::new(coeffs).expect("finite sum")
    }

    /// Drops trailing coefficients below `rel_tol` times the largest
    /// coefficient magnitude.
    pub fn trimmed(&self, rel_tol: f64) -> Self {
        let max = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() > 1 && coeffs.last().unwrap().norm() <= rel_tol * max {
            coeffs.pop();
        }
        Self::new(coeffs).expect("finite")
    }

    /// The reciprocal polynomial `z^n p(1/z)` with `n = deg p`.
    ///
    /// Coefficient reversal; when `a_0 = 0` the result has degree
    /// `n - valuation(p)`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `|p(re^{iθ})|²` as a finite cosine/sine series in θ.
    pub fn trig_profile(&self, r: f64) -> TrigProfile {
        let n = self.degree();
        // Powers r^k for k up to 2n.
        let mut pow = Vec::with_capacity(2 * n + 1);
        let mut acc = 1.0;
        for _ in 0..=2 * n {
            pow.push(acc);
            acc *= r;
        }
        let c0 = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a.norm_sqr() * pow[2 * k])
            .sum();
        let mut cos_coeffs = vec![0.0; n];
        let mut sin_coeffs = vec![0.0; n];
        for m in 1..=n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..=n - m {
                let k = j + m;
                s += self.coeffs[j].conj() * self.coeffs[k] * pow[j + k];
            }
            // 2 Re(s e^{imθ}) = 2 Re s cos mθ - 2 Im s sin mθ
            cos_coeffs[m - 1] = 2.0 * s.re;
            sin_coeffs[m - 1] = -2.0 * s.im;
        }
        TrigProfile {
            r,
            c0,
            cos_coeffs,
            sin_coeffs,
        }
    }

    /// Parses the JSON text format `{"coeffs": [[re, im], ...]}`; bare reals
    /// are accepted as `[re, 0]`.
    pub fn from_json(text: &str) -> Result<Self> {
        let wire: PolyWire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if wire.coeffs.is_empty() {
            return Err(Error::Parse("empty coefficient list".into()));
        }
        let coeffs = wire
            .coeffs
            .into_iter()
            .map(|c| match c {
                CoeffWire::Pair([re, im]) => Complex64::new(re, im),
                CoeffWire::Real(re) => Complex64::new(re, 0.0),
            })
            .collect();
        Self::new(coeffs).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let wire = PolyWire {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| CoeffWire::Pair([c.re, c.im]))
                .collect(),
        };
        serde_json::to_string(&wire).expect("finite coefficients serialize")
    }

    pub(crate) fn coeff_pairs(&self) -> Vec<[f64; 2]> {
        self.coeffs.iter().map(|c| [c.re, c.im]).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == Complex64::new(0.0, 0.0) && !(self.is_zero() && k == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.im == 0.0 {
                write!(f, "{}", c.re)?;
            } else {
                write!(f, "({}{:+}i)", c.re, c.im)?;
            }
            match k {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyWire {
    coeffs: Vec<CoeffWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoeffWire {
    Pair([f64; 2]),
    Real(f64),
}

/// `θ ↦ |p(re^{iθ})|²` written as `c0 + Σ_m cos_coeffs[m-1] cos(mθ) + sin_coeffs[m-1] sin(mθ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigProfile {
    pub r: f64,
    pub c0: f64,
    /// `cos_coeffs[m - 1]` multiplies `cos(mθ)`.
    pub cos_coeffs: Vec<f64>,
    /// `sin_coeffs[m - 1]` multiplies `sin(mθ)`.
    pub sin_coeffs: Vec<f64>,
}

impl TrigProfile {
    pub fn harmonics(&self) -> usize {
        self.cos_coeffs.len()
    }

    pub fn cos_coeff(&self, m: usize) -> f64 {
        self.cos_coeffs
            .get(m.wrapping_sub(1))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn sin_coeff(&self, m: usize) -> f64 {
        self.sin_coeffs
            .get(m.wrapping_sub(1))
            .copied()
            .unwrap_or(0.0)
    }

    pub fn eval(&self, theta: f64) -> f64 {
        let mut s = self.c0;
        for (i, (a, b)) in self.cos_coeffs.iter().zip(&self.sin_coeffs).enumerate() {
            let (sn, cs) = ((i + 1) as f64 * theta).sin_cos();
            s += a * cs + b * sn;
        }
        s
    }

    /// Sum of absolute harmonic coefficients.
    pub fn harmonic_norm(&self) -> f64 {
        self.cos_coeffs
            .iter()
            .chain(&self.sin_coeffs)
            .map(|c| c.abs())
            .sum()
    }
}

fn validate_targets(a_list: &[f64]) -> Result<()> {
    for (i, &a) in a_list.iter().enumerate() {
        if !a.is_finite() || a <= 0.0 {
            return Err(Error::InvalidTargets(format!(
                "entry {a} is not a positive real"
            )));
        }
        if a_list[..i].contains(&a) {
            return Err(Error::InvalidTargets(format!("duplicate entry {a}")));
        }
    }
    Ok(())
}

fn convolve_dd(lhs: &[DoubleDouble], rhs: &[DoubleDouble]) -> Vec<DoubleDouble> {
    let mut out = vec![DoubleDouble::ZERO; lhs.len() + rhs.len() - 1];
    for (i, &x) in lhs.iter().enumerate() {
        for (j, &y) in rhs.iter().enumerate() {
            out[i + j] = out[i + j] + x * y;
        }
    }
    out
}

fn odd_product(a_list: &[f64], power: usize, sign: f64) -> Result<Polynomial> {
    validate_targets(a_list)?;
    let mut acc = vec![DoubleDouble::ZERO, DoubleDouble::from_f64(sign)];
    for &a in a_list {
        let a_dd = DoubleDouble::from_f64(a);
        let factor = [
            -(a_dd * a_dd),
            DoubleDouble::ZERO,
            DoubleDouble::from_f64(1.0),
        ];
        for _ in 0..power {
            acc = convolve_dd(&acc, &factor);
        }
    }
    Polynomial::from_real(&acc.iter().map(|c| c.to_f64()).collect::<Vec<_>>())
}

/// `z (z² − a_1²)(z² − a_2²)…(z² − a_n²)`, odd with real coefficients and
/// degree `2n + 1`.
pub fn odd_product_t1(a_list: &[f64]) -> Result<Polynomial> {
    odd_product(a_list, 1, 1.0)
}

/// `−z (z² − a_1²)²…(z² − a_n²)²`, odd with real coefficients, degree
/// `4n + 1`, and negative on the positive axis away from the `a_k`.
pub fn odd_product_t2(a_list: &[f64]) -> Result<Polynomial> {
    odd_product(a_list, 2, -1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn disc_example() -> Polynomial {
        let q = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        q.scale(1000.0)
            .add(&odd_product_t1(&[0.5, 1.0, 2.0]).unwrap())
    }

    #[test]
    fn eval_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.eval(c(0.0, 1.0)), c(0.0, 0.0));
        assert_eq!(disc_example().eval(c(0.5, 0.0)), c(1250.0, 0.0));
    }

    #[test]
    fn trailing_zeros_are_dropped() {
        let p = Polynomial::from_real(&[1.0, 2.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.degree(), 1);
        assert!(Polynomial::from_real(&[0.0, 0.0]).unwrap().is_zero());
        assert!(Polynomial::new(vec![c(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn profile_of_z2_plus_1() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        let r = 1.3;
        let t = p.trig_profile(r);
        assert!((t.c0 - (r.powi(4) + 1.0)).abs() < 1e-14);
        assert_eq!(t.cos_coeff(1), 0.0);
        assert!((t.cos_coeff(2) - 2.0 * r * r).abs() < 1e-14);
        assert!(t.sin_coeffs.iter().all(|&s| s == 0.0));
        for theta in [0.1f64, 0.7, 2.0, -1.3] {
            let want = 2.0 * r * r * (1.0 - (2.0 * theta).cos());
            assert!((t.eval(0.0) - t.eval(theta) - want).abs() < 1e-12);
        }
    }

    #[test]
    fn profile_of_monomial_is_constant() {
        let t = Polynomial::monomial(c(1.0, 0.0), 3).trig_profile(2.0);
        assert_eq!(t.c0, 64.0);
        assert_eq!(t.harmonic_norm(), 0.0);
    }

    #[test]
    fn profile_matches_evaluation_for_complex_coefficients() {
        let p =
            Polynomial::new(vec![c(0.3, -1.0), c(2.0, 0.5), c(-0.7, 0.2), c(0.1, 1.1)]).unwrap();
        for &(r, theta) in &[(0.4, 0.3), (1.0, -2.5), (2.5, PI)] {
            let t = p.trig_profile(r);
            let direct = p.eval(Complex64::from_polar(r, theta)).norm_sqr();
            assert!((t.eval(theta) - direct).abs() <= 1e-12 * t.c0);
        }
    }

    #[test]
    fn reciprocal_examples() {
        let p = Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.reciprocal().unwrap(), p);
        let p = Polynomial::from_real(&[1.0, 2.0]).unwrap();
        assert_eq!(
            p.reciprocal().unwrap(),
            Polynomial::from_real(&[2.0, 1.0]).unwrap()
        );

        // z^3 - z has a_0 = 0: the reciprocal drops to degree 2.
        let p = Polynomial::from_real(&[0.0, -1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.valuation(), 1);
        let q = p.reciprocal().unwrap();
        assert_eq!(q, Polynomial::from_real(&[1.0, 0.0, -1.0]).unwrap());
        assert_eq!(q.degree(), 2);
        // reciprocal again is z^2 - 1 = p / z, not p.
        assert_eq!(
            q.reciprocal().unwrap(),
            Polynomial::from_real(&[-1.0, 0.0, 1.0]).unwrap()
        );

        assert!(matches!(
            Polynomial::zero().reciprocal(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn odd_product_t1_examples() {
        assert_eq!(
            odd_product_t1(&[1.0]).unwrap(),
            Polynomial::from_real(&[0.0, -1.0, 0.0, 1.0]).unwrap()
        );
        let ph = odd_product_t1(&[0.5, 1.0, 2.0]).unwrap();
        assert_eq!(ph.degree(), 7);
        // z^7 - 5.25 z^5 + 5.25 z^3 - z
        assert_eq!(
            ph,
            Polynomial::from_real(&[0.0, -1.0, 0.0, 5.25, 0.0, -5.25, 0.0, 1.0]).unwrap()
        );
        let signs: Vec<f64> = [0.25, 0.75, 1.5, 3.0]
            .iter()
            .map(|&r| ph.eval_real(r).signum())
            .collect();
        assert_eq!(signs, vec![-1.0, 1.0, -1.0, 1.0]);
        for &a in &[0.5, 1.0, 2.0] {
            assert_eq!(ph.eval_real(a), 0.0);
        }
    }

    #[test]
    fn odd_product_t2_examples() {
        assert_eq!(
            odd_product_t2(&[1.0]).unwrap(),
            Polynomial::from_real(&[0.0, -1.0, 0.0, 2.0, 0.0, -1.0]).unwrap()
        );
        let ph = odd_product_t2(&[0.5, 1.0]).unwrap();
        assert_eq!(ph.degree(), 9);
        for i in 1..=1000 {
            let r = 4.0 * i as f64 / 1000.0;
            let v = ph.eval_real(r);
            if r == 0.5 || r == 1.0 {
                assert_eq!(v, 0.0);
            } else {
                assert!(v < 0.0, "p̂({r}) = {v}");
            }
        }
    }

    #[test]
    fn odd_products_reject_bad_targets() {
        assert!(matches!(
            odd_product_t1(&[1.0, 1.0]),
            Err(Error::InvalidTargets(_))
        ));
        assert!(matches!(
            odd_product_t1(&[0.0]),
            Err(Error::InvalidTargets(_))
        ));
        assert!(matches!(
            odd_product_t2(&[-1.0]),
            Err(Error::InvalidTargets(_))
        ));
        assert!(matches!(
            odd_product_t2(&[f64::NAN]),
            Err(Error::InvalidTargets(_))
        ));
    }

    #[test]
    fn odd_product_zeros_for_inexact_targets() {
        let targets = [0.3, 0.7, 1.1, 1.9, 2.3, 2.9, 3.7, 4.1];
        let ph = odd_product_t1(&targets).unwrap();
        for &a in &targets {
            let scale: f64 = targets.iter().map(|t| a * a + t * t).product::<f64>() * a;
            assert!(ph.eval_real(a).abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn json_accepts_bare_reals() {
        let p = Polynomial::from_json(r#"{"coeffs": [1, [0, 0], 1.0]}"#).unwrap();
        assert_eq!(p, Polynomial::from_real(&[1.0, 0.0, 1.0]).unwrap());
        assert!(Polynomial::from_json(r#"{"coeffs": []}"#).is_err());
        assert!(Polynomial::from_json("not json").is_err());
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let p = Polynomial::new(vec![c(0.1, -1.0 / 3.0), c(1e-300, 7.123456789012345e17)]).unwrap();
        let back = Polynomial::from_json(&p.to_json()).unwrap();
        for (a, b) in p.coeffs().iter().zip(back.coeffs()) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
}

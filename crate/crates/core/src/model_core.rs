//! Statistical weights, highest-weight functions, model parameters and the
//! (trigonometric) polynomial curve type shared by every other module.
//!
//! Sign convention: λ₊ = φ₁λ_𝒜 + φ₂λ_𝒟 and λ₋ = φ₂λ_𝒟 − φ₁λ_𝒜. This is the
//! orientation under which Ω̄ = −c·λ₋ holds for the sector n = 1 and under
//! which the sl(2) generators of the rational model solve the determining
//! equations.

use crate::error::{Error, Result};
use crate::poly;
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Rational,
    Trigonometric,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub family: Family,
    #[serde(default = "zero")]
    pub gamma: C64,
    pub phi1: C64,
    pub phi2: C64,
    pub mu: Vec<C64>,
    #[serde(rename = "L")]
    pub l: usize,
}

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

impl ModelParams {
    /// Homogeneous, untwisted rational model of length `l`.
    pub fn rational(l: usize) -> Self {
        ModelParams {
            family: Family::Rational,
            gamma: zero(),
            phi1: C64::new(1.0, 0.0),
            phi2: C64::new(1.0, 0.0),
            mu: vec![zero(); l],
            l,
        }
    }

    pub fn trigonometric(l: usize, gamma: C64) -> Self {
        ModelParams { family: Family::Trigonometric, gamma, ..ModelParams::rational(l) }
    }

    pub fn with_twists(mut self, phi1: C64, phi2: C64) -> Self {
        self.phi1 = phi1;
        self.phi2 = phi2;
        self
    }

    pub fn with_mu(mut self, mu: Vec<C64>) -> Self {
        self.mu = mu;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.l == 0 {
            return Err(Error::InvalidParams("L must be at least 1".into()));
        }
        if self.mu.len() != self.l {
            return Err(Error::InvalidParams(format!(
                "expected {} inhomogeneities, got {}",
                self.l,
                self.mu.len()
            )));
        }
        if self.phi1 == zero() || self.phi2 == zero() {
            return Err(Error::InvalidParams("twists phi1 and phi2 must be nonzero".into()));
        }
        if self.family == Family::Trigonometric && self.gamma.sinh().norm() < 1e-300 {
            return Err(Error::InvalidParams("sinh(gamma) must be nonzero".into()));
        }
        let all_finite = [self.gamma, self.phi1, self.phi2]
            .iter()
            .chain(self.mu.iter())
            .all(|z| z.is_finite());
        if !all_finite {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        Ok(())
    }

    pub fn c(&self) -> C64 {
        weight(Weight::C, zero(), self)
    }

    /// Imaginary period of b-type denominators: iπ for sinh, none otherwise.
    pub fn period(&self) -> Option<f64> {
        match self.family {
            Family::Rational => None,
            Family::Trigonometric => Some(PI),
        }
    }

    pub fn basis(&self) -> Basis {
        match self.family {
            Family::Rational => Basis::Monomial,
            Family::Trigonometric => Basis::Exponential,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weight {
    A,
    B,
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HighestWeight {
    A,
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

pub fn weight(kind: Weight, x: C64, p: &ModelParams) -> C64 {
    match (p.family, kind) {
        (Family::Rational, Weight::A) => x + 1.0,
        (Family::Rational, Weight::B) => x,
        (Family::Rational, Weight::C) => C64::new(1.0, 0.0),
        (Family::Trigonometric, Weight::A) => (x + p.gamma).sinh(),
        (Family::Trigonometric, Weight::B) => x.sinh(),
        (Family::Trigonometric, Weight::C) => p.gamma.sinh(),
    }
}

pub fn a(x: C64, p: &ModelParams) -> C64 {
    weight(Weight::A, x, p)
}

pub fn b(x: C64, p: &ModelParams) -> C64 {
    weight(Weight::B, x, p)
}

pub fn highest_weight(kind: HighestWeight, x: C64, p: &ModelParams) -> C64 {
    let w = match kind {
        HighestWeight::A => Weight::A,
        HighestWeight::D => Weight::B,
    };
    p.mu.iter().map(|&m| weight(w, x - m, p)).product()
}

pub fn lambda_pm(sign: Sign, x: C64, p: &ModelParams) -> C64 {
    let la = p.phi1 * highest_weight(HighestWeight::A, x, p);
    let ld = p.phi2 * highest_weight(HighestWeight::D, x, p);
    match sign {
        Sign::Plus => la + ld,
        Sign::Minus => ld - la,
    }
}

/// λ_𝒜 or λ_𝒟 expanded exactly into curve coefficients.
pub fn highest_weight_curve(kind: HighestWeight, p: &ModelParams) -> Curve {
    let shift = match kind {
        HighestWeight::A => 1.0,
        HighestWeight::D => 0.0,
    };
    match p.family {
        Family::Rational => {
            // prod_j (x - mu_j + shift)
            let roots: Vec<C64> = p.mu.iter().map(|m| m - shift).collect();
            Curve::monomial(poly::from_roots(&roots, C64::new(1.0, 0.0)))
        }
        Family::Trigonometric => {
            // sinh(x - m + g) = (e^{-(m-g)} e^{x} - e^{m-g} e^{-x}) / 2
            let g = p.gamma * shift;
            let mut acc = Curve::exponential(vec![C64::new(1.0, 0.0)]);
            for &m in &p.mu {
                let f = Curve::exponential(vec![
                    -(m - g).exp() * 0.5,
                    zero(),
                    (-(m - g)).exp() * 0.5,
                ]);
                acc = acc.mul(&f);
            }
            acc
        }
    }
}

pub fn lambda_pm_curve(sign: Sign, p: &ModelParams) -> Curve {
    let la = highest_weight_curve(HighestWeight::A, p).scale(p.phi1);
    let ld = highest_weight_curve(HighestWeight::D, p).scale(p.phi2);
    match sign {
        Sign::Plus => la.add(&ld),
        Sign::Minus => ld.add(&la.scale(C64::new(-1.0, 0.0))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    /// coeffs[j] multiplies x^j, j = 0..=d
    Monomial,
    /// coeffs[k + d] multiplies e^{k x}, k = -d..=d
    Exponential,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Curve {
    pub basis: Basis,
    pub coeffs: Vec<C64>,
    pub degree: usize,
}

impl Curve {
    pub fn monomial(coeffs: Vec<C64>) -> Self {
        let coeffs = if coeffs.is_empty() { vec![zero()] } else { coeffs };
        let degree = coeffs.len() - 1;
        Curve { basis: Basis::Monomial, coeffs, degree }
    }

    /// Expects an odd number of coefficients, centred on e^{0x}.
    pub fn exponential(coeffs: Vec<C64>) -> Self {
        assert!(coeffs.len() % 2 == 1, "exponential curves carry 2d+1 coefficients");
        let degree = (coeffs.len() - 1) / 2;
        Curve { basis: Basis::Exponential, coeffs, degree }
    }

    pub fn zero_of(basis: Basis) -> Self {
        match basis {
            Basis::Monomial => Curve::monomial(vec![zero()]),
            Basis::Exponential => Curve::exponential(vec![zero()]),
        }
    }

    /// Basis function exponents/powers paired with their coefficients.
    fn terms(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        let d = self.degree as i64;
        let off = match self.basis {
            Basis::Monomial => 0,
            Basis::Exponential => d,
        };
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - off, c))
    }

    pub fn eval(&self, x: C64) -> C64 {
        match self.basis {
            Basis::Monomial => poly::eval(&self.coeffs, x),
            Basis::Exponential => {
                // sum_k c_k e^{kx} = e^{-dx} * P(e^x)
                let t = x.exp();
                poly::eval(&self.coeffs, t) * (-(self.degree as f64) * x).exp()
            }
        }
    }

    /// sum |c_k| |basis_k(x)|, the natural size against which |Λ(x)| is judged.
    pub fn abs_scale(&self, x: C64) -> f64 {
        match self.basis {
            Basis::Monomial => {
                let ax = x.norm();
                self.coeffs.iter().rev().fold(0.0, |acc, c| acc * ax + c.norm())
            }
            Basis::Exponential => self.terms().map(|(k, c)| c.norm() * (k as f64 * x.re).exp()).sum(),
        }
    }

    pub fn derivative(&self) -> Curve {
        match self.basis {
            Basis::Monomial => {
                let d = poly::derivative(&self.coeffs);
                Curve::monomial(if d.is_empty() { vec![zero()] } else { d })
            }
            Basis::Exponential => {
                let coeffs = self.terms().map(|(k, c)| c * k as f64).collect();
                Curve::exponential(coeffs)
            }
        }
    }

    pub fn nth_derivative(&self, order: usize) -> Curve {
        (0..order).fold(self.clone(), |c, _| c.derivative())
    }

    pub fn eval_derivative(&self, x: C64, order: usize) -> C64 {
        self.nth_derivative(order).eval(x)
    }

    pub fn scale(&self, s: C64) -> Curve {
        Curve { basis: self.basis, coeffs: self.coeffs.iter().map(|c| c * s).collect(), degree: self.degree }
    }

    fn padded(&self, degree: usize) -> Vec<C64> {
        match self.basis {
            Basis::Monomial => {
                let mut v = self.coeffs.clone();
                v.resize(degree + 1, zero());
                v
            }
            Basis::Exponential => {
                let pad = degree - self.degree;
                let mut v = vec![zero(); pad];
                v.extend_from_slice(&self.coeffs);
                v.extend(std::iter::repeat(zero()).take(pad));
                v
            }
        }
    }

    pub fn add(&self, other: &Curve) -> Curve {
        assert_eq!(self.basis, other.basis, "cannot add curves of different bases");
        let d = self.degree.max(other.degree);
        let coeffs = self.padded(d).iter().zip(other.padded(d)).map(|(a, b)| a + b).collect();
        Curve { basis: self.basis, coeffs, degree: d }
    }

    pub fn sub(&self, other: &Curve) -> Curve {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Curve) -> Curve {
        assert_eq!(self.basis, other.basis, "cannot multiply curves of different bases");
        let coeffs = poly::mul(&self.coeffs, &other.coeffs);
        Curve { basis: self.basis, coeffs, degree: self.degree + other.degree }
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Coefficient distance relative to the larger of the two coefficient maxima.
    pub fn relative_distance(&self, other: &Curve) -> f64 {
        let d = self.degree.max(other.degree);
        let (a, b) = (self.padded(d), other.padded(d));
        let diff = a.iter().zip(&b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
        diff / self.max_coeff().max(other.max_coeff()).max(f64::MIN_POSITIVE)
    }

    /// Sample nodes used for fitting: the unit circle (monomial) or the
    /// imaginary period x = iθ (exponential). Both make the fit a discrete
    /// Fourier transform, so the least-squares system is perfectly conditioned.
    pub fn sample_nodes(basis: Basis, degree: usize) -> Vec<C64> {
        let n = match basis {
            Basis::Monomial => 2 * degree + 5,
            Basis::Exponential => 4 * degree + 7,
        };
        (0..n)
            .map(|m| {
                let th = 2.0 * PI * (m as f64 + 0.25) / n as f64;
                match basis {
                    Basis::Monomial => C64::from_polar(1.0, th),
                    Basis::Exponential => C64::new(0.0, th),
                }
            })
            .collect()
    }

    /// Least-squares fit of a curve of the given degree to samples taken at
    /// `sample_nodes(basis, degree)`. Returns the curve and the relative
    /// residual max|f - fit| / max|f|.
    pub fn fit_samples(basis: Basis, degree: usize, values: &[C64]) -> Result<(Curve, f64)> {
        let nodes = Curve::sample_nodes(basis, degree);
        if nodes.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} samples, got {}",
                nodes.len(),
                values.len()
            )));
        }
        let n = nodes.len() as f64;
        let curve = match basis {
            Basis::Monomial => {
                let coeffs = (0..=degree)
                    .map(|j| {
                        nodes.iter().zip(values).map(|(x, v)| v * x.powi(-(j as i32))).sum::<C64>() / n
                    })
                    .collect();
                Curve::monomial(coeffs)
            }
            Basis::Exponential => {
                let d = degree as i64;
                let coeffs = (-d..=d)
                    .map(|k| {
                        nodes.iter().zip(values).map(|(x, v)| v * (-(k as f64) * x).exp()).sum::<C64>() / n
                    })
                    .collect();
                Curve::exponential(coeffs)
            }
        };
        let vmax = values.iter().map(|v| v.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
        let res = nodes
            .iter()
            .zip(values)
            .map(|(x, v)| (curve.eval(*x) - v).norm())
            .fold(0.0, f64::max)
            / vmax;
        Ok((curve, res))
    }

    pub fn fit<F: Fn(C64) -> C64>(basis: Basis, degree: usize, f: F) -> Result<(Curve, f64)> {
        let values: Vec<C64> = Curve::sample_nodes(basis, degree).into_iter().map(f).collect();
        Curve::fit_samples(basis, degree, &values)
    }

    /// Zeroes of the curve. Monomial: polynomial roots. Exponential: roots in
    /// s = e^{2x} when only exponents of the parity of d occur (zeroes of sinh
    /// products, unique modulo iπ), else roots in t = e^x (unique modulo 2πi).
    /// Leading coefficients below `1e-12 * max|c|` are treated as absent.
    pub fn zeroes(&self) -> Result<Vec<C64>> {
        let tol = 1e-12;
        let max = self.max_coeff();
        if max == 0.0 {
            return Err(Error::InvalidArgument("zero curve has no isolated zeroes".into()));
        }
        match self.basis {
            Basis::Monomial => poly::roots(&poly::trim(&self.coeffs, tol)),
            Basis::Exponential => {
                let wrong_parity = self
                    .terms()
                    .filter(|(k, _)| (k - self.degree as i64).rem_euclid(2) == 1)
                    .map(|(_, c)| c.norm())
                    .fold(0.0, f64::max);
                if wrong_parity <= 1e-12 * max {
                    let s_coeffs: Vec<C64> = self.coeffs.iter().step_by(2).cloned().collect();
                    let mut s = s_coeffs.clone();
                    // drop vanishing low-order terms (roots at s = 0 are not zeroes)
                    while s.len() > 1 && s[0].norm() <= tol * max {
                        s.remove(0);
                    }
                    let roots = poly::roots(&poly::trim(&s, tol))?;
                    Ok(roots.into_iter().map(|r| canonical_mod_ipi(r.ln() * 0.5)).collect())
                } else {
                    let mut t = self.coeffs.clone();
                    while t.len() > 1 && t[0].norm() <= tol * max {
                        t.remove(0);
                    }
                    let roots = poly::roots(&poly::trim(&t, tol))?;
                    Ok(roots.into_iter().map(|r| r.ln()).collect())
                }
            }
        }
    }
}

/// Representative of u modulo iπ with Im(u) in (-π/2, π/2].
pub fn canonical_mod_ipi(u: C64) -> C64 {
    let mut im = u.im.rem_euclid(PI);
    if im > PI / 2.0 {
        im -= PI;
    }
    C64::new(u.re, im)
}

//! Univariate complex polynomials (ascending coefficients) and simultaneous
//! root finding by Aberth-Ehrlich iteration followed by Newton polishing.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

pub fn eval(coeffs: &[C64], x: C64) -> C64 {
    coeffs.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

/// Value and first derivative by Horner.
pub fn eval_with_derivative(coeffs: &[C64], x: C64) -> (C64, C64) {
    let mut p = C64::new(0.0, 0.0);
    let mut dp = C64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * x + p;
        p = p * x + c;
    }
    (p, dp)
}

pub fn derivative(coeffs: &[C64]) -> Vec<C64> {
    coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect()
}

pub fn mul(a: &[C64], b: &[C64]) -> Vec<C64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C64::new(0.0, 0.0); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// p(x + s), computed by repeated synthetic division.
pub fn shift(coeffs: &[C64], s: C64) -> Vec<C64> {
    let mut c = coeffs.to_vec();
    let n = c.len();
    for k in 0..n {
        for j in (k..n - 1).rev() {
            let t = c[j + 1] * s;
            c[j] += t;
        }
    }
    c
}

/// Polynomial long division, returning (quotient, remainder).
pub fn divrem(num: &[C64], den: &[C64]) -> Result<(Vec<C64>, Vec<C64>)> {
    let den = trim(den, 0.0);
    if den.is_empty() {
        return Err(Error::InvalidArgument("division by the zero polynomial".into()));
    }
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return Ok((vec![C64::new(0.0, 0.0)], rem));
    }
    let lead = den[dd];
    let mut quot = vec![C64::new(0.0, 0.0); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dd] / lead;
        quot[k] = q;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= q * d;
        }
    }
    rem.truncate(dd);
    Ok((quot, rem))
}

/// Drop trailing (leading-degree) coefficients with |c| <= tol * max|c|.
pub fn trim(coeffs: &[C64], rel_tol: f64) -> Vec<C64> {
    let max = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut v = coeffs.to_vec();
    while let Some(last) = v.last() {
        if last.norm() <= rel_tol * max || last.norm() == 0.0 {
            v.pop();
        } else {
            break;
        }
    }
    v
}

/// Expand prod_j (x - r_j) * lead.
pub fn from_roots(roots: &[C64], lead: C64) -> Vec<C64> {
    roots.iter().fold(vec![lead], |acc, &r| mul(&acc, &[-r, C64::new(1.0, 0.0)]))
}

/// All roots of a polynomial given by ascending coefficients. Leading
/// coefficients that vanish exactly reduce the degree; the caller trims
/// numerically small ones beforehand if desired.
pub fn roots(coeffs: &[C64]) -> Result<Vec<C64>> {
    let c = trim(coeffs, 0.0);
    if c.len() <= 1 {
        return Ok(Vec::new());
    }
    let deg = c.len() - 1;
    // roots at the origin are peeled off exactly
    let zeros_at_origin = c.iter().take_while(|z| z.norm() == 0.0).count();
    let c = c[zeros_at_origin..].to_vec();
    let d = c.len() - 1;
    let mut out = vec![C64::new(0.0, 0.0); zeros_at_origin];
    if d == 0 {
        return Ok(out);
    }
    let lead = c[d];
    let monic: Vec<C64> = c.iter().map(|z| z / lead).collect();
    let dmonic = derivative(&monic);

    // initial guesses on a circle of Cauchy-bound-ish radius
    let radius = {
        let r = (0..d)
            .map(|k| monic[k].norm().powf(1.0 / (d - k) as f64))
            .fold(0.0, f64::max);
        if r == 0.0 { 1.0 } else { r }
    };
    let mut z: Vec<C64> = (0..d)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / d as f64 + 0.4;
            C64::from_polar(radius, th)
        })
        .collect();

    let scale_at = |x: C64| -> f64 {
        let ax = x.norm();
        monic.iter().rev().fold(0.0, |acc, c| acc * ax + c.norm())
    };

    let mut converged = false;
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..d {
            let p = eval(&monic, z[i]);
            let dp = eval(&dmonic, z[i]);
            if p.norm() <= 4.0 * f64::EPSILON * scale_at(z[i]) {
                continue;
            }
            let ratio = p / dp;
            let s: C64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| {
                    let diff = z[i] - z[j];
                    if diff.norm() == 0.0 { C64::new(0.0, 0.0) } else { diff.inv() }
                })
                .sum();
            let w = ratio / (C64::new(1.0, 0.0) - ratio * s);
            z[i] -= w;
            max_step = max_step.max(w.norm() / (1.0 + z[i].norm()));
        }
        if max_step < 1e-15 {
            converged = true;
            break;
        }
    }

    // Newton polish against the original (non-normalized) coefficients
    for zi in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = eval_with_derivative(&monic, *zi);
            if dp.norm() == 0.0 {
                break;
            }
            let step = p / dp;
            if !step.is_finite() {
                break;
            }
            *zi -= step;
            if step.norm() <= f64::EPSILON * zi.norm() {
                break;
            }
        }
    }

    let max_res = z
        .iter()
        .map(|&x| eval(&monic, x).norm() / scale_at(x).max(f64::MIN_POSITIVE))
        .fold(0.0, f64::max);
    if !converged && max_res > 1e-10 {
        return Err(Error::RootNonConvergence { max_residual: max_res });
    }
    debug_assert!(deg == out.len() + z.len());
    out.extend(z);
    Ok(out)
}

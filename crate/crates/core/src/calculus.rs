//! Derivatives of analytic functions by the trapezoidal rule on a Cauchy
//! circle. For a function analytic in a disc of radius R around the centre
//! the error decays like (r/R)^N, which beats any finite-difference stencil
//! once the radius stays well inside the disc.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

pub const DEFAULT_NODES: usize = 32;

/// Taylor coefficients a_0..=a_k of f around z0 (so f^(j)(z0) = j! a_j).
pub fn taylor<F: Fn(C64) -> C64>(f: F, z0: C64, radius: f64, order: usize, nodes: usize) -> Vec<C64> {
    let n = nodes.max(order + 2);
    let samples: Vec<(C64, C64)> = (0..n)
        .map(|m| {
            let w = C64::from_polar(1.0, 2.0 * PI * (m as f64 + 0.5) / n as f64);
            (w, f(z0 + w * radius))
        })
        .collect();
    (0..=order)
        .map(|j| {
            let s: C64 = samples.iter().map(|(w, v)| v * w.powi(-(j as i32))).sum();
            s / (n as f64 * radius.powi(j as i32))
        })
        .collect()
}

/// Derivatives f^(0..=order)(z0).
pub fn derivatives<F: Fn(C64) -> C64>(f: F, z0: C64, radius: f64, order: usize) -> Vec<C64> {
    to_derivatives(taylor(f, z0, radius, order, DEFAULT_NODES))
}

pub fn derivative<F: Fn(C64) -> C64>(f: F, z0: C64, radius: f64) -> C64 {
    derivatives(f, z0, radius, 1)[1]
}

/// Derivatives together with a stability estimate: the largest disagreement
/// between radius r and r/2, measured on Taylor terms a_j r^j relative to
/// the largest such term (so vanishing derivatives do not inflate it).
pub fn derivatives_checked<F: Fn(C64) -> C64>(f: F, z0: C64, radius: f64, order: usize) -> (Vec<C64>, f64) {
    let t1 = taylor(&f, z0, radius, order, DEFAULT_NODES);
    let t2 = taylor(&f, z0, radius * 0.5, order, DEFAULT_NODES);
    let scale = t1
        .iter()
        .enumerate()
        .map(|(j, a)| a.norm() * radius.powi(j as i32))
        .fold(0.0, f64::max)
        .max(1e-300);
    let disagreement = t1
        .iter()
        .zip(&t2)
        .enumerate()
        .map(|(j, (a, b))| (a - b).norm() * radius.powi(j as i32) / scale)
        .fold(0.0, f64::max);
    (to_derivatives(t1), disagreement)
}

fn to_derivatives(a: Vec<C64>) -> Vec<C64> {
    let mut fact = 1.0;
    a.into_iter()
        .enumerate()
        .map(|(j, c)| {
            if j > 0 {
                fact *= j as f64;
            }
            c * fact
        })
        .collect()
}

/// A safe contour radius around z0 given known singular points `poles` and a
/// periodicity in the imaginary direction (`period` = iπ for sinh-type
/// denominators, None otherwise).
pub fn safe_radius(z0: C64, poles: &[C64], period: Option<f64>, cap: f64) -> f64 {
    let dist = poles
        .iter()
        .map(|&p| periodic_distance(z0, p, period))
        .fold(f64::INFINITY, f64::min);
    (dist / 4.0).min(cap)
}

/// Distance between a and b, modulo shifts of b by i*period*k.
pub fn periodic_distance(a: C64, b: C64, period: Option<f64>) -> f64 {
    match period {
        None => (a - b).norm(),
        Some(p) => {
            let d = a - b;
            let k = (d.im / p).round();
            (d - C64::new(0.0, k * p)).norm()
        }
    }
}

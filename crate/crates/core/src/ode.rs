//! Gragg-Bulirsch-Stoer extrapolation for complex linear or nonlinear
//! systems integrated along a straight path in the complex plane.
//!
//! Each macro step runs the modified midpoint rule with 2, 4, 6 and 8
//! substeps and extrapolates in h². The last tableau entry has order 8 and
//! the difference to the previous column drives the step-size control.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

const SEQUENCE: [usize; 4] = [2, 4, 6, 8];

#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub rtol: f64,
    pub atol: f64,
    pub max_steps: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { rtol: 1e-13, atol: 1e-15, max_steps: 20_000 }
    }
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    /// accepted points along the path, starting with the initial state
    pub points: Vec<(C64, Vec<C64>)>,
    pub rejected: usize,
    pub evaluations: usize,
}

impl Trajectory {
    pub fn last(&self) -> &[C64] {
        &self.points.last().expect("trajectory holds the initial point").1
    }
}

fn midpoint<F>(f: &F, z: C64, y: &[C64], dz: C64, n: usize, evals: &mut usize) -> Result<Vec<C64>>
where
    F: Fn(C64, &[C64]) -> Result<Vec<C64>>,
{
    let h = dz / n as f64;
    let mut prev = y.to_vec();
    let f0 = f(z, y)?;
    let mut cur: Vec<C64> = y.iter().zip(&f0).map(|(a, d)| a + h * d).collect();
    *evals += 1;
    for m in 1..n {
        let fm = f(z + h * m as f64, &cur)?;
        *evals += 1;
        let next: Vec<C64> = prev.iter().zip(&fm).map(|(a, d)| a + 2.0 * h * d).collect();
        prev = std::mem::replace(&mut cur, next);
    }
    let fe = f(z + dz, &cur)?;
    *evals += 1;
    Ok(cur.iter().zip(&prev).zip(&fe).map(|((a, b), d)| 0.5 * (a + b + h * d)).collect())
}

/// One extrapolated step of length dz. Returns the order-8 value and the
/// scaled error estimate.
fn macro_step<F>(f: &F, z: C64, y: &[C64], dz: C64, tol: &Tolerances, evals: &mut usize) -> Result<(Vec<C64>, f64)>
where
    F: Fn(C64, &[C64]) -> Result<Vec<C64>>,
{
    let mut table: Vec<Vec<Vec<C64>>> = Vec::with_capacity(SEQUENCE.len());
    for (j, &nj) in SEQUENCE.iter().enumerate() {
        let mut row = vec![midpoint(f, z, y, dz, nj, evals)?];
        for k in 1..=j {
            let ratio = (nj as f64 / SEQUENCE[j - k] as f64).powi(2) - 1.0;
            let (a, b) = (&row[k - 1], &table[j - 1][k - 1]);
            row.push(a.iter().zip(b).map(|(a, b)| a + (a - b) / ratio).collect());
        }
        table.push(row);
    }
    let last = table.pop().expect("non-empty tableau");
    let (best, lower) = (&last[SEQUENCE.len() - 1], &last[SEQUENCE.len() - 2]);
    let err = best
        .iter()
        .zip(lower)
        .zip(y)
        .map(|((a, b), y0)| (a - b).norm() / (tol.atol + tol.rtol * a.norm().max(y0.norm())))
        .fold(0.0, f64::max);
    Ok((best.clone(), err))
}

/// Integrates y′ = f(z, y) from z0 to z1 along the segment between them.
pub fn integrate<F>(f: F, z0: C64, y0: &[C64], z1: C64, tol: &Tolerances) -> Result<Trajectory>
where
    F: Fn(C64, &[C64]) -> Result<Vec<C64>>,
{
    let span = z1 - z0;
    let length = span.norm();
    let mut traj = Trajectory { points: vec![(z0, y0.to_vec())], rejected: 0, evaluations: 0 };
    if length == 0.0 {
        return Ok(traj);
    }
    let dir = span / length;
    let (mut t, mut h) = (0.0_f64, (length / 8.0).min(0.1));
    let mut y = y0.to_vec();
    let mut steps = 0;
    while t < length {
        if steps >= tol.max_steps {
            return Err(Error::Integration { t, reason: format!("step budget of {} exhausted", tol.max_steps) });
        }
        steps += 1;
        h = h.min(length - t);
        let z = z0 + dir * t;
        let (next, err) = macro_step(&f, z, &y, dir * h, tol, &mut traj.evaluations)?;
        if !err.is_finite() {
            return Err(Error::Integration { t, reason: "non-finite state".into() });
        }
        let factor = if err == 0.0 { 4.0 } else { (0.9 * err.powf(-1.0 / 7.0)).clamp(0.2, 4.0) };
        if err <= 1.0 {
            t = if length - t <= h { length } else { t + h };
            y = next;
            traj.points.push((z0 + dir * t, y.clone()));
        } else {
            traj.rejected += 1;
        }
        h *= factor;
        if h < 1e-12 * length {
            return Err(Error::Integration { t, reason: format!("step size collapsed to {h:.2e}") });
        }
    }
    Ok(traj)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_along_complex_path() {
        let lam = C64::new(-0.7, 1.3);
        let z1 = C64::new(1.5, -0.5);
        let traj = integrate(|_, y| Ok(vec![lam * y[0]]), C64::new(0.0, 0.0), &[C64::new(1.0, 0.0)], z1, &Tolerances::default())
            .unwrap();
        let exact = (lam * z1).exp();
        assert!((traj.last()[0] - exact).norm() < 1e-12 * exact.norm());
    }

    #[test]
    fn harmonic_oscillator_energy() {
        let f = |_: C64, y: &[C64]| Ok(vec![y[1], -y[0]]);
        let one = C64::new(1.0, 0.0);
        let traj = integrate(f, C64::new(0.0, 0.0), &[one, C64::new(0.0, 0.0)], C64::new(10.0, 0.0), &Tolerances::default())
            .unwrap();
        let y = traj.last();
        assert!((y[0] - C64::new(10f64.cos(), 0.0)).norm() < 1e-11);
        assert!((y[1] + C64::new(10f64.sin(), 0.0)).norm() < 1e-11);
    }

    #[test]
    fn singular_rhs_is_reported() {
        let f = |z: C64, _: &[C64]| {
            let v = 1.0 / (z - 1.0);
            if v.is_finite() {
                Ok(vec![v * v])
            } else {
                Err(Error::Pole { what: "z = 1".into() })
            }
        };
        let r = integrate(f, C64::new(0.0, 0.0), &[C64::new(0.0, 0.0)], C64::new(2.0, 0.0), &Tolerances::default());
        assert!(r.is_err());
    }
}

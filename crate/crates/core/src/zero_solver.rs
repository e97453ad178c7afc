//! Zero-based description of an eigenvalue: product representation, the
//! quadratic form of the Riccati equation, reconstruction from a pair of
//! zero subsets, boundary conditions, and a damped Newton solver that fixes
//! the zeroes.

use crate::calculus::periodic_distance;
use crate::error::{Error, Result};
use crate::functional_system::{riccati_coefficients, RiccatiCoefficients};
use crate::linalg::{self, Lu};
use crate::model_core::{Curve, Family, ModelParams};
use crate::transfer_oracle::SpectralCurve;
use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Seed of the generic sample points used by the solver.
pub const SAMPLE_SEED: u64 = 0xBE7A;
pub const MAX_NEWTON_ITERATIONS: usize = 40;
pub const NEWTON_TOL: f64 = 1e-10;
/// relative wedge norm below which two quadratic forms count as proportional
pub const PROPORTIONAL_TOL: f64 = 1e-8;

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// Λ(x) = Λ₀ ∏ sinh(uⱼ − x)/sinh(uⱼ), or Λ₀ ∏ (uⱼ − x)/uⱼ, expanded.
pub fn product_representation(lambda0: C64, zeroes: &[C64], p: &ModelParams) -> Result<Curve> {
    let mut acc = match p.family {
        Family::Rational => Curve::monomial(vec![lambda0]),
        Family::Trigonometric => Curve::exponential(vec![lambda0]),
    };
    for &u in zeroes {
        let factor = match p.family {
            Family::Rational => {
                if u.norm() < 1e-300 {
                    return Err(Error::Normalization("a zero at the origin cannot be normalized".into()));
                }
                Curve::monomial(vec![one(), -u.inv()])
            }
            Family::Trigonometric => {
                let s = u.sinh();
                if s.norm() < 1e-14 {
                    return Err(Error::Normalization(format!("sinh(u) vanishes for u = {u}")));
                }
                // sinh(u - x) = (e^u e^{-x} - e^{-u} e^{x}) / 2
                Curve::exponential(vec![u.exp() * 0.5 / s, C64::new(0.0, 0.0), -(-u).exp() * 0.5 / s])
            }
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// 𝓕(x) = Σ coth(u − x) (trigonometric) or Σ 1/(u − x) (rational), so that
/// Λ′ = −Λ𝓕 for the product representation.
pub fn log_derivative_sum(x: C64, zeroes: &[C64], p: &ModelParams) -> Result<C64> {
    let mut s = C64::new(0.0, 0.0);
    for &u in zeroes {
        let (num, den) = match p.family {
            Family::Rational => (one(), u - x),
            Family::Trigonometric => ((u - x).cosh(), (u - x).sinh()),
        };
        if den.norm() < 1e-14 * num.norm().max(1.0) {
            return Err(Error::Pole { what: format!("x = {x} hits the zero {u}") });
        }
        s += num / den;
    }
    Ok(s)
}

/// Ω₂Λ² + (Ω̄𝓕 − Ω₁)Λ + Ω₀ for given coefficients; returns the value and
/// the sum of the term magnitudes.
pub fn quadratic_form(co: &RiccatiCoefficients, lambda: C64, f: C64) -> (C64, f64) {
    let terms = [co.omega2 * lambda * lambda, co.omega_bar * f * lambda, -co.omega1 * lambda, co.omega0];
    (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
}

/// Quadratic residual of a curve with its own zero set and the chosen
/// (n − 1)-subset.
pub fn quadratic_residual(curve: &SpectralCurve, zero_subset: &[C64], x: C64, p: &ModelParams) -> Result<(C64, f64)> {
    quadratic_residual_with_zeroes(curve.eval(x), &curve.zeroes, curve.n, zero_subset, x, p)
}

pub fn quadratic_residual_with_zeroes(
    lambda: C64,
    zeroes: &[C64],
    n: usize,
    zero_subset: &[C64],
    x: C64,
    p: &ModelParams,
) -> Result<(C64, f64)> {
    let co = riccati_coefficients(n, zero_subset, x, p)?;
    let f = log_derivative_sum(x, zeroes, p)?;
    Ok(quadratic_form(&co, lambda, f))
}

fn pick(zeroes: &[C64], idx: &[usize]) -> Result<Vec<C64>> {
    idx.iter()
        .map(|&k| zeroes.get(k).copied().ok_or_else(|| Error::InvalidArgument(format!("zero index {k} out of range"))))
        .collect()
}

/// Λ(x) = Δ₂,₃ / (Δ₁,₃ − 𝓕Δ₁,₂) from the quadratic forms of two distinct
/// subsets (given as index lists into `zeroes`).
pub fn reconstruct_lambda(
    x: C64,
    pair: (&[usize], &[usize]),
    zeroes: &[C64],
    n: usize,
    p: &ModelParams,
) -> Result<C64> {
    let (mut a, mut b) = (pair.0.to_vec(), pair.1.to_vec());
    a.sort_unstable();
    b.sort_unstable();
    if a == b {
        return Err(Error::DegeneratePair(format!("subsets {a:?} and {b:?} coincide")));
    }
    let cm = riccati_coefficients(n, &pick(zeroes, &a)?, x, p)?;
    let cn = riccati_coefficients(n, &pick(zeroes, &b)?, x, p)?;
    let d12 = cm.omega_bar * cn.omega2 - cn.omega_bar * cm.omega2;
    let d13 = cm.omega1 * cn.omega2 - cn.omega1 * cm.omega2;
    let d23 = cm.omega0 * cn.omega2 - cn.omega0 * cm.omega2;
    let f = log_derivative_sum(x, zeroes, p)?;
    // forms that are proportional as quadratics in Λ (e.g. crossing-related
    // subsets of a symmetric chain) share both roots and cannot pick one
    let pm = [cm.omega2, cm.omega_bar * f - cm.omega1, cm.omega0];
    let pn = [cn.omega2, cn.omega_bar * f - cn.omega1, cn.omega0];
    let wedge = [(0, 1), (0, 2), (1, 2)].iter().map(|&(i, j)| (pm[i] * pn[j] - pm[j] * pn[i]).norm_sqr()).sum::<f64>().sqrt();
    if wedge < PROPORTIONAL_TOL * linalg::norm2(&pm) * linalg::norm2(&pn) {
        return Err(Error::DegeneratePair(format!("subsets {a:?} and {b:?} give proportional quadratics in Λ")));
    }
    let den = d13 - f * d12;
    let scale = d13.norm() + (f * d12).norm();
    if den.norm() < 1e-12 * scale || scale == 0.0 {
        return Err(Error::Conditioning { denominator: den.norm(), scale });
    }
    Ok(d23 / den)
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct BoundaryResiduals {
    /// relative residual of the Λ₀ product formula
    pub lambda0: f64,
    /// relative residual of the twist (phase) condition
    pub phase: f64,
    /// true when the L = 2n variant e^{2nγ+2S} = 1 was used
    pub variant: bool,
}

/// Λ₀ implied by the zeroes:
/// (−1)^L (φ₁e^{(L−n)γ} + φ₂e^{nγ}) ∏ e^{uⱼ−μⱼ} sinh(uⱼ), or (−1)^L (φ₁ + φ₂) ∏ uⱼ.
pub fn lambda0_from_zeroes(zeroes: &[C64], n: usize, p: &ModelParams) -> C64 {
    let sign = if p.l % 2 == 0 { 1.0 } else { -1.0 };
    match p.family {
        Family::Rational => sign * (p.phi1 + p.phi2) * zeroes.iter().product::<C64>(),
        Family::Trigonometric => {
            let g = p.gamma;
            let pre = p.phi1 * (g * (p.l - n) as f64).exp() + p.phi2 * (g * n as f64).exp();
            let prod: C64 = zeroes.iter().zip(&p.mu).map(|(u, m)| (u - m).exp() * u.sinh()).product();
            sign * pre * prod
        }
    }
}

/// Phase condition value and the sum of its term magnitudes (holomorphic in
/// the zeroes). Trigonometric: φ₁ sinh((L−n)γ+S) + φ₂ sinh(nγ+S), or
/// e^{2nγ+2S} − 1 when L = 2n. Rational: (φ₁+φ₂)S + φ₁(L−n) + φ₂n.
pub fn phase_condition(zeroes: &[C64], n: usize, p: &ModelParams) -> (C64, f64, bool) {
    let s: C64 = zeroes.iter().zip(&p.mu).map(|(u, m)| u - m).sum();
    let (l, nf) = ((p.l - n) as f64, n as f64);
    match p.family {
        Family::Rational => {
            let t = [(p.phi1 + p.phi2) * s, p.phi1 * l, p.phi2 * nf];
            (t.iter().sum(), t.iter().map(|z| z.norm()).sum(), false)
        }
        Family::Trigonometric if p.l == 2 * n => {
            let e = (2.0 * (p.gamma * nf + s)).exp();
            (e - 1.0, e.norm() + 1.0, true)
        }
        Family::Trigonometric => {
            let t = [p.phi1 * (p.gamma * l + s).sinh(), p.phi2 * (p.gamma * nf + s).sinh()];
            (t[0] + t[1], t[0].norm() + t[1].norm(), false)
        }
    }
}

/// The ratio φ₁/φ₂ demanded by the zeroes, −sinh(nγ+S)/sinh((L−n)γ+S).
/// A vanishing numerator would require φ₁ = 0, which the model excludes.
pub fn required_twist_ratio(zeroes: &[C64], n: usize, p: &ModelParams) -> Result<C64> {
    if p.family != Family::Trigonometric {
        return Err(Error::Unsupported("twist ratio form is trigonometric".into()));
    }
    let s: C64 = zeroes.iter().zip(&p.mu).map(|(u, m)| u - m).sum();
    let num = (p.gamma * n as f64 + s).sinh();
    let den = (p.gamma * (p.l - n) as f64 + s).sinh();
    if den.norm() < 1e-14 {
        return Err(Error::InvalidArgument("ratio undefined: use the L = 2n variant".into()));
    }
    if num.norm() < 1e-14 {
        return Err(Error::InvalidArgument("zeroes would require phi1/phi2 = 0".into()));
    }
    Ok(-num / den)
}

pub fn boundary_conditions(zeroes: &[C64], lambda0: C64, n: usize, p: &ModelParams) -> Result<BoundaryResiduals> {
    if zeroes.len() != p.l {
        return Err(Error::InvalidArgument(format!("expected {} zeroes, got {}", p.l, zeroes.len())));
    }
    let l0 = lambda0_from_zeroes(zeroes, n, p);
    let (ph, scale, variant) = phase_condition(zeroes, n, p);
    Ok(BoundaryResiduals {
        lambda0: (l0 - lambda0).norm() / lambda0.norm().max(l0.norm()).max(f64::MIN_POSITIVE),
        phase: ph.norm() / scale.max(f64::MIN_POSITIVE),
        variant,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ZeroSolution {
    pub converged: bool,
    pub iterations: usize,
    pub zeroes: Vec<C64>,
    pub lambda0: C64,
    pub residual: f64,
    pub heldout_max: f64,
    #[serde(skip)]
    pub trace: Vec<f64>,
}

impl ZeroSolution {
    /// Solver report JSON.
    pub fn report(&self) -> serde_json::Value {
        serde_json::json!({
            "converged": self.converged,
            "iterations": self.iterations,
            "zeroes": self.zeroes.iter().map(|&z| crate::report::complex_pair(z)).collect::<Vec<_>>(),
            "residual": crate::report::round_sig(self.residual),
            "heldout_max": crate::report::round_sig(self.heldout_max),
        })
    }

    pub fn curve(&self, p: &ModelParams) -> Result<Curve> {
        product_representation(self.lambda0, &self.zeroes, p)
    }
}

/// Gauss-Newton system in the zeroes: quadratic-form samples cycling over
/// three zero subsets, plus the phase condition, with Λ₀ taken from the
/// product formula. Twice as many samples as unknowns keep it well
/// conditioned where a square selection can be nearly singular.
struct ZeroSystem<'a> {
    p: &'a ModelParams,
    n: usize,
    samples: Vec<C64>,
    /// fixed weights (term magnitudes at the seed) keep the map holomorphic
    weights: Vec<f64>,
}

impl<'a> ZeroSystem<'a> {
    fn subsets(&self, u: &[C64]) -> [Vec<C64>; 3] {
        let (l, k) = (u.len(), self.n - 1);
        let spread: Vec<C64> = (0..k).map(|j| u[(2 * j + 1).min(l - 1 - (k - 1 - j))]).collect();
        [u[..k].to_vec(), u[l - k..].to_vec(), spread]
    }

    fn raw(&self, u: &[C64]) -> Result<Vec<(C64, f64)>> {
        let l0 = lambda0_from_zeroes(u, self.n, self.p);
        let curve = product_representation(l0, u, self.p)?;
        let subsets = self.subsets(u);
        let mut out = Vec::with_capacity(self.samples.len() + 1);
        for (k, &x) in self.samples.iter().enumerate() {
            out.push(quadratic_residual_with_zeroes(curve.eval(x), u, self.n, &subsets[k % 3], x, self.p)?);
        }
        let (ph, scale, _) = phase_condition(u, self.n, self.p);
        out.push((ph, scale));
        Ok(out)
    }

    fn eval(&self, u: &[C64]) -> Result<Vec<C64>> {
        Ok(self.raw(u)?.iter().zip(&self.weights).map(|((v, _), w)| v / w).collect())
    }

    fn jacobian(&self, u: &[C64]) -> Result<linalg::Mat> {
        let cols = u.len();
        let rows = self.samples.len() + 1;
        let mut j = linalg::Mat::zeros(rows, cols);
        for k in 0..cols {
            let h = 1e-6 * (1.0 + u[k].norm());
            let mut up = u.to_vec();
            let mut dn = u.to_vec();
            up[k] += h;
            dn[k] -= h;
            let (fp, fm) = (self.eval(&up)?, self.eval(&dn)?);
            for i in 0..rows {
                j[(i, k)] = (fp[i] - fm[i]) / (2.0 * h);
            }
        }
        Ok(j)
    }
}

fn generic_samples(count: usize, avoid: &[C64], period: Option<f64>) -> Vec<C64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut out: Vec<C64> = Vec::with_capacity(count);
    while out.len() < count {
        let x = C64::new(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
        let clear = avoid.iter().chain(out.iter()).all(|&u| periodic_distance(x, u, period) > 0.1);
        if clear {
            out.push(x);
        }
    }
    out
}

/// Fix the zeroes of a sector-n eigenvalue by damped Newton from `seed`.
pub fn solve_zeroes(p: &ModelParams, n: usize, seed: &[C64]) -> Result<ZeroSolution> {
    p.validate()?;
    if n == 0 || n > p.l {
        return Err(Error::InvalidArgument(format!("sector n={n} must lie in 1..={}", p.l)));
    }
    if seed.len() != p.l {
        return Err(Error::InvalidArgument(format!("seed needs {} entries, got {}", p.l, seed.len())));
    }
    for i in 0..seed.len() {
        for j in 0..i {
            if periodic_distance(seed[i], seed[j], p.period()) < 1e-12 {
                return Err(Error::Singular(format!("seed entries {j} and {i} collide")));
            }
        }
    }

    let samples = generic_samples(2 * p.l, seed, p.period());
    let mut sys = ZeroSystem { p, n, samples, weights: vec![1.0; 2 * p.l + 1] };
    sys.weights = sys.raw(seed)?.iter().map(|(_, s)| s.max(f64::MIN_POSITIVE)).collect();

    let mut u = seed.to_vec();
    let mut f = sys.eval(&u)?;
    let mut norm = linalg::norm2(&f);
    let mut trace = vec![norm];
    let mut iterations = 0;
    // a few polishing steps continue past the tolerance while they help
    let mut polish = 0;
    while (norm >= NEWTON_TOL || polish < 3) && iterations < MAX_NEWTON_ITERATIONS {
        if norm < NEWTON_TOL {
            polish += 1;
        }
        iterations += 1;
        let jac = sys.jacobian(&u)?;
        let normal = jac.adjoint().matmul(&jac);
        let lu = Lu::new(&normal).map_err(|_| Error::Singular("Jacobian is singular (colliding zeroes?)".into()))?;
        if lu.pivot_ratio() < 1e-24 {
            return Err(Error::Singular(format!("Jacobian rank-deficient (pivot ratio {:.2e})", lu.pivot_ratio())));
        }
        let rhs: Vec<C64> = f.iter().map(|v| -v).collect();
        let (step, _) = linalg::lstsq(&jac, &rhs)?;
        let mut t = 1.0;
        loop {
            let trial: Vec<C64> = u.iter().zip(&step).map(|(a, s)| a + s * t).collect();
            let accepted = match sys.eval(&trial) {
                Ok(ft) => {
                    let nt = linalg::norm2(&ft);
                    if nt <= (1.0 - 1e-4 * t) * norm || (t < 1e-3 && norm >= NEWTON_TOL) {
                        u = trial;
                        f = ft;
                        norm = nt;
                        true
                    } else {
                        false
                    }
                }
                Err(_) => false,
            };
            if accepted {
                break;
            }
            t *= 0.5;
            if t < 1e-3 / 2.0 && norm < NEWTON_TOL {
                // no further decrease below the floor: done polishing
                polish = usize::MAX / 2;
                break;
            }
            if t < 1e-3 / 2.0 {
                return Err(Error::NewtonNonConvergence { iterations, residual: norm, trace });
            }
        }
        trace.push(norm);
        if linalg::norm2(&step) * t < 1e-15 * (1.0 + linalg::norm2(&u)) {
            break;
        }
    }
    if norm >= NEWTON_TOL {
        return Err(Error::NewtonNonConvergence { iterations, residual: norm, trace });
    }
    let lambda0 = lambda0_from_zeroes(&u, n, p);
    let heldout_max = heldout_check(p, n, &u, lambda0)?;
    Ok(ZeroSolution { converged: true, iterations, zeroes: u, lambda0, residual: norm, heldout_max, trace })
}

/// Redundant instances not used by the solve: the reconstruction at x = 0
/// for three random relabellings and subset pairs must return Λ₀. Pairs
/// whose forms are proportional are redrawn, and when no pair is informative
/// at x = 0 the reconstruction moves to fresh points. With
/// n = 1 there is a single (empty) subset, so three fresh quadratic-form
/// samples are checked instead.
pub fn heldout_check(p: &ModelParams, n: usize, zeroes: &[C64], lambda0: C64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 0x5A5A);
    let mut worst: f64 = 0.0;
    if n == 1 {
        let curve = product_representation(lambda0, zeroes, p)?;
        let xs = generic_samples(2 * p.l + 3, zeroes, p.period());
        for &x in &xs[2 * p.l..] {
            let (r, s) = quadratic_residual_with_zeroes(curve.eval(x), zeroes, n, &[], x, p)?;
            worst = worst.max(r.norm() / s);
        }
        return Ok(worst);
    }
    let l = zeroes.len();
    let curve = product_representation(lambda0, zeroes, p)?;
    let fresh = generic_samples(2 * p.l + 8, zeroes, p.period());
    let (mut checked, mut attempts) = (0, 0);
    while checked < 3 {
        attempts += 1;
        if attempts > 60 {
            return Err(Error::DegeneratePair("no informative subset pair for the held-out check".into()));
        }
        // x = 0 first; if every pair is degenerate there, fresh points
        let x = if attempts <= 20 { C64::new(0.0, 0.0) } else { fresh[2 * p.l + attempts % 8] };
        let mut perm: Vec<usize> = (0..l).collect();
        for i in (1..l).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let relabelled: Vec<C64> = perm.iter().map(|&k| zeroes[k]).collect();
        let a: Vec<usize> = (0..n - 1).collect();
        let mut b: Vec<usize>;
        loop {
            let mut pool: Vec<usize> = (0..l).collect();
            for i in (1..l).rev() {
                pool.swap(i, rng.gen_range(0..=i));
            }
            b = pool[..n - 1].to_vec();
            b.sort_unstable();
            if b != a {
                break;
            }
        }
        let v = match reconstruct_lambda(x, (&a, &b), &relabelled, n, p) {
            Ok(v) => v,
            Err(Error::DegeneratePair(_) | Error::Conditioning { .. }) => continue,
            Err(e) => return Err(e),
        };
        checked += 1;
        let target = curve.eval(x);
        worst = worst.max((v - target).norm() / target.norm().max(f64::MIN_POSITIVE));
    }
    Ok(worst)
}

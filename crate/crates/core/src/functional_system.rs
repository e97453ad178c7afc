//! The compatibility determinant of the auxiliary linear problem and the
//! Riccati coefficients Ω̄, Ω₀, Ω₁, Ω₂ built from the ω-matrix.
//!
//! Derivatives in x₁ are taken on a Cauchy circle centred at x₀ = x, so the
//! removable point x₁ = x₀ of det(ω)/b(x₁ − x₀) is never sampled.

use crate::calculus;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::model_core::{self, HighestWeight, ModelParams};
use num_complex::Complex64 as C64;
use std::fmt::Write as _;

/// Relative disagreement between contour radii r and r/2 above which a
/// coefficient evaluation carries a warning.
pub const INSTABILITY_GATE: f64 = 1e-5;

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// a(x)/b(x), refusing the b-zero.
fn ab(x: C64, p: &ModelParams, what: impl FnOnce() -> String) -> Result<C64> {
    let bx = model_core::b(x, p);
    let ax = model_core::a(x, p);
    if bx.norm() <= 1e-13 * (1.0 + ax.norm()) {
        return Err(Error::Pole { what: what() });
    }
    Ok(ax / bx)
}

/// c/b(x), refusing the b-zero.
fn cb(x: C64, p: &ModelParams, what: impl FnOnce() -> String) -> Result<C64> {
    let bx = model_core::b(x, p);
    if bx.norm() <= 1e-13 * (1.0 + p.c().norm()) {
        return Err(Error::Pole { what: what() });
    }
    Ok(p.c() / bx)
}

fn la(x: C64, p: &ModelParams) -> C64 {
    model_core::highest_weight(HighestWeight::A, x, p)
}

fn ld(x: C64, p: &ModelParams) -> C64 {
    model_core::highest_weight(HighestWeight::D, x, p)
}

/// The coefficient M_i of the auxiliary linear problem for points x₀..x_n.
pub fn coefficient_m(i: usize, pts: &[C64], lambda: &dyn Fn(C64) -> C64, p: &ModelParams) -> Result<C64> {
    coefficient_m_with_size(i, pts, lambda, p).map(|(v, _)| v)
}

/// M_i together with the sum of the magnitudes of its terms.
fn coefficient_m_with_size(i: usize, pts: &[C64], lambda: &dyn Fn(C64) -> C64, p: &ModelParams) -> Result<(C64, f64)> {
    let n = pts.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty point tuple".into()))?;
    if i > n {
        return Err(Error::InvalidArgument(format!("index {i} exceeds n = {n}")));
    }
    let pair = |k: usize, l: usize| move || format!("x{k} and x{l} coincide");
    if i == 0 {
        let x0 = pts[0];
        let mut pa = one();
        let mut pd = one();
        for j in 1..=n {
            pa *= ab(pts[j] - x0, p, pair(0, j))?;
            pd *= ab(x0 - pts[j], p, pair(0, j))?;
        }
        let terms = [p.phi1 * pa * la(x0, p), p.phi2 * pd * ld(x0, p), -lambda(x0)];
        return Ok((terms.iter().sum(), terms.iter().map(|t| t.norm()).sum()));
    }
    let xi = pts[i];
    let mut pa = one();
    let mut pd = one();
    for j in (1..=n).filter(|&j| j != i) {
        pa *= ab(pts[j] - xi, p, pair(i, j))?;
        pd *= ab(xi - pts[j], p, pair(i, j))?;
    }
    let pre = cb(pts[0] - xi, p, pair(0, i))?;
    let (t1, t2) = (pre * p.phi1 * pa * la(xi, p), pre * p.phi2 * pd * ld(xi, p));
    Ok((t1 - t2, t1.norm() + t2.norm()))
}

/// The (n+1)×(n+1) matrix M_{i,j}: column j is evaluated with x₀ and x_j
/// exchanged; row 0 holds M_j, the diagonal M₀ and the rest M_i.
pub fn compatibility_matrix(pts: &[C64], lambda: &dyn Fn(C64) -> C64, p: &ModelParams) -> Result<Mat> {
    compatibility_matrix_with_sizes(pts, lambda, p).map(|(m, _)| m)
}

fn compatibility_matrix_with_sizes(pts: &[C64], lambda: &dyn Fn(C64) -> C64, p: &ModelParams) -> Result<(Mat, Vec<f64>)> {
    let n1 = pts.len();
    let mut m = Mat::zeros(n1, n1);
    let mut sizes = vec![0.0; n1 * n1];
    for j in 0..n1 {
        let mut sw = pts.to_vec();
        sw.swap(0, j);
        for i in 0..n1 {
            let k = if i == 0 {
                j
            } else if i == j {
                0
            } else {
                i
            };
            let (v, size) = coefficient_m_with_size(k, &sw, lambda, p)?;
            m[(i, j)] = v;
            sizes[i * n1 + j] = size;
        }
    }
    Ok((m, sizes))
}

#[derive(Debug, Clone, Copy)]
pub struct DetValue {
    pub det: C64,
    /// Hadamard bound: product over rows of the 2-norm of the entry sizes,
    /// where an entry's size is the sum of the magnitudes of its terms
    pub scale: f64,
}

impl DetValue {
    pub fn normalized(&self) -> f64 {
        if self.scale == 0.0 {
            self.det.norm()
        } else {
            self.det.norm() / self.scale
        }
    }
}

pub fn compatibility_det(pts: &[C64], lambda: &dyn Fn(C64) -> C64, p: &ModelParams) -> Result<DetValue> {
    let (m, sizes) = compatibility_matrix_with_sizes(pts, lambda, p)?;
    let n1 = m.rows;
    let scale = (0..n1)
        .map(|i| sizes[i * n1..(i + 1) * n1].iter().map(|s| s * s).sum::<f64>().sqrt())
        .product();
    Ok(DetValue { det: m.det(), scale })
}

/// Entry ω_{i,j} (zero-based; indices ≥ 2 refer to zeroes[index − 2]).
pub fn omega_entry(i: usize, j: usize, x0: C64, x1: C64, zeroes: &[C64], p: &ModelParams) -> Result<C64> {
    let n = zeroes.len() + 1;
    if i > n || j > n {
        return Err(Error::InvalidArgument(format!("omega index ({i},{j}) exceeds n = {n}")));
    }
    let xs = [x0, x1];
    let name = move |what: &'static str| move || format!("omega({i},{j}): {what}");
    // ∏_{k∉skip} a(u_k − y)/b(u_k − y)  and  ∏ a(y − u_k)/b(y − u_k)
    let prods = |y: C64, skip: &[usize]| -> Result<(C64, C64)> {
        let mut pa = one();
        let mut pd = one();
        for (k, &u) in zeroes.iter().enumerate() {
            if skip.contains(&k) {
                continue;
            }
            pa *= ab(u - y, p, || format!("omega({i},{j}): point {y} hits zero u{k}"))?;
            pd *= ab(y - u, p, || format!("omega({i},{j}): point {y} hits zero u{k}"))?;
        }
        Ok((pa, pd))
    };
    let (a, c) = (|x| model_core::a(x, p), p.c());
    if i < 2 {
        let xi = xs[i];
        let xb = xs[1 - i];
        let s = if i == 0 { one() } else { -one() };
        if j == i {
            let (pa, pd) = prods(xi, &[])?;
            return Ok(s * (p.phi1 * a(xb - xi) * pa * la(xi, p) - p.phi2 * a(xi - xb) * pd * ld(xi, p)));
        }
        if j == 1 - i {
            let (pa, pd) = prods(xi, &[])?;
            return Ok(s * c * (p.phi1 * pa * la(xi, p) - p.phi2 * pd * ld(xi, p)));
        }
        let uj = zeroes[j - 2];
        let (pa, pd) = prods(xi, &[j - 2])?;
        let t1 = p.phi1 * a(xb - xi) * cb(xi - uj, p, name("x hits a zero"))? * pa * la(xi, p);
        let t2 = p.phi2 * a(xi - xb) * cb(uj - xi, p, name("x hits a zero"))? * pd * ld(xi, p);
        return Ok(-s * (t1 - t2));
    }
    let ui = zeroes[i - 2];
    if j < 2 {
        let xj = xs[j];
        let xb = xs[1 - j];
        let (pa, pd) = prods(ui, &[i - 2])?;
        let t1 = p.phi1 * cb(ui - xj, p, name("x hits a zero"))? * ab(xb - ui, p, name("x hits a zero"))? * pa * la(ui, p);
        let t2 = p.phi2 * cb(xj - ui, p, name("x hits a zero"))? * ab(ui - xb, p, name("x hits a zero"))? * pd * ld(ui, p);
        return Ok(-t1 - t2);
    }
    let f0a = ab(x0 - ui, p, name("x0 hits a zero"))?;
    let f1a = ab(x1 - ui, p, name("x1 hits a zero"))?;
    let f0d = ab(ui - x0, p, name("x0 hits a zero"))?;
    let f1d = ab(ui - x1, p, name("x1 hits a zero"))?;
    if i == j {
        let (pa, pd) = prods(ui, &[i - 2])?;
        return Ok(p.phi1 * f0a * f1a * pa * la(ui, p) + p.phi2 * f0d * f1d * pd * ld(ui, p));
    }
    let uj = zeroes[j - 2];
    let (pa, pd) = prods(ui, &[i - 2, j - 2])?;
    let t1 = p.phi1 * cb(ui - uj, p, name("coinciding zeroes"))? * f0a * f1a * pa * la(ui, p);
    let t2 = p.phi2 * cb(uj - ui, p, name("coinciding zeroes"))? * f0d * f1d * pd * ld(ui, p);
    Ok(-t1 - t2)
}

pub fn omega_matrix(x0: C64, x1: C64, zeroes: &[C64], p: &ModelParams) -> Result<Mat> {
    let n1 = zeroes.len() + 2;
    let mut m = Mat::zeros(n1, n1);
    for i in 0..n1 {
        for j in 0..n1 {
            m[(i, j)] = omega_entry(i, j, x0, x1, zeroes, p)?;
        }
    }
    Ok(m)
}

/// Determinant with the listed rows and columns removed (empty minor = 1).
pub fn minor(m: &Mat, drop: &[usize]) -> C64 {
    let keep: Vec<usize> = (0..m.rows).filter(|i| !drop.contains(i)).collect();
    if keep.is_empty() {
        return one();
    }
    m.select(&keep, &keep).det()
}

#[derive(Debug, Clone)]
pub struct RiccatiCoefficients {
    pub n: usize,
    pub zero_subset: Vec<C64>,
    pub x: C64,
    pub omega_bar: C64,
    pub omega0: C64,
    pub omega1: C64,
    pub omega2: C64,
    /// contour radius used for the x₁-derivatives
    pub radius: f64,
    pub warning: Option<String>,
}

impl RiccatiCoefficients {
    pub fn as_array(&self) -> [C64; 4] {
        [self.omega_bar, self.omega0, self.omega1, self.omega2]
    }
}

/// Contour radius around x keeping clear of the zero subset (and, in the
/// trigonometric family, of the images x + iπk of the removable point).
pub fn coefficient_radius(x: C64, zero_subset: &[C64], p: &ModelParams) -> f64 {
    let cap = match p.period() {
        Some(per) => per / 8.0,
        None => 0.25 * x.norm().max(1.0),
    };
    calculus::safe_radius(x, zero_subset, p.period(), cap)
}

pub fn riccati_coefficients(n: usize, zero_subset: &[C64], x: C64, p: &ModelParams) -> Result<RiccatiCoefficients> {
    riccati_coefficients_with_radius(n, zero_subset, x, p, None)
}

pub fn riccati_coefficients_with_radius(
    n: usize,
    zero_subset: &[C64],
    x: C64,
    p: &ModelParams,
    radius: Option<f64>,
) -> Result<RiccatiCoefficients> {
    if n == 0 {
        return Err(Error::InvalidArgument("the Riccati equation needs n >= 1".into()));
    }
    if zero_subset.len() != n - 1 {
        return Err(Error::InvalidArgument(format!(
            "sector n={n} needs {} zeroes, got {}",
            n - 1,
            zero_subset.len()
        )));
    }
    let r = radius.unwrap_or_else(|| coefficient_radius(x, zero_subset, p));
    if !(r > 0.0) {
        return Err(Error::Pole { what: format!("x = {x} coincides with a zero of the subset") });
    }
    let at = omega_matrix(x, x, zero_subset, p)?;
    let omega_bar = minor(&at, &[1]);
    let omega2 = minor(&at, &[0, 1]);

    // the closures cannot return errors; a pole on the contour is excluded
    // by the radius choice, and any NaN is caught below
    let f1 = |y: C64| match omega_matrix(x, y, zero_subset, p) {
        Ok(m) => minor(&m, &[0]) + minor(&m, &[1]),
        Err(_) => C64::new(f64::NAN, f64::NAN),
    };
    let f0 = |y: C64| match omega_matrix(x, y, zero_subset, p) {
        Ok(m) => m.det() / model_core::b(y - x, p),
        Err(_) => C64::new(f64::NAN, f64::NAN),
    };
    let (d1, dis1) = calculus::derivatives_checked(f1, x, r, 1);
    let (d0, dis0) = calculus::derivatives_checked(f0, x, r, 1);
    let omega1 = d1[1];
    let omega0 = d0[1];
    if ![omega_bar, omega0, omega1, omega2].iter().all(|z| z.is_finite()) {
        return Err(Error::Numeric(format!("non-finite Riccati coefficient at x = {x}")));
    }
    let dis = dis0.max(dis1);
    let warning = (dis > INSTABILITY_GATE)
        .then(|| format!("contour derivative unstable at x = {x}: r vs r/2 disagree by {dis:.2e}"));
    Ok(RiccatiCoefficients { n, zero_subset: zero_subset.to_vec(), x, omega_bar, omega0, omega1, omega2, radius: r, warning })
}

/// Residual Ω̄Λ′ − Ω₀ + Ω₁Λ − Ω₂Λ² and the sum of the term magnitudes.
pub fn riccati_residual(co: &RiccatiCoefficients, lambda: C64, dlambda: C64) -> (C64, f64) {
    let terms = [co.omega_bar * dlambda, -co.omega0, co.omega1 * lambda, -co.omega2 * lambda * lambda];
    let scale = terms.iter().map(|t| t.norm()).sum();
    (terms.iter().sum(), scale)
}

/// CSV dump of the coefficients and the residual of a curve along `xs`.
pub fn coefficients_csv(
    curve: &crate::transfer_oracle::SpectralCurve,
    zero_subset: &[C64],
    xs: &[C64],
    p: &ModelParams,
) -> Result<String> {
    let mut out = String::from(
        "x_re,x_im,omega_bar_re,omega_bar_im,omega0_re,omega0_im,omega1_re,omega1_im,omega2_re,omega2_im,residual\n",
    );
    for &x in xs {
        let co = riccati_coefficients(curve.n, zero_subset, x, p)?;
        let (res, scale) = riccati_residual(&co, curve.eval(x), curve.derivative(x));
        let rel = res.norm() / scale.max(f64::MIN_POSITIVE);
        write!(out, "{},{}", x.re, x.im).unwrap();
        for v in co.as_array() {
            write!(out, ",{},{}", v.re, v.im).unwrap();
        }
        writeln!(out, ",{rel}").unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model_core::{lambda_pm, Sign};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn trig() -> ModelParams {
        ModelParams::trigonometric(3, c(0.3, 0.1))
            .with_twists(c(1.1, 0.0), c(0.8, 0.0))
            .with_mu(vec![c(0.05, -0.02), c(-0.07, 0.03), c(0.01, 0.08)])
    }

    #[test]
    fn m0_hand_value() {
        let p = ModelParams::rational(1);
        let lam = |x: C64| x * x;
        let m0 = coefficient_m(0, &[c(1.0, 0.0), c(2.0, 0.0)], &lam, &p).unwrap();
        assert!((m0 - (4.0 - 1.0)).norm() < 1e-14);
    }

    #[test]
    fn m1_is_minus_c_over_b_lambda_minus() {
        let p = trig();
        let (x0, x1) = (c(0.3, 0.2), c(-0.4, 0.1));
        let m1 = coefficient_m(1, &[x0, x1], &|_| one(), &p).unwrap();
        let expect = -p.c() / model_core::b(x0 - x1, &p) * lambda_pm(Sign::Minus, x1, &p);
        assert!((m1 - expect).norm() < 1e-13 * expect.norm());
    }

    #[test]
    fn coincident_points_are_rejected() {
        let p = ModelParams::rational(2);
        let e = coefficient_m(0, &[c(0.5, 0.0), c(0.5, 0.0)], &|_| one(), &p);
        assert!(matches!(e, Err(Error::Pole { .. })));
    }

    #[test]
    fn omega_entries_n1() {
        let p = trig();
        let (x0, x1) = (c(0.3, 0.2), c(-0.4, 0.1));
        let w00 = omega_entry(0, 0, x0, x1, &[], &p).unwrap();
        let e00 = p.phi1 * model_core::a(x1 - x0, &p) * la(x0, &p) - p.phi2 * model_core::a(x0 - x1, &p) * ld(x0, &p);
        assert!((w00 - e00).norm() < 1e-13);
        let w01 = omega_entry(0, 1, x0, x1, &[], &p).unwrap();
        assert!((w01 + p.c() * lambda_pm(Sign::Minus, x0, &p)).norm() < 1e-13);
    }

    #[test]
    fn quotient_by_b_has_a_finite_limit() {
        let p = trig().with_mu(vec![c(0.0, 0.0); 3]);
        let u = [c(0.21, -0.37)];
        let x = c(0.13, 0.29);
        let q: Vec<C64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&h| {
                let y = x + h;
                omega_matrix(x, y, &u, &p).unwrap().det() / model_core::b(y - x, &p)
            })
            .collect();
        let w = omega_matrix(x, x, &u, &p).unwrap();
        let scale: f64 = (0..w.rows).map(|i| crate::linalg::norm2(&w.row(i))).product();
        // successive differences shrink tenfold: a finite limit exists
        let (d01, d12) = ((q[0] - q[1]).norm(), (q[1] - q[2]).norm());
        assert!(d12 < 0.2 * d01 + 1e-12 * scale, "{d01:e} {d12:e}");
        assert!(q[2].norm() < scale);
    }

    #[test]
    fn n1_coefficients_have_known_shape() {
        let p = trig();
        let x = c(0.17, -0.23);
        let co = riccati_coefficients(1, &[], x, &p).unwrap();
        assert!((co.omega2 - 1.0).norm() < 1e-13);
        let ob = -p.c() * lambda_pm(Sign::Minus, x, &p);
        assert!((co.omega_bar - ob).norm() < 1e-12 * ob.norm());
        assert!(co.warning.is_none(), "{:?}", co.warning);
    }

    #[test]
    fn wrong_subset_size_is_rejected() {
        assert!(riccati_coefficients(2, &[], c(0.1, 0.0), &trig()).is_err());
    }
}

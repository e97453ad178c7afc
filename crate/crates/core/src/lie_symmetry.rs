//! Lie point symmetries of the Riccati equation
//! Σ = Ω̄Λ′ − Ω₀ + Ω₁Λ − Ω₂Λ² = 0.
//!
//! Generators are restricted to the minimal ansatz ξ = f₀(x),
//! φ = g₀(x) + g₁(x)Λ. Eliminating g₁ and g₀ leaves a linear third-order
//! equation for f₀ whose three solutions span the symmetry algebra.

use crate::calculus;
use crate::error::{Error, Result};
use crate::functional_system::riccati_coefficients;
use crate::linalg::{self, Mat};
use crate::model_core::{lambda_pm_curve, Basis, Curve, Family, ModelParams, Sign};
use crate::ode::{self, Tolerances};
use num_complex::Complex64 as C64;
use serde::Serialize;
use std::sync::Arc;

mod transcribed;

/// Pole order allowed at each zero of the subset. The coefficients are
/// multiplied by b(x − u)^POLE_ORDER before fitting.
const POLE_ORDER: i32 = 6;
const FIT_GATE: f64 = 1e-9;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

/// Values and x-derivatives (orders 0..=3) of the four coefficients.
#[derive(Debug, Clone, Copy)]
pub struct Jet {
    pub bar: [C64; 4],
    pub o0: [C64; 4],
    pub o1: [C64; 4],
    pub o2: [C64; 4],
}

/// The Riccati coefficients of a sector with a fixed zero subset, stored as
/// entire curves N_k divided by the common multiplier ∏ b(x − u)^POLE_ORDER.
/// Values come from the determinant construction; the fit only makes
/// repeated evaluation and differentiation cheap.
#[derive(Debug, Clone)]
pub struct RiccatiModel {
    pub n: usize,
    pub subset: Vec<C64>,
    pub params: ModelParams,
    numerators: [Curve; 4],
    denominator: Curve,
    pub fit_residual: f64,
}

fn b_curve(u: C64, p: &ModelParams) -> Curve {
    match p.family {
        Family::Rational => Curve::monomial(vec![-u, c(1.0)]),
        Family::Trigonometric => Curve::exponential(vec![-0.5 * u.exp(), c(0.0), 0.5 * (-u).exp()]),
    }
}

fn unit(basis: Basis) -> Curve {
    match basis {
        Basis::Monomial => Curve::monomial(vec![c(1.0)]),
        Basis::Exponential => Curve::exponential(vec![c(1.0)]),
    }
}

/// Derivatives of N/M from those of N and M.
fn quotient_jet(nj: [C64; 4], mj: [C64; 4]) -> [C64; 4] {
    let q0 = nj[0] / mj[0];
    let q1 = (nj[1] - mj[1] * q0) / mj[0];
    let q2 = (nj[2] - 2.0 * mj[1] * q1 - mj[2] * q0) / mj[0];
    let q3 = (nj[3] - 3.0 * mj[1] * q2 - 3.0 * mj[2] * q1 - mj[3] * q0) / mj[0];
    [q0, q1, q2, q3]
}

fn curve_jet(cv: &Curve, x: C64) -> [C64; 4] {
    let mut out = [C64::new(0.0, 0.0); 4];
    let mut d = cv.clone();
    for slot in out.iter_mut() {
        *slot = d.eval(x);
        d = d.derivative();
    }
    out
}

impl RiccatiModel {
    pub fn new(n: usize, subset: &[C64], p: &ModelParams) -> Result<Self> {
        p.validate()?;
        let basis = p.basis();
        let denominator = subset
            .iter()
            .fold(unit(basis), |acc, &u| (0..POLE_ORDER).fold(acc, |a, _| a.mul(&b_curve(u, p))));
        let degree = 2 * p.l + 2 + POLE_ORDER as usize * subset.len();
        let nodes = Curve::sample_nodes(basis, degree);
        let mut samples = vec![Vec::with_capacity(nodes.len()); 4];
        for &x in &nodes {
            let co = riccati_coefficients(n, subset, x, p)?;
            let m = denominator.eval(x);
            for (k, v) in co.as_array().iter().enumerate() {
                samples[k].push(v * m);
            }
        }
        let mut fits = Vec::with_capacity(4);
        let mut worst = 0.0_f64;
        for s in &samples {
            let (curve, res) = Curve::fit_samples(basis, degree, s)?;
            worst = worst.max(res);
            fits.push(curve);
        }
        if worst > FIT_GATE {
            return Err(Error::Numeric(format!("coefficient fit residual {worst:.2e} exceeds {FIT_GATE:.0e}")));
        }
        let numerators: [Curve; 4] = fits.try_into().expect("four coefficient curves");
        Ok(RiccatiModel { n, subset: subset.to_vec(), params: p.clone(), numerators, denominator, fit_residual: worst })
    }

    /// (Ω̄, Ω₀, Ω₁, Ω₂) at x.
    pub fn values(&self, x: C64) -> [C64; 4] {
        let m = self.denominator.eval(x);
        [0, 1, 2, 3].map(|k| self.numerators[k].eval(x) / m)
    }

    pub fn jet(&self, x: C64) -> Jet {
        let mj = curve_jet(&self.denominator, x);
        let q = |k: usize| quotient_jet(curve_jet(&self.numerators[k], x), mj);
        Jet { bar: q(0), o0: q(1), o1: q(2), o2: q(3) }
    }

    /// Points where the f₀ equation is singular: the zero subset (poles of
    /// the coefficients) and the zeroes of Ω₂Ω̄.
    pub fn singular_points(&self) -> Result<Vec<C64>> {
        let mut pts = self.subset.clone();
        for k in [0, 3] {
            let num = &self.numerators[k];
            if num.max_coeff() == 0.0 {
                return Err(Error::DegenerateSector {
                    n: self.n,
                    x: C64::new(0.0, 0.0),
                    reason: "leading Riccati coefficient vanishes identically".into(),
                });
            }
            let degree_zero = num.coeffs.iter().skip(1).all(|z| z.norm() <= 1e-12 * num.max_coeff());
            if self.params.basis() == Basis::Monomial && degree_zero {
                continue;
            }
            for z in num.zeroes()? {
                // zeroes shared with the multiplier are removable
                if !self.subset.iter().any(|u| calculus::periodic_distance(z, *u, self.params.period()) < 1e-6) {
                    pts.push(z);
                }
            }
        }
        Ok(pts)
    }

    /// Σ at (x, Λ, Λ′) with the sum of term magnitudes.
    pub fn sigma(&self, x: C64, lambda: C64, dlambda: C64) -> (C64, f64) {
        let [bar, o0, o1, o2] = self.values(x);
        let terms = [bar * dlambda, -o0, o1 * lambda, -o2 * lambda * lambda];
        (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
    }

    /// Λ′ on the surface Σ = 0.
    pub fn slope(&self, x: C64, lambda: C64) -> C64 {
        let [bar, o0, o1, o2] = self.values(x);
        (o0 - o1 * lambda + o2 * lambda * lambda) / bar
    }
}

/// Υ₀ and Υ₁ of the f₀ equation Υ₀f₀ + Υ₁f₀′ − (Ω₂Ω̄)³f₀‴ = 0.
pub fn upsilon(j: &Jet) -> (C64, C64) {
    let [b, b1, b2, b3] = j.bar;
    let [o0, o0p, _, _] = j.o0;
    let [o1, o1p, o1pp, _] = j.o1;
    let [q, q1, q2, q3] = j.o2;
    let u0 = 2.0 * q.powi(4) * (2.0 * o0 * b1 - b * o0p) - 3.0 * b.powi(3) * q1.powi(3)
        + q * b * b * q1 * (o1 * q1 + b1 * q1 + 4.0 * b * q2)
        - q * q * b * (b * (q1 * b2 + b1 * q2 + o1p * q1 + o1 * q2) - q1 * b1 * (b1 + o1) + q3 * b * b)
        + q.powi(3)
            * (b1.powi(3) - 2.0 * b * b1 * b2 - o1 * o1 * b1 - b * o1p * b1 + o1 * b * o1p - 2.0 * o0 * b * q1
                + b * b * o1pp
                + b * b * b3);
    let u1 = q
        * b
        * (2.0 * b * q * q * o1p - q * q * b1 * b1 - 2.0 * o1 * b * q * q1 - 2.0 * b * q * q1 * b1
            + 3.0 * b * b * q1 * q1
            + 2.0 * b * q * q * b2
            - 2.0 * b * b * q * q2
            - 4.0 * o0 * q.powi(3)
            + o1 * o1 * q * q);
    (u0, u1)
}

/// Residual of the f₀ equation for f = (f₀, f₀′, f₀″, f₀‴), with the sum of
/// term magnitudes.
pub fn f0_ode_residual(f: &[C64; 4], j: &Jet) -> (C64, f64) {
    let (u0, u1) = upsilon(j);
    let lead = (j.o2[0] * j.bar[0]).powi(3);
    let terms = [u0 * f[0], u1 * f[1], -lead * f[3]];
    (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
}

fn leading(j: &Jet) -> Result<C64> {
    let qb = j.o2[0] * j.bar[0];
    let size = (j.o2[0].norm() + j.o2[1].norm()) * (j.bar[0].norm() + j.bar[1].norm());
    if qb.norm() <= 1e-14 * size || qb.norm() == 0.0 {
        return Err(Error::Pole { what: "Ω₂Ω̄ vanishes".into() });
    }
    Ok(qb)
}

/// g₁ in terms of f = (f₀, f₀′, …).
pub fn g1_from_f0(f: &[C64], j: &Jet) -> Result<C64> {
    let qb = leading(j)?;
    let [b, b1, ..] = j.bar;
    let [q, q1, ..] = j.o2;
    Ok(f[0] * (q * b1 - q1 * b) / qb - f[1])
}

/// g₀ in terms of f = (f₀, f₀′, f₀″, …).
pub fn g0_from_f0(f: &[C64], j: &Jet) -> Result<C64> {
    let qb = leading(j)?;
    let [b, b1, b2, _] = j.bar;
    let [o1, o1p, ..] = j.o1;
    let [q, q1, q2, _] = j.o2;
    let t0 = f[0] / (2.0 * qb) * (b * (o1p + b2) - b1 * (o1 + b1) + (b / q).powi(2) * (q1 * q1 - q * q2));
    let t1 = f[1] / (2.0 * q * q) * (q * (o1 + b1) - b * q1);
    let t2 = -f[2] * b / (2.0 * q);
    Ok(t0 + t1 + t2)
}

/// The three determining equations for (f₀, g₀, g₁), each given as value and
/// first derivative. Returns residuals with term-magnitude scales.
pub fn determining_residuals(f0: [C64; 2], g0: [C64; 2], g1: [C64; 2], j: &Jet) -> [(C64, f64); 3] {
    let [b, b1, ..] = j.bar;
    let [o0, o0p, ..] = j.o0;
    let [o1, o1p, ..] = j.o1;
    let [q, q1, ..] = j.o2;
    let sum = |t: &[C64]| -> (C64, f64) { (t.iter().sum(), t.iter().map(|z| z.norm()).sum()) };
    [
        sum(&[f0[1] * q * b, g1[0] * q * b, f0[0] * q1 * b, -f0[0] * q * b1]),
        sum(&[f0[1] * o1 * b, g1[1] * b * b, f0[0] * o1p * b, -f0[0] * o1 * b1, -2.0 * g0[0] * q * b]),
        sum(&[
            f0[1] * o0 * b,
            -g1[0] * o0 * b,
            -g0[0] * o1 * b,
            -g0[1] * b * b,
            f0[0] * o0p * b,
            -f0[0] * o0 * b1,
        ]),
    ]
}

pub type Scalar = Arc<dyn Fn(C64) -> C64 + Send + Sync>;

/// A minimal-ansatz triple with derivatives taken on a Cauchy circle.
#[derive(Clone)]
pub struct DeterminingSolution {
    pub f0: Scalar,
    pub g0: Scalar,
    pub g1: Scalar,
    pub radius: f64,
}

impl DeterminingSolution {
    pub fn residuals(&self, model: &RiccatiModel, x: C64) -> [(C64, f64); 3] {
        let d = |f: &Scalar| [f(x), calculus::derivative(|z| f(z), x, self.radius)];
        determining_residuals(d(&self.f0), d(&self.g0), d(&self.g1), &model.jet(x))
    }
}

pub type Component = Arc<dyn Fn(C64, C64) -> C64 + Send + Sync>;

/// A point-symmetry generator ξ ∂ₓ + φ ∂_Λ.
#[derive(Clone)]
pub struct VectorField {
    pub label: String,
    pub xi: Component,
    pub phi: Component,
}

impl std::fmt::Debug for VectorField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VectorField({})", self.label)
    }
}

/// Derivative at z on a small Cauchy circle. The fields are analytic away
/// from isolated poles, so a 16-node rule on a radius well inside the pole
/// distance is exact to rounding.
fn cauchy_derivative(g: impl Fn(C64) -> C64, z: C64) -> C64 {
    calculus::taylor(g, z, 0.02 * (1.0 + z.norm()), 1, 16)[1]
}

pub fn partials(g: &Component, x: C64, l: C64) -> (C64, C64) {
    (cauchy_derivative(|y| g(y, l), x), cauchy_derivative(|m| g(x, m), l))
}

impl VectorField {
    pub fn new(label: impl Into<String>, xi: Component, phi: Component) -> Self {
        VectorField { label: label.into(), xi, phi }
    }

    pub fn minimal(label: impl Into<String>, f0: Scalar, g0: Scalar, g1: Scalar) -> Self {
        let xi: Component = Arc::new(move |x, _| f0(x));
        let phi: Component = Arc::new(move |x, l| g0(x) + g1(x) * l);
        VectorField::new(label, xi, phi)
    }

    /// v(g) = ξ g_x + φ g_Λ.
    pub fn apply(&self, g: &Component, x: C64, l: C64) -> C64 {
        let (gx, gl) = partials(g, x, l);
        (self.xi)(x, l) * gx + (self.phi)(x, l) * gl
    }

    pub fn scaled(&self, s: C64, label: impl Into<String>) -> VectorField {
        let (xi, phi) = (self.xi.clone(), self.phi.clone());
        VectorField::new(label, Arc::new(move |x, l| s * xi(x, l)), Arc::new(move |x, l| s * phi(x, l)))
    }

    pub fn eval(&self, x: C64, l: C64) -> [C64; 2] {
        [(self.xi)(x, l), (self.phi)(x, l)]
    }
}

/// First prolongation coefficient φ_x + (φ_Λ − ξ_x)Λ⁽¹⁾ − ξ_Λ(Λ⁽¹⁾)².
pub fn prolong1(v: &VectorField, x: C64, l: C64, l1: C64) -> C64 {
    let (xx, xl) = partials(&v.xi, x, l);
    let (px, pl) = partials(&v.phi, x, l);
    px + (pl - xx) * l1 - xl * l1 * l1
}

/// Second partials (g_xx, g_xΛ, g_ΛΛ) by nested five-point differences.
pub fn second_partials(g: &Component, x: C64, l: C64) -> (C64, C64, C64) {
    let gx = |y: C64, m: C64| cauchy_derivative(|t| g(t, m), y);
    let gl = |y: C64, m: C64| cauchy_derivative(|t| g(y, t), m);
    (cauchy_derivative(|t| gx(t, l), x), cauchy_derivative(|t| gx(x, t), l), cauchy_derivative(|t| gl(x, t), l))
}

/// Second prolongation coefficient, for fields acting on second-order
/// equations.
pub fn prolong2(v: &VectorField, x: C64, l: C64, l1: C64, l2: C64) -> C64 {
    let (xx, xl) = partials(&v.xi, x, l);
    let (_, pl) = partials(&v.phi, x, l);
    let (xi_xx, xi_xl, xi_ll) = second_partials(&v.xi, x, l);
    let (p_xx, p_xl, p_ll) = second_partials(&v.phi, x, l);
    p_xx + (2.0 * p_xl - xi_xx) * l1 + (p_ll - 2.0 * xi_xl) * l1 * l1 - xi_ll * l1.powi(3) + (pl - 2.0 * xx) * l2
        - 3.0 * xl * l1 * l2
}

/// [v, w] with components v(ξ_w) − w(ξ_v) and v(φ_w) − w(φ_v).
pub fn commutator(v: &VectorField, w: &VectorField) -> VectorField {
    let (v1, w1) = (v.clone(), w.clone());
    let (v2, w2) = (v.clone(), w.clone());
    let xi: Component = Arc::new(move |x, l| v1.apply(&w1.xi, x, l) - w1.apply(&v1.xi, x, l));
    let phi: Component = Arc::new(move |x, l| v2.apply(&w2.phi, x, l) - w2.apply(&v2.phi, x, l));
    VectorField::new(format!("[{}, {}]", v.label, w.label), xi, phi)
}

/// 𝒗₁(Σ) on the surface Σ = 0, with a magnitude scale.
pub fn symmetry_condition(v: &VectorField, model: &RiccatiModel, x: C64, l: C64) -> (C64, f64) {
    let j = model.jet(x);
    let l1 = model.slope(x, l);
    let [xi, phi] = v.eval(x, l);
    let p1 = prolong1(v, x, l, l1);
    let terms = [
        xi * j.bar[1] * l1,
        -xi * j.o0[1],
        xi * j.o1[1] * l,
        -xi * j.o2[1] * l * l,
        phi * j.o1[0],
        -2.0 * phi * j.o2[0] * l,
        p1 * j.bar[0],
    ];
    (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
}

#[derive(Debug, Clone, Serialize)]
pub struct AlgebraReport {
    pub n: usize,
    /// c[i][j][k]: coefficient of field k in [v_i, v_j]
    #[serde(skip)]
    pub constants: [[[C64; 3]; 3]; 3],
    pub structure_constants: Vec<Vec<[f64; 2]>>,
    pub closure_residual: f64,
    pub killing_rank: usize,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<String>,
}

impl AlgebraReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "structure_constants": self.structure_constants,
            "closure_residual": crate::report::round_sig(self.closure_residual),
            "killing_rank": self.killing_rank,
            "verdict": self.verdict,
        })
    }

    /// Killing form K_ab = tr(ad_a ad_b).
    pub fn killing_form(&self) -> Mat {
        killing(&self.constants)
    }
}

fn killing(cst: &[[[C64; 3]; 3]; 3]) -> Mat {
    // (ad_a)_{kj} = c[a][j][k]
    let ad = |a: usize| Mat::from_fn(3, 3, |k, j| cst[a][j][k]);
    Mat::from_fn(3, 3, |a, b| {
        let m = ad(a).matmul(&ad(b));
        (0..3).map(|i| m[(i, i)]).sum()
    })
}

/// Rank by Gaussian elimination with complete pivoting, relative to the
/// largest entry.
pub fn numeric_rank(m: &Mat, rel_tol: f64) -> usize {
    let max = (0..m.rows).flat_map(|i| (0..m.cols).map(move |j| (i, j))).map(|(i, j)| m[(i, j)].norm()).fold(0.0, f64::max);
    rank_above(m, rel_tol * max)
}

/// Rank counting pivots strictly above `floor`.
fn rank_above(m: &Mat, floor: f64) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut rank = 0;
    for step in 0..rows.min(cols) {
        let (mut pi, mut pj, mut best) = (step, step, 0.0);
        for i in step..rows {
            for j in step..cols {
                if a[(i, j)].norm() > best {
                    (pi, pj, best) = (i, j, a[(i, j)].norm());
                }
            }
        }
        if best <= floor || best == 0.0 {
            break;
        }
        rank += 1;
        for j in 0..cols {
            let t = a[(step, j)];
            a[(step, j)] = a[(pi, j)];
            a[(pi, j)] = t;
        }
        for i in 0..rows {
            let t = a[(i, step)];
            a[(i, step)] = a[(i, pj)];
            a[(i, pj)] = t;
        }
        for i in step + 1..rows {
            let f = a[(i, step)] / a[(step, step)];
            for j in step..cols {
                let s = a[(step, j)];
                a[(i, j)] -= f * s;
            }
        }
    }
    rank
}

/// Fits structure constants from pointwise commutators on `grid` and
/// decides whether the three fields close as sl(2).
pub fn classify_algebra(n: usize, fields: &[VectorField; 3], grid: &[(C64, C64)]) -> AlgebraReport {
    let rows = 2 * grid.len();
    let basis = Mat::from_fn(rows, 3, |r, k| {
        let (x, l) = grid[r / 2];
        fields[k].eval(x, l)[r % 2]
    });
    let col_scale = (0..3).map(|k| linalg::norm2(&basis.col(k))).sum::<f64>() / 3.0;
    let mut cst = [[[C64::new(0.0, 0.0); 3]; 3]; 3];
    let mut closure = 0.0_f64;
    let mut diagnostics = None;
    let normal = basis.adjoint().matmul(&basis);
    let independent = linalg::Lu::new(&normal).map(|lu| lu.pivot_ratio() > 1e-20).unwrap_or(false);
    if !independent {
        diagnostics = Some("fields are linearly dependent on the grid".to_string());
    }
    for i in 0..3 {
        for j in i + 1..3 {
            let br = commutator(&fields[i], &fields[j]);
            let rhs: Vec<C64> = (0..rows)
                .map(|r| {
                    let (x, l) = grid[r / 2];
                    br.eval(x, l)[r % 2]
                })
                .collect();
            let coef = if independent {
                match linalg::lstsq(&basis, &rhs) {
                    Ok((c, _)) => c,
                    Err(e) => {
                        diagnostics = Some(format!("least squares failed: {e}"));
                        vec![C64::new(0.0, 0.0); 3]
                    }
                }
            } else {
                vec![C64::new(0.0, 0.0); 3]
            };
            let fitted = basis.matvec(&coef);
            let res: Vec<C64> = fitted.iter().zip(&rhs).map(|(a, b)| a - b).collect();
            let rel = linalg::norm2(&res) / linalg::norm2(&rhs).max(col_scale);
            closure = closure.max(rel);
            for k in 0..3 {
                cst[i][j][k] = coef[k];
                cst[j][i][k] = -coef[k];
            }
        }
    }
    let kf = killing(&cst);
    // the Killing form is quadratic in the constants; noise in a nilpotent
    // algebra must not count as rank
    let cmax = cst.iter().flatten().flatten().map(|z| z.norm()).fold(0.0, f64::max);
    let killing_rank = rank_above(&kf, 1e-8 * cmax * cmax);
    let is_sl2 = independent && closure < 1e-5 && killing_rank == 3;
    let structure_constants = [(0, 1), (0, 2), (1, 2)]
        .iter()
        .map(|&(i, j)| {
            cst[i][j].iter().map(|z| [crate::report::round_sig(z.re), crate::report::round_sig(z.im)]).collect()
        })
        .collect();
    AlgebraReport {
        n,
        constants: cst,
        structure_constants,
        closure_residual: closure,
        killing_rank,
        verdict: if is_sl2 { "sl2".into() } else { "other".into() },
        diagnostics,
    }
}

fn require_rational(p: &ModelParams) -> Result<()> {
    match p.family {
        Family::Rational => Ok(()),
        Family::Trigonometric => Err(Error::Unsupported("closed-form generators are given for the rational family".into())),
    }
}

/// λ± and their derivatives as shared evaluators.
#[derive(Clone)]
struct Lambdas {
    plus: Curve,
    minus: Curve,
    dplus: Curve,
    dminus: Curve,
}

impl Lambdas {
    fn new(p: &ModelParams) -> Self {
        let plus = lambda_pm_curve(Sign::Plus, p);
        let minus = lambda_pm_curve(Sign::Minus, p);
        Lambdas { dplus: plus.derivative(), dminus: minus.derivative(), plus, minus }
    }
}

/// The n = 1 generators (X₊, X₋, H) of the rational model.
pub fn generators_n1(p: &ModelParams) -> Result<[VectorField; 3]> {
    require_rational(p)?;
    let lm = Arc::new(Lambdas::new(p));
    let i = C64::new(0.0, 1.0);
    let (a, b, d) = (lm.clone(), lm.clone(), lm.clone());
    let x_plus = VectorField::new(
        "X+",
        Arc::new(move |_, _| -i),
        Arc::new(move |x, l| {
            let r = a.dminus.eval(x) / a.minus.eval(x);
            -i * (a.dplus.eval(x) + (l - a.plus.eval(x)) * r)
        }),
    );
    let x_minus = VectorField::new(
        "X-",
        Arc::new(move |x, _| -i * x * x),
        Arc::new(move |x, l| {
            let r = b.dminus.eval(x) / b.minus.eval(x);
            -i * (b.minus.eval(x) + x * x * b.dplus.eval(x) + x * (l - b.plus.eval(x)) * (x * r - 2.0))
        }),
    );
    let h = VectorField::new(
        "H",
        Arc::new(move |x, _| -2.0 * x),
        Arc::new(move |x, l| {
            let r = d.dminus.eval(x) / d.minus.eval(x);
            -2.0 * (x * d.dplus.eval(x) + (l - d.plus.eval(x)) * (x * r - 1.0))
        }),
    );
    Ok([x_plus, x_minus, h])
}

/// One solution of the f₀ equation, evaluable off the integration path by
/// continuing from the nearest stored point.
pub struct F0Solution {
    model: Arc<RiccatiModel>,
    points: Arc<Vec<(C64, Vec<C64>)>>,
    index: usize,
    tol: Tolerances,
}

fn f0_rhs(model: &RiccatiModel, z: C64, y: &[C64]) -> Result<Vec<C64>> {
    let j = model.jet(z);
    let lead = leading(&j)?.powi(3);
    let (u0, u1) = upsilon(&j);
    let mut out = Vec::with_capacity(y.len());
    for s in y.chunks(3) {
        out.extend_from_slice(&[s[1], s[2], (u0 * s[0] + u1 * s[1]) / lead]);
    }
    Ok(out)
}

impl F0Solution {
    /// (f₀, f₀′, f₀″, f₀‴) at z.
    pub fn state(&self, z: C64) -> Result<[C64; 4]> {
        let (z0, y) = self
            .points
            .iter()
            .min_by(|a, b| (a.0 - z).norm().total_cmp(&(b.0 - z).norm()))
            .expect("non-empty trajectory");
        let start = &y[3 * self.index..3 * self.index + 3];
        let traj = ode::integrate(|w, s| f0_rhs(&self.model, w, s), *z0, start, z, &self.tol)?;
        let s = traj.last();
        let d3 = f0_rhs(&self.model, z, s)?[2];
        Ok([s[0], s[1], s[2], d3])
    }
}

pub struct SymmetrySolutions {
    pub x0: f64,
    pub interval: (f64, f64),
    pub solutions: Vec<Arc<F0Solution>>,
    pub fields: [VectorField; 3],
    /// smallest |W| of the three solutions along the path
    pub min_wronskian: f64,
    pub evaluations: usize,
}

/// A real starting point x₀ such that [x₀, x₀ + length] stays `clearance`
/// away from every singular point of the f₀ equation.
pub fn choose_interval(model: &RiccatiModel, length: f64, clearance: f64) -> Result<f64> {
    let sing = model.singular_points()?;
    let period = model.params.period();
    let clear = |x0: f64| {
        (0..=200).all(|k| {
            let x = C64::new(x0 + length * k as f64 / 200.0, 0.0);
            sing.iter().all(|s| calculus::periodic_distance(x, *s, period) >= clearance)
        })
    };
    (0..40)
        .flat_map(|k| {
            let s = 0.25 * k as f64;
            [s, -s]
        })
        .find(|&x0| clear(x0))
        .ok_or_else(|| Error::Numeric(format!("no interval of length {length} clears the singular points {sing:?}")))
}

/// Integrates the f₀ equation from the canonical initial conditions and
/// builds the three symmetry generators.
pub fn solve_symmetries(model: Arc<RiccatiModel>, x0: Option<f64>) -> Result<SymmetrySolutions> {
    const LENGTH: f64 = 2.0;
    let x0 = match x0 {
        Some(x) => x,
        None => choose_interval(&model, LENGTH, 0.3)?,
    };
    let tol = Tolerances::default();
    let one = c(1.0);
    let zero = c(0.0);
    let y0 = [one, zero, zero, zero, one, zero, zero, zero, one];
    let m = model.clone();
    let traj = ode::integrate(move |z, y| f0_rhs(&m, z, y), c(x0), &y0, c(x0 + LENGTH), &tol)?;
    let min_wronskian = traj
        .points
        .iter()
        .map(|(_, y)| Mat::from_fn(3, 3, |r, k| y[3 * k + r]).det().norm())
        .fold(f64::INFINITY, f64::min);
    if min_wronskian < 1e-6 {
        return Err(Error::Numeric(format!("Wronskian collapsed to {min_wronskian:.2e}")));
    }
    let points = Arc::new(traj.points);
    let solutions: Vec<Arc<F0Solution>> = (0..3)
        .map(|index| Arc::new(F0Solution { model: model.clone(), points: points.clone(), index, tol }))
        .collect();
    let labels = ["f0=1", "f0=x", "f0=x^2/2"];
    let fields: Vec<VectorField> = solutions
        .iter()
        .zip(labels)
        .map(|(sol, label)| symmetry_field(label, model.clone(), sol.clone()))
        .collect();
    Ok(SymmetrySolutions {
        x0,
        interval: (x0, x0 + LENGTH),
        solutions,
        fields: fields.try_into().expect("three fields"),
        min_wronskian,
        evaluations: traj.evaluations,
    })
}

fn nan() -> C64 {
    C64::new(f64::NAN, f64::NAN)
}

/// Minimal-ansatz field built from an integrated f₀ via the elimination
/// formulas.
fn symmetry_field(label: &str, model: Arc<RiccatiModel>, sol: Arc<F0Solution>) -> VectorField {
    let (s1, s2) = (sol.clone(), sol);
    let xi: Component = Arc::new(move |x, _| s1.state(x).map(|s| s[0]).unwrap_or_else(|_| nan()));
    let phi: Component = Arc::new(move |x, l| {
        let eval = || -> Result<C64> {
            let s = s2.state(x)?;
            let j = model.jet(x);
            Ok(g0_from_f0(&s, &j)? + g1_from_f0(&s, &j)? * l)
        };
        eval().unwrap_or_else(|_| nan())
    });
    VectorField::new(label, xi, phi)
}

/// Minimal-ansatz field from a closed-form f₀, with g₀ and g₁ from the
/// elimination formulas. f₀ derivatives are taken on a Cauchy circle kept
/// clear of `poles`.
pub fn field_from_f0(label: &str, model: Arc<RiccatiModel>, f0: Scalar, poles: Vec<C64>) -> VectorField {
    let f1 = f0.clone();
    let xi: Component = Arc::new(move |x, _| f1(x));
    let phi: Component = Arc::new(move |x, l| {
        let r = calculus::safe_radius(x, &poles, None, 0.05);
        let d = calculus::derivatives(|z| f0(z), x, r, 2);
        let j = model.jet(x);
        match (g0_from_f0(&d, &j), g1_from_f0(&d, &j)) {
            (Ok(g0), Ok(g1)) => g0 + g1 * l,
            _ => nan(),
        }
    });
    VectorField::new(label, xi, phi)
}

/// ξ components of the n = 2 generators (H, X₊, X₋) of the rational model.
#[derive(Debug, Clone, Copy)]
pub struct XiN2 {
    pub u1: C64,
    pub lp: C64,
    pub lm: C64,
}

impl XiN2 {
    pub fn new(u1: C64, p: &ModelParams) -> Result<Self> {
        require_rational(p)?;
        let lp = lambda_pm_curve(Sign::Plus, p).eval(u1);
        let lm = lambda_pm_curve(Sign::Minus, p).eval(u1);
        Ok(XiN2 { u1, lp, lm })
    }

    /// 2(u₁ − x)λ₋(u₁) + ((u₁ − x)² + 1)λ₊(u₁), the common denominator.
    pub fn den(&self, x: C64) -> C64 {
        let d = self.u1 - x;
        2.0 * d * self.lm + (d * d + 1.0) * self.lp
    }

    /// Zeroes of `den`.
    pub fn poles(&self) -> Vec<C64> {
        let disc = (self.lm * self.lm - self.lp * self.lp).sqrt();
        [1.0, -1.0].iter().map(|s| self.u1 - (-self.lm + s * disc) / self.lp).collect()
    }

    fn shared(&self, x: C64) -> C64 {
        let u = self.u1;
        (x - 2.0 * u) * self.lm - (u * u - u * x + 1.0) * self.lp
    }

    pub fn h(&self, x: C64) -> C64 {
        let u = self.u1;
        2.0 * x * ((x - u) * self.lp - self.lm) * self.shared(x) / ((self.lm + u * self.lp) * self.den(x))
    }

    pub fn plus(&self, x: C64) -> C64 {
        let u = self.u1;
        let k = 2.0 * u * self.lm + (u * u + 1.0) * self.lp;
        x * x * self.shared(x).powi(2) / (k * k * self.den(x))
    }

    pub fn minus(&self, x: C64) -> C64 {
        let u = self.u1;
        let k = 2.0 * u * self.lm + (u * u + 1.0) * self.lp;
        -(k * k) * (self.lm + (u - x) * self.lp).powi(2) / ((self.lm + u * self.lp).powi(2) * self.den(x))
    }
}

/// Outcome of checking one closed-form n = 2 generator.
#[derive(Debug, Clone, Serialize)]
pub struct GeneratorCheck {
    pub label: String,
    /// max relative residual of ξ in the f₀ equation
    pub xi_f0_residual: f64,
    /// max relative residual of ξ projected on the integrated solution span
    pub xi_span_residual: Option<f64>,
    /// max relative symmetry-condition residual of the elimination field
    pub derived_residual: f64,
    /// the same for the field with the reference φ
    pub reference_residual: f64,
    /// max relative difference between reference φ and derived φ
    pub phi_difference: f64,
    pub consistent: bool,
}

pub struct GeneratorsN2 {
    pub model: Arc<RiccatiModel>,
    pub xi: XiN2,
    /// (X₊, X₋, H) with φ from the elimination formulas
    pub fields: [VectorField; 3],
    /// (X₊, X₋, H) with the reference φ expressions
    pub reference: [VectorField; 3],
}

impl GeneratorsN2 {
    /// Checks every generator on `points` (pairs (x, Λ)). When `span` is
    /// given, ξ is also projected on the integrated f₀ solutions.
    pub fn check(&self, points: &[(C64, C64)], span: Option<&SymmetrySolutions>, tol: f64) -> Vec<GeneratorCheck> {
        let xi_fns: [Box<dyn Fn(C64) -> C64>; 3] = {
            let (a, b, h) = (self.xi, self.xi, self.xi);
            [Box::new(move |x| a.plus(x)), Box::new(move |x| b.minus(x)), Box::new(move |x| h.h(x))]
        };
        let mut poles = self.xi.poles();
        poles.push(self.xi.u1);
        (0..3)
            .map(|k| {
                let f = &xi_fns[k];
                let mut xi_res = 0.0_f64;
                let (mut dres, mut rres, mut diff) = (0.0_f64, 0.0_f64, 0.0_f64);
                for &(x, l) in points {
                    let r = calculus::safe_radius(x, &poles, None, 0.05);
                    let d = calculus::derivatives(f, x, r, 3);
                    let (v, sc) = f0_ode_residual(&[d[0], d[1], d[2], d[3]], &self.model.jet(x));
                    xi_res = xi_res.max(v.norm() / sc);
                    let (v, sc) = symmetry_condition(&self.fields[k], &self.model, x, l);
                    dres = dres.max(v.norm() / sc);
                    let (v, sc) = symmetry_condition(&self.reference[k], &self.model, x, l);
                    rres = rres.max(if v.is_finite() { v.norm() / sc } else { f64::INFINITY });
                    let (a, b) = ((self.reference[k].phi)(x, l), (self.fields[k].phi)(x, l));
                    diff = diff.max((a - b).norm() / b.norm().max(a.norm()).max(f64::MIN_POSITIVE));
                }
                let span_res = span.map(|s| span_residual(f, s));
                GeneratorCheck {
                    label: self.fields[k].label.clone(),
                    xi_f0_residual: xi_res,
                    xi_span_residual: span_res,
                    derived_residual: dres,
                    reference_residual: rres,
                    phi_difference: diff,
                    consistent: rres < tol && diff < tol,
                }
            })
            .collect()
    }
}

/// Relative least-squares residual of f against the integrated f₀ span,
/// sampled along the integration interval.
fn span_residual(f: &dyn Fn(C64) -> C64, s: &SymmetrySolutions) -> f64 {
    let xs: Vec<C64> = (0..=12).map(|k| c(s.interval.0 + (s.interval.1 - s.interval.0) * k as f64 / 12.0)).collect();
    let mut cols = Vec::new();
    for sol in &s.solutions {
        match xs.iter().map(|&x| sol.state(x).map(|st| st[0])).collect::<Result<Vec<_>>>() {
            Ok(v) => cols.push(v),
            Err(_) => return f64::INFINITY,
        }
    }
    let a = Mat::from_fn(xs.len(), 3, |r, k| cols[k][r]);
    let b: Vec<C64> = xs.iter().map(|&x| f(x)).collect();
    match linalg::lstsq(&a, &b) {
        Ok((coef, _)) => {
            let fit = a.matvec(&coef);
            let res: Vec<C64> = fit.iter().zip(&b).map(|(p, q)| p - q).collect();
            linalg::norm2(&res) / linalg::norm2(&b).max(f64::MIN_POSITIVE)
        }
        Err(_) => f64::INFINITY,
    }
}

/// The n = 2 generators of the rational model for a zero u₁: ξ in closed
/// form, φ both from the elimination formulas and from the reference
/// expressions.
pub fn generators_n2(u1: C64, p: &ModelParams) -> Result<GeneratorsN2> {
    let xi = XiN2::new(u1, p)?;
    if (xi.lm + u1 * xi.lp).norm() < 1e-12 || (2.0 * u1 * xi.lm + (u1 * u1 + 1.0) * xi.lp).norm() < 1e-12 {
        return Err(Error::Pole { what: format!("a generator normalization vanishes at u1 = {u1}") });
    }
    let model = Arc::new(RiccatiModel::new(2, &[u1], p)?);
    let mut poles = xi.poles();
    poles.push(u1);
    let fields = [
        field_from_f0("X+", model.clone(), Arc::new(move |x| xi.plus(x)), poles.clone()),
        field_from_f0("X-", model.clone(), Arc::new(move |x| xi.minus(x)), poles.clone()),
        field_from_f0("H", model.clone(), Arc::new(move |x| xi.h(x)), poles),
    ];
    let lam = Arc::new(Lambdas::new(p));
    let reference_phi = |which: fn(&transcribed::Args) -> C64| -> Component {
        let lam = lam.clone();
        Arc::new(move |x, l| {
            let args = transcribed::Args {
                u: u1,
                x,
                l,
                lp: lam.plus.eval(x),
                lm: lam.minus.eval(x),
                dlp: lam.dplus.eval(x),
                dlm: lam.dminus.eval(x),
                pu: xi.lp,
                mu: xi.lm,
            };
            which(&args)
        })
    };
    let reference = [
        VectorField::new("X+", Arc::new(move |x, _| xi.plus(x)), reference_phi(transcribed::phi_plus)),
        VectorField::new("X-", Arc::new(move |x, _| xi.minus(x)), reference_phi(transcribed::phi_minus)),
        VectorField::new("H", Arc::new(move |x, _| xi.h(x)), reference_phi(transcribed::phi_h)),
    ];
    Ok(GeneratorsN2 { model, xi, fields, reference })
}

//! The spectral map induced by the X₊ symmetry of the n = 1 Riccati equation,
//!
//! 𝒦₁(Λ)(x) = [Λ(x+iα) − λ₊(x+iα)] λ₋(x)/λ₋(x+iα) + λ₊(x),
//!
//! its α-selection rules and the directed cycle graphs it induces on the
//! sector-one spectrum of the rational model.

use crate::error::{Error, Result};
use crate::model_core::{lambda_pm_curve, Basis, Curve, Family, ModelParams, Sign};
use crate::poly;
use crate::report::{complex_pair, fmt_sig};
use crate::transfer_oracle::{diagonalize_sector, SpectralCurve};
use num_complex::Complex64 as C64;
use serde::Serialize;

pub const RESIDUE_TOL: f64 = 1e-8;
pub const EQUALITY_TOL: f64 = 1e-8;
pub const INEQUALITY_TOL: f64 = 1e-4;
pub const MATCH_TOL: f64 = 1e-8;

/// α used for the λ₊ self-loop, which is fixed for every α.
pub const SELF_LOOP_ALPHA: C64 = C64::new(1.0, 0.0);

fn i() -> C64 {
    C64::new(0.0, 1.0)
}

fn require_sector_one(lambda: &SpectralCurve, p: &ModelParams) -> Result<()> {
    if p.family != Family::Rational {
        return Err(Error::Unsupported("the spectral map is defined for the rational family".into()));
    }
    if lambda.n != 1 {
        return Err(Error::Unsupported(format!("the spectral map acts on sector 1, got sector {}", lambda.n)));
    }
    if lambda.curve.basis != Basis::Monomial {
        return Err(Error::InvalidArgument("rational curves use the monomial basis".into()));
    }
    Ok(())
}

/// 𝒦₁(Λ) as the quotient N/D of polynomials with D(x) = λ₋(x+iα).
#[derive(Debug, Clone)]
pub struct K1Image {
    pub alpha: C64,
    pub numerator: Vec<C64>,
    pub denominator: Vec<C64>,
    /// Λ, λ₊ and λ₋ shifted by iα; they size the numerator at a pole
    shifted: [Vec<C64>; 3],
    minus: Vec<C64>,
    plus: Vec<C64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Residue {
    pub pole: C64,
    pub residue: C64,
    /// |residue| relative to the term sizes of the numerator at the pole
    pub relative: f64,
}

impl K1Image {
    pub fn eval(&self, x: C64) -> C64 {
        poly::eval(&self.numerator, x) / poly::eval(&self.denominator, x)
    }

    /// Residues of the image at the roots of λ₋(x+iα).
    pub fn residues(&self) -> Result<Vec<Residue>> {
        let den = poly::trim(&self.denominator, 1e-14);
        let dprime = poly::derivative(&den);
        let [lam_s, plus_s, minus_s] = &self.shifted;
        let abs_eval = |c: &[C64], x: C64| c.iter().rev().fold(0.0, |acc, z| acc * x.norm() + z.norm());
        poly::roots(&den)?
            .into_iter()
            .map(|r| {
                let d = poly::eval(&dprime, r);
                if d.norm() == 0.0 {
                    return Err(Error::Numeric(format!("repeated pole of the image at {r}")));
                }
                let res = poly::eval(&self.numerator, r) / d;
                let size = (abs_eval(lam_s, r) + abs_eval(plus_s, r)) * abs_eval(&self.minus, r)
                    + abs_eval(&self.plus, r) * abs_eval(minus_s, r);
                let relative = poly::eval(&self.numerator, r).norm() / size.max(f64::MIN_POSITIVE);
                Ok(Residue { pole: r, residue: res, relative })
            })
            .collect()
    }

    /// The image as a polynomial curve, when every residue vanishes.
    pub fn to_curve(&self) -> Result<Curve> {
        let residues = self.residues()?;
        if residues.iter().any(|r| r.relative >= RESIDUE_TOL) {
            return Err(Error::ResidueObstruction { residues: residues.iter().map(|r| r.relative).collect() });
        }
        let den = poly::trim(&self.denominator, 1e-14);
        let (q, _) = poly::divrem(&self.numerator, &den)?;
        Ok(Curve::monomial(q))
    }
}

/// 𝒦₁ applied to Λ with parameter α.
pub fn k1_apply(lambda: &SpectralCurve, alpha: C64, p: &ModelParams) -> Result<K1Image> {
    require_sector_one(lambda, p)?;
    let plus = lambda_pm_curve(Sign::Plus, p).coeffs;
    let minus = lambda_pm_curve(Sign::Minus, p).coeffs;
    let s = i() * alpha;
    let lam_s = poly::shift(&lambda.curve.coeffs, s);
    let plus_s = poly::shift(&plus, s);
    let minus_s = poly::shift(&minus, s);
    let diff: Vec<C64> = (0..lam_s.len().max(plus_s.len()))
        .map(|k| lam_s.get(k).copied().unwrap_or_default() - plus_s.get(k).copied().unwrap_or_default())
        .collect();
    let a = poly::mul(&diff, &minus);
    let b = poly::mul(&plus, &minus_s);
    let numerator = (0..a.len().max(b.len()))
        .map(|k| a.get(k).copied().unwrap_or_default() + b.get(k).copied().unwrap_or_default())
        .collect();
    Ok(K1Image { alpha, numerator, denominator: minus_s.clone(), shifted: [lam_s, plus_s, minus_s], minus, plus })
}

/// One admissible α = i(w_l − w_m) with its witnessing zeroes of λ₋.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Admissible {
    pub alpha: C64,
    /// w_l, where Λ(w_l) = λ₊(w_l)
    pub source_zero: C64,
    /// w_m, where Λ(w_m) ≠ λ₊(w_m)
    pub target_zero: C64,
}

/// All α allowed by the selection rules for Λ.
pub fn admissible_alphas(lambda: &SpectralCurve, p: &ModelParams) -> Result<Vec<Admissible>> {
    require_sector_one(lambda, p)?;
    let plus = lambda_pm_curve(Sign::Plus, p);
    let minus = lambda_pm_curve(Sign::Minus, p);
    let w = poly::roots(&poly::trim(&minus.coeffs, 1e-14))?;
    let gap = |x: C64| {
        let scale = lambda.curve.abs_scale(x) + plus.abs_scale(x);
        (lambda.eval(x) - plus.eval(x)).norm() / scale.max(f64::MIN_POSITIVE)
    };
    let gaps: Vec<f64> = w.iter().map(|&x| gap(x)).collect();
    let mut out = Vec::new();
    for (l, &wl) in w.iter().enumerate() {
        if gaps[l] >= EQUALITY_TOL {
            continue;
        }
        for (m, &wm) in w.iter().enumerate() {
            if m != l && gaps[m] > INEQUALITY_TOL {
                out.push(Admissible { alpha: i() * (wl - wm), source_zero: wl, target_zero: wm });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    #[serde(serialize_with = "ser_complex")]
    pub alpha: C64,
}

fn ser_complex<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    complex_pair(*z).serialize(s)
}

#[derive(Debug, Clone)]
pub struct CycleGraph {
    pub nodes: Vec<SpectralCurve>,
    pub edges: Vec<Edge>,
    /// candidate edges dropped because verification failed
    pub diagnostics: Vec<String>,
}

/// Index of the oracle curve equal to `c` within relative coefficient
/// distance MATCH_TOL.
fn match_curve(c: &Curve, nodes: &[SpectralCurve]) -> Option<(usize, f64)> {
    nodes
        .iter()
        .enumerate()
        .map(|(k, n)| (k, n.curve.relative_distance(c)))
        .filter(|&(_, d)| d < MATCH_TOL)
        .min_by(|a, b| a.1.total_cmp(&b.1))
}

/// α with components below 1e-12 of |α| set to zero, so that labels do not
/// carry rounding noise.
fn clean_alpha(a: C64) -> C64 {
    let floor = 1e-12 * a.norm();
    let snap = |v: f64| if v.abs() < floor { 0.0 } else { v };
    C64::new(snap(a.re), snap(a.im))
}

fn is_plus(c: &SpectralCurve, p: &ModelParams) -> bool {
    lambda_pm_curve(Sign::Plus, p).relative_distance(&c.curve) < MATCH_TOL
}

/// The cycle graph of 𝒦₁ on the given sector-one spectrum.
pub fn cycle_graph_from(nodes: Vec<SpectralCurve>, p: &ModelParams) -> Result<CycleGraph> {
    let mut edges = Vec::new();
    let mut diagnostics = Vec::new();
    for (src, node) in nodes.iter().enumerate() {
        if is_plus(node, p) {
            let img = k1_apply(node, SELF_LOOP_ALPHA, p)?.to_curve()?;
            match match_curve(&img, &nodes) {
                Some((dst, _)) if dst == src => edges.push(Edge { src, dst, alpha: SELF_LOOP_ALPHA }),
                _ => diagnostics.push(format!("L{src}: λ₊ is not fixed by the map")),
            }
            continue;
        }
        for adm in admissible_alphas(node, p)? {
            let alpha = clean_alpha(adm.alpha);
            let outcome = k1_apply(node, adm.alpha, p).and_then(|img| img.to_curve());
            match outcome {
                Ok(curve) => match match_curve(&curve, &nodes) {
                    Some((dst, _)) => {
                        if !edges.iter().any(|e: &Edge| e.src == src && e.dst == dst && (e.alpha - alpha).norm() < 1e-10) {
                            edges.push(Edge { src, dst, alpha });
                        }
                    }
                    None => diagnostics.push(format!(
                        "L{src}, alpha={}: image is not an eigenvalue of the sector",
                        format_alpha(alpha)
                    )),
                },
                Err(e) => diagnostics.push(format!("L{src}, alpha={}: {e}", format_alpha(alpha))),
            }
        }
    }
    edges.sort_by(|a, b| {
        (a.src, a.dst).cmp(&(b.src, b.dst)).then(a.alpha.re.total_cmp(&b.alpha.re)).then(a.alpha.im.total_cmp(&b.alpha.im))
    });
    Ok(CycleGraph { nodes, edges, diagnostics })
}

/// Diagonalizes sector one and builds its cycle graph.
pub fn build_cycle_graph(p: &ModelParams) -> Result<CycleGraph> {
    if p.family != Family::Rational {
        return Err(Error::Unsupported("cycle graphs are built for the rational family".into()));
    }
    cycle_graph_from(diagonalize_sector(p, 1)?, p)
}

fn format_alpha(a: C64) -> String {
    format!("{}+{}i", fmt_sig(a.re), fmt_sig(a.im))
}

impl CycleGraph {
    pub fn to_dot(&self) -> String {
        let body: String = self
            .edges
            .iter()
            .map(|e| format!("\"L{}\" -> \"L{}\" [label=\"alpha={}\"]; ", e.src, e.dst, format_alpha(e.alpha)))
            .collect();
        format!("digraph cycles {{ {body}}}\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        let nodes: Vec<serde_json::Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(k, n)| {
                serde_json::json!({
                    "label": format!("L{k}"),
                    "coeffs": n.curve.coeffs.iter().map(|&z| complex_pair(z)).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "nodes": nodes, "edges": self.edges, "diagnostics": self.diagnostics })
    }

    /// (src, dst) pairs without labels.
    pub fn edge_set(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.src, e.dst)).collect()
    }
}

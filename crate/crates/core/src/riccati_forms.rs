//! Closed-form Riccati coefficients of the trigonometric model for the
//! sectors n = 1 and n = 2, and the alternative n = 2 equation obtained by
//! pinning the third point at the origin.

use crate::error::{Error, Result};
use crate::model_core::{lambda_pm_curve, Curve, Family, ModelParams, Sign};
use crate::transfer_oracle::SpectralCurve;
use num_complex::Complex64 as C64;

fn require_trig(p: &ModelParams) -> Result<()> {
    match p.family {
        Family::Trigonometric => Ok(()),
        Family::Rational => Err(Error::Unsupported(
            "closed forms are trigonometric; use the determinant construction for the rational family".into(),
        )),
    }
}

/// λ± and their first derivatives at x.
struct Lambdas {
    lp: C64,
    lm: C64,
    dlp: C64,
    dlm: C64,
}

fn lambdas(x: C64, plus: &Curve, minus: &Curve) -> Lambdas {
    Lambdas { lp: plus.eval(x), lm: minus.eval(x), dlp: plus.eval_derivative(x, 1), dlm: minus.eval_derivative(x, 1) }
}

/// (Ω̄, Ω₀, Ω₁, Ω₂) for n = 1.
pub fn coeffs_n1(x: C64, p: &ModelParams) -> Result<[C64; 4]> {
    require_trig(p)?;
    let (plus, minus) = (lambda_pm_curve(Sign::Plus, p), lambda_pm_curve(Sign::Minus, p));
    let Lambdas { lp, lm, dlp, dlm } = lambdas(x, &plus, &minus);
    let (sg, cg) = (p.gamma.sinh(), p.gamma.cosh());
    let ob = -p.c() * lm;
    let o0 = (cg * lp).powi(2) - (sg * lm).powi(2) + sg * cg * (lp * dlm - lm * dlp);
    let o1 = 2.0 * cg * lp + sg * dlm;
    Ok([ob, o0, o1, C64::new(1.0, 0.0)])
}

/// Closed-form n = 2 coefficients for a fixed zero u₁.
#[derive(Debug, Clone)]
pub struct ClosedFormN2 {
    pub u1: C64,
    pub l_plus: C64,
    pub l_minus: C64,
    gamma: C64,
    plus: Curve,
    minus: Curve,
}

impl ClosedFormN2 {
    pub fn new(u1: C64, p: &ModelParams) -> Result<Self> {
        require_trig(p)?;
        let plus = lambda_pm_curve(Sign::Plus, p);
        let minus = lambda_pm_curve(Sign::Minus, p);
        Ok(ClosedFormN2 { u1, l_plus: plus.eval(u1), l_minus: minus.eval(u1), gamma: p.gamma, plus, minus })
    }

    pub fn p_helper(&self, y: C64) -> C64 {
        let g2 = 2.0 * self.gamma;
        self.l_plus * g2.cosh() * y.sinh() + self.l_minus * g2.sinh() * y.cosh()
    }

    pub fn q_helper(&self, x: C64) -> C64 {
        let g2 = 2.0 * self.gamma;
        let d = 2.0 * (self.u1 - x);
        self.l_plus * g2.cosh() * d.sinh() + self.l_minus * g2.sinh() * d.cosh()
    }

    /// (Ω̄, Ω₀, Ω₁, Ω₂) at x.
    pub fn coeffs(&self, x: C64) -> Result<[C64; 4]> {
        let s = (self.u1 - x).sinh();
        if s.norm() < 1e-13 {
            return Err(Error::Pole { what: format!("x = {x} coincides with u1 = {} modulo i*pi", self.u1) });
        }
        let Lambdas { lp, lm, dlp, dlm } = lambdas(x, &self.plus, &self.minus);
        let g = self.gamma;
        let (sg, cg) = (g.sinh(), g.cosh());
        let (s2g, c2g) = ((2.0 * g).sinh(), (2.0 * g).cosh());
        let (kp, km) = (self.l_plus, self.l_minus);
        let d = self.u1 - x;
        let s2 = s * s;
        let sq = |z: C64| z * z;

        let ob = sg * sg / (4.0 * s2) * ((kp + km) * (2.0 * (d + g)).sinh() + (km - kp) * (2.0 * (-d + g)).sinh()) * lp
            - s2g / (4.0 * s2) * ((kp + km) * sq((d + g).sinh()) + (kp - km) * sq((-d + g).sinh())) * lm;
        let o0 = 2.0 * kp * sq(sg * cg * lm / s) + lp / s * (c2g * lp + sg * cg * dlm) * self.p_helper(d)
            - sg * cg * lm / s * (self.p_helper(2.0 * d) * lp / s + self.p_helper(d) * dlp);
        let o1 = -self.q_helper(x) / (2.0 * s2) * (s2g * lm + sg * sg * dlp)
            + lp / s2 * (kp * c2g * (cg * cg * (2.0 * d).cosh() - 1.0) + km * s2g * cg * cg * (2.0 * d).sinh())
            + s2g * dlm / (4.0 * s2) * (kp * (sq((d + g).sinh()) + sq((-d + g).sinh())) + km * s2g * (2.0 * d).sinh());
        let o2 = ((kp + km) * sq((d + g).sinh()) + (kp - km) * sq((-d + g).sinh())) / (2.0 * s2);
        Ok([ob, o0, o1, o2])
    }
}

pub fn coeffs_n2(x: C64, u1: C64, p: &ModelParams) -> Result<[C64; 4]> {
    ClosedFormN2::new(u1, p)?.coeffs(x)
}

/// Coefficients of the alternative n = 2 equation
/// J̄Λ′ + K₊Λ² + J₁Λ + J₀ = 0.
#[derive(Debug, Clone)]
pub struct AltFormN2 {
    pub m_plus: C64,
    pub m_minus: C64,
    pub lambda0: C64,
    gamma: C64,
    plus: Curve,
    minus: Curve,
}

impl AltFormN2 {
    pub fn new(lambda0: C64, p: &ModelParams) -> Result<Self> {
        require_trig(p)?;
        let plus = lambda_pm_curve(Sign::Plus, p);
        let minus = lambda_pm_curve(Sign::Minus, p);
        let zero = C64::new(0.0, 0.0);
        Ok(AltFormN2 { m_plus: plus.eval(zero), m_minus: minus.eval(zero), lambda0, gamma: p.gamma, plus, minus })
    }

    pub fn k_plus(&self, x: C64) -> C64 {
        let g2 = 2.0 * self.gamma;
        let x2 = 2.0 * x;
        self.m_plus * (x2.cosh() * g2.cosh() - 1.0) - self.m_minus * g2.sinh() * x2.sinh()
            - 2.0 * self.lambda0 * x.sinh() * x.sinh()
    }

    pub fn k_minus(&self, x: C64) -> C64 {
        let g2 = 2.0 * self.gamma;
        let x2 = 2.0 * x;
        self.m_plus * x2.sinh() * g2.cosh() - self.m_minus * g2.sinh() * x2.cosh() - self.lambda0 * x2.sinh()
    }

    pub fn k0(&self, x: C64) -> C64 {
        let g2 = 2.0 * self.gamma;
        let x2 = 2.0 * x;
        2.0 * self.m_plus * g2.cosh() * x.sinh() * x.sinh() - self.m_minus * g2.sinh() * x2.sinh()
            + self.lambda0 * (g2.cosh() - x2.cosh())
    }

    /// (J̄, K₊, J₁, J₀) at x.
    pub fn coeffs(&self, x: C64) -> [C64; 4] {
        let Lambdas { lp, lm, dlp, dlm } = lambdas(x, &self.plus, &self.minus);
        let g = self.gamma;
        let (sg, cg) = (g.sinh(), g.cosh());
        let (s2g, c2g) = ((2.0 * g).sinh(), (2.0 * g).cosh());
        let (kp, km, k0) = (self.k_plus(x), self.k_minus(x), self.k0(x));
        let (mp, mm, l0) = (self.m_plus, self.m_minus, self.lambda0);
        let x2 = 2.0 * x;

        let jbar = lp * sg * sg * km + lm * sg * cg * kp;
        let j1 = -km * (s2g * lm + sg * sg * dlp) - 0.5 * s2g * kp * dlm
            + 2.0 * lp
                * (c2g * (mp * (1.0 - cg * cg * x2.cosh()) - l0) + cg * cg * (l0 * x2.cosh() + mm * s2g * x2.sinh()));
        let j0 = (mp - l0) * s2g * s2g * lm * lm
            + (c2g * lp + sg * cg * dlm) * lp * k0
            + sg * cg * lm * (2.0 * lp * km - k0 * dlp);
        [jbar, kp, j1, j0]
    }

    /// Residual J̄Λ′ + K₊Λ² + J₁Λ + J₀ and the sum of its term magnitudes.
    pub fn residual(&self, lambda: C64, dlambda: C64, x: C64) -> (C64, f64) {
        let [jbar, kp, j1, j0] = self.coeffs(x);
        let terms = [jbar * dlambda, kp * lambda * lambda, j1 * lambda, j0];
        (terms.iter().sum(), terms.iter().map(|t| t.norm()).sum())
    }
}

pub fn alt_riccati_residual(curve: &SpectralCurve, x: C64, p: &ModelParams) -> Result<(C64, f64)> {
    let form = AltFormN2::new(curve.lambda0, p)?;
    Ok(form.residual(curve.eval(x), curve.derivative(x), x))
}

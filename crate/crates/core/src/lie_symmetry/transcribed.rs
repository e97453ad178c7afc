//! Reference closed forms for the φ components of the n = 2 generators,
//! kept verbatim (with `λ₂` read as λ₊) so the symmetry checks can report
//! where they disagree with the elimination formulas.

#![allow(unused_parens)]

use num_complex::Complex64 as C64;

fn c(v: f64) -> C64 {
    C64::new(v, 0.0)
}

/// Inputs: u = u₁, x, Λ, λ±(x), λ±′(x) and λ±(u₁).
#[derive(Debug, Clone, Copy)]
pub struct Args {
    pub u: C64,
    pub x: C64,
    pub l: C64,
    pub lp: C64,
    pub lm: C64,
    pub dlp: C64,
    pub dlm: C64,
    pub pu: C64,
    pub mu: C64,
}

#[rustfmt::skip]
#[allow(non_snake_case)]
pub fn phi_h(a: &Args) -> C64 {
    let Args { u, x, l: L, lp, lm, dlp, dlm, pu: Pu, mu: Mu } = *a;
    ((Mu + (Pu * u)).powi(-1) * ((Mu * ((c(-1.0) * lp) + (lm * ((c(-2.0) * x) + (c(2.0) * u))))) + (Pu * ((lm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (lp * (x + (c(-1.0) * u)))))).powi(-1) * ((Mu * ((c(-2.0) * x) + (c(2.0) * u))) + (Pu * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x)))).powi(-1) * ((c(-2.0) * Pu.powi(3) * ((lm * ((L * (u.powi(5) + (c(-2.0) * x) + (u * (c(1.0) + x.powi(4) + (c(4.0) * x.powi(2)))) + (u.powi(3) * (c(2.0) + (c(6.0) * x.powi(2)))) + (c(-4.0) * x * u.powi(4)) + (c(-2.0) * x * u.powi(2) * (c(3.0) + (c(2.0) * x.powi(2)))))) + (c(-1.0) * lp * (u.powi(5) + (c(-2.0) * x) + (u * (c(2.0) + x.powi(4) + (c(5.0) * x.powi(2)))) + (u.powi(3) * (c(3.0) + (c(6.0) * x.powi(2)))) + (c(-4.0) * x * u.powi(4)) + (c(-4.0) * x * u.powi(2) * (c(2.0) + x.powi(2))))) + (c(-1.0) * dlp * x * (u + (c(-1.0) * x)).powi(3) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x))))) + (lm.powi(2) * (c(1.0) + u.powi(4) + (c(-1.0) * x.powi(2)) + (u.powi(2) * (c(2.0) + x.powi(2))) + (c(-2.0) * u * x) + (c(-2.0) * x * u.powi(3)))) + (c(-1.0) * (u + (c(-1.0) * x)) * ((lp.powi(2) * (x + (c(-1.0) * u) + (c(-1.0) * u.powi(3)) + (c(-2.0) * u * x.powi(2)) + (c(3.0) * x * u.powi(2)))) + (c(-1.0) * lp * (u + (c(-1.0) * x)) * ((c(-1.0) * L * (c(1.0) + u.powi(2) + (c(-2.0) * u * x))) + (dlm * x * (u + u.powi(3) + (c(-1.0) * x) + (u * x.powi(2)) + (c(-2.0) * x * u.powi(2)))))) + (L * x * ((dlm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (dlp * (x + (c(-1.0) * u)))) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x))))))) + (c(2.0) * Mu.powi(2) * ((lm * ((c(-1.0) * lp * ((c(-4.0) * x) + (c(-4.0) * x.powi(3)) + (c(8.0) * u.powi(3)) + (c(-18.0) * x * u.powi(2)) + (c(2.0) * u * (c(3.0) + (c(7.0) * x.powi(2)))))) + (c(2.0) * L * ((c(-1.0) * x) + (c(-2.0) * x.powi(3)) + (c(2.0) * u) + (c(4.0) * u.powi(3)) + (c(-9.0) * x * u.powi(2)) + (c(7.0) * u * x.powi(2)))) + (dlp * x * ((c(-8.0) * u.powi(3)) + (c(-2.0) * u) + (c(2.0) * x) + (c(3.0) * x.powi(3)) + (c(-14.0) * u * x.powi(2)) + (c(19.0) * x * u.powi(2)))))) + (lp.powi(2) * ((c(-2.0) * u) + (c(2.0) * x))) + (lp.powi(2) * (c(1.0) + (c(4.0) * x.powi(2)) + (c(5.0) * u.powi(2)) + (c(-10.0) * u * x))) + (c(-1.0) * lp * ((L * (c(1.0) + (c(4.0) * x.powi(2)) + (c(5.0) * u.powi(2)) + (c(-10.0) * u * x))) + (dlm * x * ((c(-8.0) * u.powi(3)) + (x * (c(2.0) + (c(3.0) * x.powi(2)))) + (c(-1.0) * u * (c(2.0) + (c(14.0) * x.powi(2)))) + (c(19.0) * x * u.powi(2)))))) + (L * x * ((dlm * ((c(-8.0) * u.powi(3)) + (c(3.0) * x) + (c(3.0) * x.powi(3)) + (c(-1.0) * u * (c(4.0) + (c(14.0) * x.powi(2)))) + (c(19.0) * x * u.powi(2)))) + (dlp * (c(1.0) + (c(2.0) * x.powi(2)) + (c(5.0) * u.powi(2)) + (c(-7.0) * u * x))))) + (c(-1.0) * Pu * Mu.powi(3) * ((lm.powi(2) * ((c(2.0) * x.powi(2)) + (c(4.0) * u.powi(2)) + (c(-4.0) * u * x))) + (c(2.0) * lm * ((lp * (x.powi(2) + (c(2.0) * u.powi(2)) + (c(-2.0) * u * x))) + (c(-1.0) * L * (x.powi(2) + (c(2.0) * u.powi(2)) + (c(-2.0) * u * x))) + (dlp * x * (x.powi(2) + (c(2.0) * u.powi(2)) + (c(-3.0) * u * x))))))) + (c(-1.0) * lp * ((c(-1.0) * L) + (dlm * x * ((c(-1.0) * x) + (c(2.0) * u)))) * ((c(-2.0) * x) + (c(2.0) * u))) + (L * x * ((c(-1.0) * dlp) + (dlm * ((c(-2.0) * x) + (c(2.0) * u)))) * ((c(-1.0) * x) + (c(2.0) * u))))) + (c(2.0) * Mu * Pu.powi(2) * ((c(-4.0) * u.powi(3)) + (c(-2.0) * u) + (lm * ((lp * (c(2.0) + x.powi(4) + (c(5.0) * u.powi(4)) + (c(5.0) * x.powi(2)) + (u.powi(2) * (c(9.0) + (c(18.0) * x.powi(2)))) + (c(-16.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(16.0) + (c(8.0) * x.powi(2)))))) + (c(-1.0) * L * (c(1.0) + x.powi(4) + (c(4.0) * x.powi(2)) + (c(5.0) * u.powi(4)) + (u.powi(2) * (c(6.0) + (c(18.0) * x.powi(2)))) + (c(-16.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(12.0) + (c(8.0) * x.powi(2)))))) + (dlp * x * (u + (c(-1.0) * x)).powi(2) * (c(3.0) + x.powi(2) + (c(5.0) * u.powi(2)) + (c(-6.0) * u * x))))) + (lm.powi(2) * ((c(-4.0) * u.powi(3)) + (c(2.0) * x) + (c(-2.0) * u * (c(2.0) + x.powi(2))) + (c(6.0) * x * u.powi(2)))) + (c(-10.0) * u * x.powi(2)) + (c(2.0) * x * (c(1.0) + x.powi(2))) + (c(12.0) * x * u.powi(2)) + (L * x * ((dlm * (c(1.0) + x.powi(4) + (c(4.0) * x.powi(2)) + (c(5.0) * u.powi(4)) + (u.powi(2) * (c(6.0) + (c(18.0) * x.powi(2)))) + (c(-16.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(10.0) + (c(8.0) * x.powi(2)))))) + (dlp * (x.powi(3) + (c(-4.0) * u.powi(3)) + (c(-2.0) * u) + (c(2.0) * x) + (c(-6.0) * u * x.powi(2)) + (c(9.0) * x * u.powi(2)))))) + (c(-1.0) * lp * (u + (c(-1.0) * x)) * ((c(-2.0) * L * (c(1.0) + x.powi(2) + (c(2.0) * u.powi(2)) + (c(-4.0) * u * x))) + (c(-1.0) * dlm * x * (x.powi(3) + (c(-5.0) * u.powi(3)) + (c(-3.0) * u) + (c(3.0) * x) + (c(-7.0) * u * x.powi(2)) + (c(11.0) * x * u.powi(2))))))))))
}

#[rustfmt::skip]
#[allow(non_snake_case)]
pub fn phi_plus(a: &Args) -> C64 {
    let Args { u, x, l: L, lp, lm, dlp, dlm, pu: Pu, mu: Mu } = *a;
    (((Mu * ((c(-1.0) * lp) + (lm * ((c(-2.0) * x) + (c(2.0) * u))))) + (Pu * ((lm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (lp * (x + (c(-1.0) * u)))))).powi(-1) * ((Mu * ((c(-2.0) * x) + (c(2.0) * u))) + (Pu * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x)))).powi(-1) * ((Pu * (c(1.0) + u.powi(2))) + (c(2.0) * Mu * u)).powi(-2) * ((Mu.powi(3) * ((c(-1.0) * lp.powi(2) * ((c(2.0) * x) + (c(4.0) * x.powi(3)) + (c(-2.0) * u * (c(1.0) + (c(6.0) * x.powi(2)))) + (c(8.0) * x * u.powi(2)))) + (c(2.0) * lm * ((lp * ((c(-1.0) * u.powi(2) * (c(4.0) + (c(16.0) * x.powi(2)))) + (c(-1.0) * x.powi(2) * (c(4.0) + (c(3.0) * x.powi(2)))) + (c(8.0) * x * u.powi(3)) + (c(4.0) * u * x * (c(2.0) + (c(3.0) * x.powi(2)))))) + (x * ((c(-1.0) * x) + (c(2.0) * u)) * ((L * ((c(-4.0) * u.powi(2)) + (c(-3.0) * x.powi(2)) + (c(6.0) * u * x))) + (dlp * x * (x.powi(2) + (c(2.0) * u.powi(2)) + (c(-3.0) * u * x))))))) + (c(8.0) * lm.powi(2) * (u + (c(-1.0) * x)).powi(3)) + (c(-1.0) * L * x.powi(2) * (x + (c(-2.0) * u)).powi(2) * (dlp + (c(-1.0) * dlm * ((c(-2.0) * x) + (c(2.0) * u))))) + (c(2.0) * lp * x * ((c(2.0) * L) + (dlm * x * (x + (c(-2.0) * u)))) * (x.powi(2) + (c(2.0) * u.powi(2)) + (c(-3.0) * u * x))))) + (Pu.powi(3) * ((lm * ((lp * ((c(2.0) * x) + (c(-2.0) * u * (c(1.0) + x.powi(4) + (c(5.0) * x.powi(2)))) + (c(-2.0) * u.powi(3) * (c(2.0) + (c(4.0) * x.powi(4)) + (c(13.0) * x.powi(2)))) + (c(-2.0) * u.powi(5) * (c(1.0) + (c(4.0) * x.powi(2)))) + (c(2.0) * x * u.powi(6)) + (c(2.0) * x * u.powi(2) * (c(7.0) + x.powi(4) + (c(8.0) * x.powi(2)))) + (c(2.0) * x * u.powi(4) * (c(7.0) + (c(6.0) * x.powi(2)))))) + (x * ((c(-2.0) * L * (c(1.0) + u.powi(4) + (u.powi(2) * (c(2.0) + (c(3.0) * x.powi(2)))) + (c(-3.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(3.0) + x.powi(2))))) + (dlp * x * (u + (c(-1.0) * x)).powi(2) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x)))) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x))))) + (lm.powi(2) * (c(1.0) + u.powi(6) + (c(-1.0) * x.powi(2)) + (u.powi(2) * (c(3.0) + (c(2.0) * x.powi(4)) + (c(10.0) * x.powi(2)))) + (u.powi(4) * (c(3.0) + (c(11.0) * x.powi(2)))) + (c(-6.0) * u * x) + (c(-6.0) * x * u.powi(5)) + (c(-4.0) * x * u.powi(3) * (c(3.0) + (c(2.0) * x.powi(2)))))) + (c(-1.0) * lp.powi(2) * (u + (c(-1.0) * x)).powi(2) * (c(-1.0) + (c(-1.0) * u.powi(2) * (c(1.0) + (c(3.0) * x.powi(2)))) + (c(2.0) * x * u.powi(3)) + (c(4.0) * u * x))) + (L * x.powi(2) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x)).powi(2) * ((dlm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (dlp * (x + (c(-1.0) * u))))) + (c(-1.0) * lp * x * ((L * (x + (c(-2.0) * u.powi(3)) + (c(-1.0) * u * (c(2.0) + (c(3.0) * x.powi(2)))) + (c(5.0) * x * u.powi(2)))) + (dlm * x * (u + (c(-1.0) * x)).powi(2) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x)))) * (c(1.0) + u.powi(2) + (c(-1.0) * u * x))))) + (Mu * Pu.powi(2) * ((lm.powi(2) * ((c(-6.0) * x) + (c(6.0) * u.powi(5)) + (c(-30.0) * x * u.powi(4)) + (c(2.0) * u * (c(3.0) + (c(2.0) * x.powi(4)) + (c(10.0) * x.powi(2)))) + (c(2.0) * u.powi(3) * (c(6.0) + (c(22.0) * x.powi(2)))) + (c(-12.0) * x * u.powi(2) * (c(3.0) + (c(2.0) * x.powi(2)))))) + (c(-1.0) * lp.powi(2) * ((c(2.0) * x) + (c(4.0) * x.powi(3)) + (c(-2.0) * u * (c(1.0) + (c(3.0) * x.powi(4)) + (c(9.0) * x.powi(2)))) + (c(-2.0) * u.powi(3) * (c(2.0) + (c(14.0) * x.powi(2)))) + (c(10.0) * x * u.powi(4)) + (c(6.0) * x * u.powi(2) * (c(3.0) + (c(4.0) * x.powi(2)))))) + (c(2.0) * lm * ((lp * (c(-1.0) + (c(-1.0) * x.powi(4)) + (c(-5.0) * x.powi(2)) + (c(-1.0) * u.powi(2) * (c(6.0) + (c(12.0) * x.powi(4)) + (c(39.0) * x.powi(2)))) + (c(-1.0) * u.powi(4) * (c(5.0) + (c(20.0) * x.powi(2)))) + (c(6.0) * x * u.powi(5)) + (c(2.0) * u * x * (c(7.0) + x.powi(4) + (c(8.0) * x.powi(2)))) + (c(4.0) * x * u.powi(3) * (c(7.0) + (c(6.0) * x.powi(2)))))) + (x * ((L * ((c(-6.0) * u.powi(5)) + (x * (c(4.0) + x.powi(2))) + (c(-1.0) * u * (c(6.0) + (c(2.0) * x.powi(4)) + (c(12.0) * x.powi(2)))) + (c(-1.0) * u.powi(3) * (c(12.0) + (c(24.0) * x.powi(2)))) + (c(20.0) * x * u.powi(4)) + (c(12.0) * x * u.powi(2) * (c(2.0) + x.powi(2))))) + (dlp * x * ((c(3.0) * u.powi(5)) + (u * (c(1.0) + x.powi(4) + (c(6.0) * x.powi(2)))) + (u.powi(3) * (c(4.0) + (c(12.0) * x.powi(2)))) + (c(-1.0) * x * (c(1.0) + x.powi(2))) + (c(-10.0) * x * u.powi(4)) + (c(-3.0) * x * u.powi(2) * (c(3.0) + (c(2.0) * x.powi(2)))))))))) + (c(-2.0) * lp * x * ((c(-1.0) * L * (c(1.0) + (c(2.0) * x.powi(2)) + (c(5.0) * u.powi(4)) + (u.powi(2) * (c(6.0) + (c(12.0) * x.powi(2)))) + (c(-14.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(8.0) + (c(3.0) * x.powi(2)))))) + (dlm * x * ((c(3.0) * u.powi(5)) + (u * (c(1.0) + x.powi(4) + (c(6.0) * x.powi(2)))) + (u.powi(3) * (c(4.0) + (c(12.0) * x.powi(2)))) + (c(-1.0) * x * (c(1.0) + x.powi(2))) + (c(-10.0) * x * u.powi(4)) + (c(-3.0) * x * u.powi(2) * (c(3.0) + (c(2.0) * x.powi(2)))))))) + (L * x.powi(2) * ((dlp * (c(1.0) + (c(2.0) * x.powi(2)) + (c(5.0) * u.powi(2)) + (c(-7.0) * u * x))) + (c(-1.0) * dlm * ((c(6.0) * u.powi(3)) + (c(-14.0) * x * u.powi(2)) + (c(-2.0) * x * (c(2.0) + x.powi(2))) + (c(2.0) * u * (c(3.0) + (c(5.0) * x.powi(2))))))) * (c(-1.0) + (c(-1.0) * u.powi(2)) + (u * x))))) + (Pu * Mu.powi(2) * ((lm * ((lp * ((c(-2.0) * u * (c(4.0) + (c(11.0) * x.powi(4)) + (c(30.0) * x.powi(2)))) + (c(-2.0) * u.powi(3) * (c(8.0) + (c(32.0) * x.powi(2)))) + (c(2.0) * x * (c(4.0) + x.powi(4) + (c(8.0) * x.powi(2)))) + (c(2.0) * u.powi(2) * ((c(30.0) * x.powi(3)) + (c(32.0) * x))) + (c(24.0) * x * u.powi(4)))) + (x * ((c(-2.0) * L * ((c(12.0) * u.powi(4)) + (u.powi(2) * (c(12.0) + (c(30.0) * x.powi(2)))) + (x.powi(2) * (c(6.0) + x.powi(2))) + (c(-32.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(16.0) + (c(11.0) * x.powi(2)))))) + (dlp * x * ((c(12.0) * u.powi(4)) + (u.powi(2) * (c(8.0) + (c(29.0) * x.powi(2)))) + (x.powi(2) * (c(4.0) + x.powi(2))) + (c(-32.0) * x * u.powi(3)) + (c(-2.0) * u * x * (c(6.0) + (c(5.0) * x.powi(2)))))))))) + (lm.powi(2) * ((c(12.0) * u.powi(4)) + (c(-48.0) * x * u.powi(3)) + (c(-2.0) * u * ((c(12.0) * x) + (c(12.0) * x.powi(3)))) + (c(2.0) * u.powi(2) * (c(6.0) + (c(28.0) * x.powi(2)))) + (c(2.0) * x.powi(2) * (c(6.0) + x.powi(2))))) + (lp.powi(2) * (c(1.0) + (c(3.0) * x.powi(4)) + (c(7.0) * x.powi(2)) + (u.powi(2) * (c(5.0) + (c(34.0) * x.powi(2)))) + (c(-16.0) * x * u.powi(3)) + (c(-1.0) * u * x * (c(14.0) + (c(20.0) * x.powi(2)))))) + (c(-1.0) * lp * x * ((L * ((c(-16.0) * u.powi(3)) + (c(-1.0) * u * (c(8.0) + (c(20.0) * x.powi(2)))) + (c(3.0) * x * (c(2.0) + x.powi(2))) + (c(34.0) * x * u.powi(2)))) + (dlm * x * ((c(12.0) * u.powi(4)) + (u.powi(2) * (c(8.0) + (c(29.0) * x.powi(2)))) + (x.powi(2) * (c(4.0) + x.powi(2))) + (c(-32.0) * x * u.powi(3)) + (c(-2.0) * u * x * (c(6.0) + (c(5.0) * x.powi(2)))))))) + (L * x.powi(2) * ((c(-1.0) * x) + (c(2.0) * u)) * ((dlm * ((c(6.0) * u.powi(3)) + (u * (c(6.0) + (c(8.0) * x.powi(2)))) + (c(-1.0) * x * (c(5.0) + x.powi(2))) + (c(-13.0) * x * u.powi(2)))) + (c(-1.0) * dlp * (c(2.0) + x.powi(2) + (c(4.0) * u.powi(2)) + (c(-5.0) * u * x)))))))))
}

#[rustfmt::skip]
#[allow(non_snake_case)]
pub fn phi_minus(a: &Args) -> C64 {
    let Args { u, x, l: L, lp, lm, dlp, dlm, pu: Pu, mu: Mu } = *a;
    (c(-1.0) * (Mu + (Pu * u)).powi(-2) * ((Mu * ((c(-1.0) * lp) + (lm * ((c(-2.0) * x) + (c(2.0) * u))))) + (Pu * ((lm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (lp * (x + (c(-1.0) * u)))))).powi(-1) * ((Pu * (c(1.0) + u.powi(2))) + (c(2.0) * Mu * u)).powi(2) * ((Pu * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (c(2.0) * Mu * (u + (c(-1.0) * x)))).powi(-1) * ((Mu.powi(3) * ((c(-1.0) * L * dlp) + (c(-2.0) * lm * (L + (c(-1.0) * lp) + (dlp * (x + (c(-1.0) * u))))) + (c(-1.0) * dlm * (L + (c(-1.0) * lp)) * ((c(-2.0) * u) + (c(2.0) * x))))) + (Pu.powi(3) * (((u + (c(-1.0) * x)).powi(2) * (lp.powi(2) + (L * ((dlm * (c(1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (dlp * (x + (c(-1.0) * u))))) + (c(-1.0) * lp * (L + (dlm * (u + (c(-1.0) * x)).powi(2)))))) + (c(-1.0) * lm.powi(2) * (c(-1.0) + u.powi(2) + x.powi(2) + (c(-2.0) * u * x))) + (lm * (u + (c(-1.0) * x)) * ((c(-2.0) * lp) + (c(2.0) * L) + (dlp * (u + (c(-1.0) * x)).powi(3)))))) + (Mu * Pu.powi(2) * (((u + (c(-1.0) * x)) * ((c(2.0) * lp.powi(2)) + (L * ((dlm * (c(2.0) + (c(4.0) * u.powi(2)) + (c(4.0) * x.powi(2)) + (c(-8.0) * u * x))) + (dlp * ((c(-3.0) * u) + (c(3.0) * x))))) + (c(-2.0) * lp * (L + (c(2.0) * dlm * (u + (c(-1.0) * x)).powi(2)))))) + (c(-1.0) * lm.powi(2) * ((c(-2.0) * x) + (c(2.0) * u))) + (c(2.0) * lm * (L + (c(-1.0) * lp) + (c(2.0) * dlp * (u + (c(-1.0) * x)).powi(3)))))) + (Pu * Mu.powi(2) * (lp.powi(2) + (c(-2.0) * lm.powi(2)) + (L * ((dlm * (c(1.0) + (c(5.0) * u.powi(2)) + (c(5.0) * x.powi(2)) + (c(-10.0) * u * x))) + (dlp * ((c(-3.0) * u) + (c(3.0) * x))))) + (c(-1.0) * lp * (L + (c(5.0) * dlm * (u + (c(-1.0) * x)).powi(2)))) + (lm * (u + (c(-1.0) * x)) * ((c(-2.0) * L) + (c(2.0) * lp) + (dlp * ((c(-5.0) * x) + (c(5.0) * u)))))))))
}

#![allow(dead_code)]

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sixvertex::model_core::ModelParams;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rand_c(r: &mut ChaCha8Rng, half_width: f64) -> C64 {
    c(r.gen_range(-half_width..half_width), r.gen_range(-half_width..half_width))
}

/// Inhomogeneities drawn from [-0.1, 0.1]².
pub fn random_mu(l: usize, seed: u64) -> Vec<C64> {
    let mut r = rng(seed);
    (0..l).map(|_| rand_c(&mut r, 0.1)).collect()
}

/// γ = 0.3+0.1i, φ₁ = 1.1, φ₂ = 0.8 and random small μ.
pub fn generic_trig(l: usize) -> ModelParams {
    ModelParams::trigonometric(l, c(0.3, 0.1))
        .with_twists(c(1.1, 0.0), c(0.8, 0.0))
        .with_mu(random_mu(l, 0x5EED + l as u64))
}

pub fn generic_rational(l: usize) -> ModelParams {
    ModelParams::rational(l)
        .with_twists(c(1.1, 0.0), c(0.8, 0.0))
        .with_mu(random_mu(l, 0x7A7 + l as u64))
}

/// Sample point at distance at least `gap` from every listed point (mod iπ
/// when `period` is given).
pub fn point_avoiding(r: &mut ChaCha8Rng, half_width: f64, avoid: &[C64], period: Option<f64>, gap: f64) -> C64 {
    loop {
        let x = rand_c(r, half_width);
        if avoid.iter().all(|&u| sixvertex::calculus::periodic_distance(x, u, period) > gap) {
            return x;
        }
    }
}

/// All k-subsets of 0..n, capped at `max` (lexicographic order).
pub fn subsets(n: usize, k: usize, max: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, max: usize) {
        if out.len() >= max {
            return;
        }
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out, max);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out, max);
    out
}

/// e^{iπk/5}, the principal branch of (−1)^{k/5}.
pub fn root5(k: u32) -> C64 {
    C64::from_polar(1.0, std::f64::consts::PI * k as f64 / 5.0)
}

/// (x+1)^L + x^L, the λ₊ entry of the published one-magnon spectra.
pub fn lambda_plus_untwisted(l: usize) -> sixvertex::model_core::Curve {
    let binom = |k: usize| (0..k).fold(1.0, |acc, j| acc * (l - j) as f64 / (j + 1) as f64);
    let mut coeffs: Vec<C64> = (0..=l).map(|k| c(binom(k), 0.0)).collect();
    coeffs[l] += c(1.0, 0.0);
    sixvertex::model_core::Curve::monomial(coeffs)
}

/// The published sector-one eigenvalues (rational, φ₁ = φ₂ = 1, μ = 0),
/// indexed as in the publication: entry 0 is λ₊.
pub fn published_spectrum(l: usize) -> Vec<sixvertex::model_core::Curve> {
    use sixvertex::model_core::Curve;
    let z = c(0.0, 0.0);
    let r = |re: f64| c(re, 0.0);
    let i = c(0.0, 1.0);
    let s3 = 3f64.sqrt();
    let rest: Vec<Vec<C64>> = match l {
        3 => vec![
            vec![c(-0.5, -s3 / 2.0), z, r(3.0), r(2.0)],
            vec![c(-0.5, s3 / 2.0), z, r(3.0), r(2.0)],
        ],
        4 => vec![
            vec![r(-1.0), z, r(2.0), r(4.0), r(2.0)],
            vec![-i, -2.0 * i, r(2.0), r(4.0), r(2.0)],
            vec![i, 2.0 * i, r(2.0), r(4.0), r(2.0)],
        ],
        5 => {
            let q = root5;
            let head = |x2: C64, x1: C64, x0: C64| vec![x0, x1, x2, r(5.0), r(5.0), r(2.0)];
            vec![
                head(3.0 + q(1) - q(3) + 2.0 * q(4), 1.0 - q(3) + 3.0 * q(4), q(4)),
                head(3.0 - 2.0 * q(1) + q(2) - q(4), 1.0 - 3.0 * q(1) + q(2), -q(1)),
                head(3.0 + 2.0 * q(2) + q(3) + q(4), 1.0 + 3.0 * q(2) + q(4), q(2)),
                head(-(-3.0 + q(1) + q(2) + 2.0 * q(3)), -(-1.0 + q(1) + 3.0 * q(3)), -q(3)),
            ]
        }
        _ => panic!("published spectra cover L = 3, 4, 5"),
    };
    std::iter::once(lambda_plus_untwisted(l)).chain(rest.into_iter().map(Curve::monomial)).collect()
}

/// Reference α_ij (reference labels i → j) for the sector-one cycle graphs.
pub fn published_alphas(l: usize) -> Vec<((usize, usize), f64)> {
    let half = |a: f64| a / 2.0;
    let pairs: Vec<((usize, usize), f64)> = match l {
        3 => vec![((1, 2), 1.0 / 3f64.sqrt())],
        4 => vec![((1, 2), -0.5), ((1, 3), 0.5), ((2, 3), 1.0)],
        5 => {
            let m = (1.0 - 2.0 / 5f64.sqrt()).sqrt();
            let p = (1.0 + 2.0 / 5f64.sqrt()).sqrt();
            vec![
                ((1, 2), -m),
                ((1, 3), -half(m - p)),
                ((1, 4), -half(m + p)),
                ((2, 3), half(m + p)),
                ((2, 4), half(m - p)),
                ((3, 4), -p),
            ]
        }
        _ => panic!("published cycles cover L = 3, 4, 5"),
    };
    pairs.into_iter().flat_map(|((i, j), a)| [((i, j), a), ((j, i), -a)]).collect()
}

mod common;

use common::*;
use sixvertex::functional_system::{compatibility_det, riccati_coefficients, riccati_residual};
use sixvertex::model_core::ModelParams;
use sixvertex::transfer_oracle::diagonalize_sector;

fn det_check(p: &ModelParams, seed: u64) -> f64 {
    let mut r = rng(seed);
    let mut worst: f64 = 0.0;
    for n in 0..=p.l {
        for curve in diagonalize_sector(p, n).unwrap() {
            let lam = |x| curve.eval(x);
            for _ in 0..10 {
                let mut pts = Vec::new();
                for _ in 0..=n {
                    let x = point_avoiding(&mut r, 0.8, &pts, p.period(), 0.05);
                    pts.push(x);
                }
                let d = compatibility_det(&pts, &lam, p).unwrap();
                worst = worst.max(d.normalized());
            }
        }
    }
    worst
}

fn riccati_check(p: &ModelParams, seed: u64) -> f64 {
    let mut r = rng(seed);
    let mut worst: f64 = 0.0;
    for n in 1..=p.l {
        for curve in diagonalize_sector(p, n).unwrap() {
            assert!(curve.complete, "curve with missing zeroes in sector {n}");
            for subset in subsets(curve.zeroes.len(), n - 1, 20) {
                let us: Vec<_> = subset.iter().map(|&k| curve.zeroes[k]).collect();
                for _ in 0..4 {
                    let x = point_avoiding(&mut r, 0.8, &curve.zeroes, p.period(), 0.05);
                    let co = riccati_coefficients(n, &us, x, p).unwrap();
                    let (res, scale) = riccati_residual(&co, curve.eval(x), curve.derivative(x));
                    worst = worst.max(res.norm() / scale);
                }
            }
        }
    }
    worst
}

#[test]
fn eigenvalues_annihilate_the_compatibility_determinant() {
    for l in 1..=4 {
        let w = det_check(&generic_trig(l), 11 + l as u64);
        assert!(w < 1e-7, "trig L={l}: {w:e}");
        let w = det_check(&generic_rational(l), 17 + l as u64);
        assert!(w < 1e-7, "rational L={l}: {w:e}");
    }
}

#[test]
fn non_eigenvalue_fails_the_determinant() {
    let p = ModelParams::rational(3);
    let one = |_| common::c(1.0, 0.0);
    let d = compatibility_det(&[c(0.31, 0.12), c(-0.42, 0.27)], &one, &p).unwrap();
    assert!(d.normalized() > 1e-3);
}

#[test]
fn eigenvalues_solve_the_riccati_equation() {
    for l in 1..=4 {
        let w = riccati_check(&generic_trig(l), 23 + l as u64);
        assert!(w < 1e-6, "trig L={l}: {w:e}");
        let w = riccati_check(&generic_rational(l), 29 + l as u64);
        assert!(w < 1e-6, "rational L={l}: {w:e}");
    }
}

//! Transfer-matrix properties checked against an independent Kronecker-product
//! construction and nalgebra's eigenvalue solver.

mod common;

use common::{c, generic_rational, generic_trig, rand_c, rng};
use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use proptest::prelude::*;
use sixvertex::linalg::Mat;
use sixvertex::model_core::{self, ModelParams};
use sixvertex::transfer_oracle::{
    build_sector_matrix, diagonalize_sector, full_spectrum, full_transfer_matrix, sector_basis,
};

type M = DMatrix<C64>;

fn site_op(l: usize, j: usize, op: &M) -> M {
    let mut out = M::identity(1, 1);
    for k in 0..l {
        let f = if k == j { op.clone() } else { M::identity(2, 2) };
        out = out.kronecker(&f);
    }
    out
}

/// T(x) = φ₁A + φ₂D from the monodromy L_{L-1}(x−μ) ⋯ L_0(x−μ), each Lax
/// operator a 2×2 block in auxiliary space with six-vertex entries.
fn kron_transfer(p: &ModelParams, x: C64) -> M {
    let l = p.l;
    let dim = 1 << l;
    let zero = M::zeros(dim, dim);
    let mut t = [[M::identity(dim, dim), zero.clone()], [zero.clone(), M::identity(dim, dim)]];
    let c = model_core::weight(model_core::Weight::C, x, p);
    for (j, &mu) in p.mu.iter().enumerate() {
        let (a, b) = (model_core::a(x - mu, p), model_core::b(x - mu, p));
        let o = c0();
        let lax = [
            [M::from_row_slice(2, 2, &[a, o, o, b]), M::from_row_slice(2, 2, &[o, o, c, o])],
            [M::from_row_slice(2, 2, &[o, c, o, o]), M::from_row_slice(2, 2, &[b, o, o, a])],
        ]
        .map(|row| row.map(|op| site_op(l, j, &op)));
        let next: Vec<Vec<M>> =
            (0..2).map(|i| (0..2).map(|k| &lax[i][0] * &t[0][k] + &lax[i][1] * &t[1][k]).collect()).collect();
        t = [[next[0][0].clone(), next[0][1].clone()], [next[1][0].clone(), next[1][1].clone()]];
    }
    &t[0][0] * p.phi1 + &t[1][1] * p.phi2
}

fn c0() -> C64 {
    c(0.0, 0.0)
}

fn to_na(m: &Mat) -> M {
    M::from_fn(m.rows, m.cols, |i, j| m[(i, j)])
}

fn params(l: usize) -> Vec<ModelParams> {
    vec![
        ModelParams::rational(l),
        generic_rational(l),
        ModelParams::trigonometric(l, c(0.3, 0.1)),
        generic_trig(l),
    ]
}

/// Greedy multiset distance between two eigenvalue lists.
fn multiset_gap(a: &[C64], b: &[C64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let mut pool: Vec<C64> = b.to_vec();
    let mut worst: f64 = 0.0;
    for &z in a {
        let (k, d) = pool.iter().enumerate().map(|(k, &w)| (k, (z - w).norm())).fold((0, f64::INFINITY), |m, e| if e.1 < m.1 { e } else { m });
        worst = worst.max(d);
        pool.swap_remove(k);
    }
    worst
}

#[test]
fn kronecker_construction_agrees() {
    let mut r = rng(11);
    for l in 1..=4 {
        for p in params(l) {
            let x = rand_c(&mut r, 0.8);
            let ours = to_na(&full_transfer_matrix(&p, x));
            let oracle = kron_transfer(&p, x);
            let rel = (&ours - &oracle).norm() / oracle.norm();
            assert!(rel < 1e-13, "L={l} {:?}: {rel:e}", p.family);
        }
    }
}

#[test]
fn sector_commutation() {
    let mut r = rng(12);
    for l in 1..=5 {
        for p in params(l) {
            for n in 0..=l {
                for _ in 0..5 {
                    let tx = to_na(&build_sector_matrix(&p, n, rand_c(&mut r, 0.8)).unwrap().matrix);
                    let ty = to_na(&build_sector_matrix(&p, n, rand_c(&mut r, 0.8)).unwrap().matrix);
                    let comm = (&tx * &ty - &ty * &tx).norm() / (tx.norm() * ty.norm());
                    assert!(comm < 1e-10, "L={l} n={n}: {comm:e}");
                }
            }
        }
    }
}

#[test]
fn magnon_number_is_conserved() {
    let mut r = rng(13);
    for l in 1..=5 {
        for p in params(l) {
            let t = kron_transfer(&p, rand_c(&mut r, 0.8));
            let mut off = 0.0;
            for i in 0..t.nrows() {
                for j in 0..t.ncols() {
                    if (i as u32).count_ones() != (j as u32).count_ones() {
                        off += t[(i, j)].norm_sqr();
                    }
                }
            }
            assert!(off.sqrt() / t.norm() < 1e-12, "L={l}");
        }
    }
}

#[test]
fn curves_match_nalgebra_eigenvalues() {
    let mut r = rng(14);
    for l in 1..=5 {
        for p in params(l) {
            for n in 0..=l {
                let curves = diagonalize_sector(&p, n).unwrap();
                let basis = sector_basis(l, n);
                for _ in 0..3 {
                    let x = rand_c(&mut r, 0.8);
                    let full = kron_transfer(&p, x);
                    let block = M::from_fn(basis.len(), basis.len(), |i, j| full[(basis[i], basis[j])]);
                    let eig: Vec<C64> = block.clone().schur().eigenvalues().expect("complex Schur").iter().copied().collect();
                    let ours: Vec<C64> = curves.iter().map(|cv| cv.eval(x)).collect();
                    let gap = multiset_gap(&ours, &eig) / block.norm();
                    assert!(gap < 1e-9, "L={l} n={n}: {gap:e}");
                }
            }
        }
    }
}

#[test]
fn trace_identity() {
    let mut r = rng(15);
    for l in 1..=5 {
        for p in params(l) {
            let spectrum = full_spectrum(&p).unwrap();
            for _ in 0..5 {
                let x = rand_c(&mut r, 0.8);
                let sum: C64 = spectrum.iter().flatten().map(|cv| cv.eval(x)).sum();
                let tr = kron_transfer(&p, x).trace();
                let scale: f64 = spectrum.iter().flatten().map(|cv| cv.eval(x).norm()).sum();
                assert!((sum - tr).norm() / scale < 1e-9, "L={l}");
            }
        }
    }
}

fn closest_shared_zero(p: &ModelParams, n: usize) -> f64 {
    let curves = diagonalize_sector(p, n).unwrap();
    let period = p.period();
    let mut best = f64::INFINITY;
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            if a.curve.relative_distance(&b.curve) < 1e-8 {
                continue;
            }
            for &u in &a.zeroes {
                for &v in &b.zeroes {
                    best = best.min(sixvertex::calculus::periodic_distance(u, v, period));
                }
            }
        }
    }
    best
}

#[test]
fn distinct_curves_share_no_zero() {
    for l in 1..=5 {
        let twisted = [
            ModelParams::rational(l).with_twists(c(1.1, 0.0), c(0.8, 0.0)),
            ModelParams::trigonometric(l, c(0.3, 0.1)).with_twists(c(1.1, 0.0), c(0.8, 0.0)),
            generic_rational(l),
            generic_trig(l),
        ];
        for p in twisted {
            for n in 0..=l {
                let d = closest_shared_zero(&p, n);
                assert!(d > 1e-6, "L={l} n={n} {:?}: shared zero at distance {d:e}", p.family);
            }
        }
    }
}

#[test]
fn untwisted_homogeneous_chain_shares_zeroes_at_l5() {
    // φ₁ = φ₂, μ = 0: up to L = 4 no zero is shared, at L = 5 two curves in
    // sectors 2 and 3 vanish together at the crossing point x = -1/2.
    for l in 1..=4 {
        for n in 0..=l {
            assert!(closest_shared_zero(&ModelParams::rational(l), n) > 1e-6);
            assert!(closest_shared_zero(&ModelParams::trigonometric(l, c(0.3, 0.1)), n) > 1e-6);
        }
    }
    for n in [2, 3] {
        assert!(closest_shared_zero(&ModelParams::rational(5), n) < 1e-12);
        let curves = diagonalize_sector(&ModelParams::rational(5), n).unwrap();
        let at_crossing = curves.iter().filter(|cv| cv.eval(c(-0.5, 0.0)).norm() < 1e-10 * cv.curve.max_coeff()).count();
        assert_eq!(at_crossing, 2, "n={n}");
    }
    for n in [1, 4] {
        assert!(closest_shared_zero(&ModelParams::rational(5), n) > 1e-6);
    }
}

#[test]
fn stored_zeroes_are_zeroes() {
    for l in 1..=5 {
        for p in params(l) {
            for n in 0..=l {
                for cv in diagonalize_sector(&p, n).unwrap() {
                    for &u in &cv.zeroes {
                        let rel = cv.eval(u).norm() / cv.curve.abs_scale(u);
                        assert!(rel < 1e-10, "L={l} n={n}: {rel:e}");
                    }
                }
            }
        }
    }
}

fn arb_c(w: f64) -> impl Strategy<Value = C64> {
    (-w..w, -w..w).prop_map(|(re, im)| c(re, im))
}

fn arb_params() -> impl Strategy<Value = ModelParams> {
    (1usize..=4, any::<bool>(), arb_c(0.4), arb_c(0.4), prop::collection::vec(arb_c(0.1), 4), arb_c(0.2)).prop_map(
        |(l, trig, dp1, dp2, mu, dg)| {
            let base = if trig { ModelParams::trigonometric(l, c(0.3, 0.1) + dg) } else { ModelParams::rational(l) };
            base.with_twists(c(1.0, 0.0) + dp1, c(1.0, 0.0) + dp2).with_mu(mu[..l].to_vec())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn transfer_matrices_commute(p in arb_params(), x in arb_c(1.0), y in arb_c(1.0)) {
        let tx = kron_transfer(&p, x);
        let ty = kron_transfer(&p, y);
        let comm = (&tx * &ty - &ty * &tx).norm() / (tx.norm() * ty.norm());
        prop_assert!(comm < 1e-10, "{comm:e}");
    }

    #[test]
    fn sector_traces_add_up(p in arb_params(), x in arb_c(1.0)) {
        let full = full_transfer_matrix(&p, x);
        let total: C64 = (0..=p.l).map(|n| {
            let m = build_sector_matrix(&p, n, x).unwrap().matrix;
            (0..m.rows).map(|i| m[(i, i)]).sum::<C64>()
        }).sum();
        let tr: C64 = (0..full.rows).map(|i| full[(i, i)]).sum();
        prop_assert!((total - tr).norm() <= 1e-12 * full.frobenius());
    }

    #[test]
    fn eigenvalue_curves_satisfy_trace_identity(p in arb_params(), x in arb_c(0.8)) {
        let spectrum = full_spectrum(&p).unwrap();
        let sum: C64 = spectrum.iter().flatten().map(|cv| cv.eval(x)).sum();
        let tr = kron_transfer(&p, x).trace();
        let scale: f64 = spectrum.iter().flatten().map(|cv| cv.eval(x).norm()).sum();
        prop_assert!((sum - tr).norm() / scale < 1e-9);
    }
}

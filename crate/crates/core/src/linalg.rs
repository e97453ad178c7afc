//! Small dense complex linear algebra: LU, least squares, Hessenberg/QR Schur
//! decomposition and eigenvectors. Sizes here never exceed a few dozen rows.

use crate::error::{Error, Result};
use num_complex::Complex64 as C64;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<C64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![C64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.data[k * other.cols + j];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn adjoint(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: C64) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * s).collect() }
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Submatrix keeping the listed rows and columns, in order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    pub fn det(&self) -> C64 {
        assert!(self.is_square());
        if self.rows == 0 {
            return C64::new(1.0, 0.0);
        }
        match Lu::new(self) {
            Ok(lu) => lu.det(),
            Err(_) => C64::new(0.0, 0.0),
        }
    }

    pub fn inverse(&self) -> Result<Mat> {
        let lu = Lu::new(self)?;
        let n = self.rows;
        let mut inv = Mat::zeros(n, n);
        for j in 0..n {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            let x = lu.solve(&e);
            for i in 0..n {
                inv[(i, j)] = x[i];
            }
        }
        Ok(inv)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

pub fn norm2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn dot(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// LU factorization with partial pivoting.
#[derive(Debug, Clone)]
pub struct Lu {
    lu: Mat,
    perm: Vec<usize>,
    sign: f64,
}

impl Lu {
    pub fn new(a: &Mat) -> Result<Self> {
        assert!(a.is_square());
        let n = a.rows;
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = 1.0;
        for k in 0..n {
            let (p, pmax) = (k..n)
                .map(|i| (i, lu[(i, k)].norm()))
                .fold((k, -1.0), |acc, v| if v.1 > acc.1 { v } else { acc });
            if pmax == 0.0 {
                return Err(Error::Singular(format!("zero pivot in column {k}")));
            }
            if p != k {
                for j in 0..n {
                    lu.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let piv = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / piv;
                lu[(i, k)] = f;
                for j in k + 1..n {
                    let t = lu[(k, j)];
                    lu[(i, j)] -= f * t;
                }
            }
        }
        Ok(Lu { lu, perm, sign })
    }

    pub fn det(&self) -> C64 {
        let n = self.lu.rows;
        (0..n).fold(C64::new(self.sign, 0.0), |acc, i| acc * self.lu[(i, i)])
    }

    pub fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.lu.rows;
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let t = self.lu[(i, j)] * x[j];
                x[i] -= t;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let t = self.lu[(i, j)] * x[j];
                x[i] -= t;
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }

    /// Smallest |pivot| over largest |pivot|; a cheap conditioning proxy.
    pub fn pivot_ratio(&self) -> f64 {
        let d: Vec<f64> = (0..self.lu.rows).map(|i| self.lu[(i, i)].norm()).collect();
        let max = d.iter().cloned().fold(0.0, f64::max);
        let min = d.iter().cloned().fold(f64::INFINITY, f64::min);
        if max == 0.0 { 0.0 } else { min / max }
    }
}

pub fn solve(a: &Mat, b: &[C64]) -> Result<Vec<C64>> {
    Ok(Lu::new(a)?.solve(b))
}

/// Least-squares solution of an overdetermined system via Householder QR.
/// Returns the solution and the residual 2-norm.
pub fn lstsq(a: &Mat, b: &[C64]) -> Result<(Vec<C64>, f64)> {
    let (m, n) = (a.rows, a.cols);
    if m < n {
        return Err(Error::InvalidArgument(format!("lstsq needs rows >= cols, got {m}x{n}")));
    }
    let mut r = a.clone();
    let mut y = b.to_vec();
    let scale = a.frobenius().max(f64::MIN_POSITIVE);
    for k in 0..n {
        let alpha_norm = (k..m).map(|i| r[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm <= 1e-14 * scale {
            return Err(Error::Singular(format!("rank-deficient column {k} in least squares")));
        }
        let x0 = r[(k, k)];
        let phase = if x0.norm() == 0.0 { C64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let mut v: Vec<C64> = (k..m).map(|i| r[(i, k)]).collect();
        v[0] += phase * alpha_norm;
        let vn = norm2(&v);
        for z in v.iter_mut() {
            *z /= vn;
        }
        for j in k..n {
            let s: C64 = (k..m).map(|i| v[i - k].conj() * r[(i, j)]).sum();
            for i in k..m {
                let t = v[i - k] * s * 2.0;
                r[(i, j)] -= t;
            }
        }
        let s: C64 = (k..m).map(|i| v[i - k].conj() * y[i]).sum();
        for i in k..m {
            y[i] -= v[i - k] * s * 2.0;
        }
    }
    let mut x = vec![C64::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let mut s = y[i];
        for j in i + 1..n {
            s -= r[(i, j)] * x[j];
        }
        x[i] = s / r[(i, i)];
    }
    let res = y[n..].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    Ok((x, res))
}

fn givens(a: C64, b: C64) -> (f64, C64) {
    let an = a.norm();
    let nrm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    if nrm == 0.0 {
        return (1.0, C64::new(0.0, 0.0));
    }
    if an == 0.0 {
        return (0.0, C64::new(1.0, 0.0));
    }
    (an / nrm, (a / an) * b.conj() / nrm)
}

/// Reduce to upper Hessenberg form: returns (H, Q) with A = Q H Q*.
pub fn hessenberg(a: &Mat) -> (Mat, Mat) {
    assert!(a.is_square());
    let n = a.rows;
    let mut h = a.clone();
    let mut q = Mat::identity(n);
    for k in 0..n.saturating_sub(2) {
        let alpha_norm = (k + 1..n).map(|i| h[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { C64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let mut v: Vec<C64> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] += phase * alpha_norm;
        let vn = norm2(&v);
        if vn == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vn;
        }
        // H <- P H P with P = I - 2 v v*
        for j in 0..n {
            let s: C64 = (k + 1..n).map(|i| v[i - k - 1].conj() * h[(i, j)]).sum();
            for i in k + 1..n {
                let t = v[i - k - 1] * s * 2.0;
                h[(i, j)] -= t;
            }
        }
        for i in 0..n {
            let s: C64 = (k + 1..n).map(|j| h[(i, j)] * v[j - k - 1]).sum();
            for j in k + 1..n {
                let t = s * v[j - k - 1].conj() * 2.0;
                h[(i, j)] -= t;
            }
        }
        for i in 0..n {
            let s: C64 = (k + 1..n).map(|j| q[(i, j)] * v[j - k - 1]).sum();
            for j in k + 1..n {
                let t = s * v[j - k - 1].conj() * 2.0;
                q[(i, j)] -= t;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = C64::new(0.0, 0.0);
        }
    }
    (h, q)
}

/// Complex Schur decomposition A = Q T Q* by shifted QR on the Hessenberg form.
pub fn schur(a: &Mat) -> Result<(Mat, Mat)> {
    let n = a.rows;
    let (mut t, mut q) = hessenberg(a);
    if n <= 1 {
        return Ok((t, q));
    }
    let eps = f64::EPSILON;
    let anorm = t.frobenius().max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut iter = 0usize;
    let max_iter = 60 * n;
    let mut total = 0usize;
    while hi > 0 {
        // locate the active window [lo, hi]
        let mut lo = hi;
        while lo > 0 {
            let s = t[(lo - 1, lo - 1)].norm() + t[(lo, lo)].norm();
            let s = if s == 0.0 { anorm } else { s };
            if t[(lo, lo - 1)].norm() <= eps * s {
                t[(lo, lo - 1)] = C64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        total += 1;
        if total > max_iter {
            return Err(Error::EigenNonConvergence { iterations: total });
        }
        // Wilkinson shift from the trailing 2x2 block
        let a11 = t[(hi - 1, hi - 1)];
        let a12 = t[(hi - 1, hi)];
        let a21 = t[(hi, hi - 1)];
        let a22 = t[(hi, hi)];
        let mut shift = {
            let tr = a11 + a22;
            let det = a11 * a22 - a12 * a21;
            let disc = (tr * tr * 0.25 - det).sqrt();
            let l1 = tr * 0.5 + disc;
            let l2 = tr * 0.5 - disc;
            if (l1 - a22).norm() < (l2 - a22).norm() { l1 } else { l2 }
        };
        if iter % 11 == 10 {
            // exceptional shift
            shift = a22 + C64::new(t[(hi, hi - 1)].norm() * 0.75, 0.0);
        }
        for k in lo..=hi {
            t[(k, k)] -= shift;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(t[(k, k)], t[(k + 1, k)]);
            rots.push((c, s));
            for j in k..n {
                let x = t[(k, j)];
                let y = t[(k + 1, j)];
                t[(k, j)] = x * c + s * y;
                t[(k + 1, j)] = -s.conj() * x + y * c;
            }
        }
        for (idx, &(c, s)) in rots.iter().enumerate() {
            let k = lo + idx;
            let rmax = (k + 2).min(hi);
            for i in 0..=rmax {
                let x = t[(i, k)];
                let y = t[(i, k + 1)];
                t[(i, k)] = x * c + s.conj() * y;
                t[(i, k + 1)] = -s * x + y * c;
            }
            for i in 0..n {
                let x = q[(i, k)];
                let y = q[(i, k + 1)];
                q[(i, k)] = x * c + s.conj() * y;
                q[(i, k + 1)] = -s * x + y * c;
            }
        }
        for k in lo..=hi {
            t[(k, k)] += shift;
        }
    }
    for i in 0..n {
        for j in 0..i {
            t[(i, j)] = C64::new(0.0, 0.0);
        }
    }
    Ok((t, q))
}

pub fn eigenvalues(a: &Mat) -> Result<Vec<C64>> {
    let (t, _) = schur(a)?;
    Ok((0..a.rows).map(|i| t[(i, i)]).collect())
}

/// Eigenvalues and right eigenvectors (columns of the returned matrix) from
/// the Schur form by triangular back-substitution. Near-coincident
/// eigenvalues give ill-conditioned vectors; callers check that themselves.
pub fn eig(a: &Mat) -> Result<(Vec<C64>, Mat)> {
    let n = a.rows;
    let (t, q) = schur(a)?;
    let vals: Vec<C64> = (0..n).map(|i| t[(i, i)]).collect();
    let small = f64::EPSILON * t.frobenius().max(f64::MIN_POSITIVE);
    let mut y = Mat::zeros(n, n);
    for k in 0..n {
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[k] = C64::new(1.0, 0.0);
        for j in (0..k).rev() {
            let s: C64 = (j + 1..=k).map(|m| t[(j, m)] * v[m]).sum();
            let mut d = t[(j, j)] - vals[k];
            if d.norm() < small {
                d = C64::new(small, 0.0);
            }
            v[j] = -s / d;
        }
        for i in 0..n {
            y[(i, k)] = v[i];
        }
    }
    let mut vecs = q.matmul(&y);
    for k in 0..n {
        let nrm = norm2(&vecs.col(k));
        for i in 0..n {
            vecs[(i, k)] /= nrm;
        }
    }
    Ok((vals, vecs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn sample(n: usize, seed: u64) -> Mat {
        let mut s = seed;
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        Mat::from_fn(n, n, |_, _| c(next(), next()))
    }

    #[test]
    fn lu_solves_and_inverts() {
        let a = sample(6, 3);
        let inv = a.inverse().unwrap();
        let id = a.matmul(&inv);
        assert!(id.sub(&Mat::identity(6)).frobenius() < 1e-12);
    }

    #[test]
    fn det_of_triangular_is_diagonal_product() {
        let mut a = Mat::identity(3);
        a[(0, 0)] = c(2.0, 0.0);
        a[(1, 2)] = c(5.0, 1.0);
        a[(2, 2)] = c(0.0, 3.0);
        assert!((a.det() - c(0.0, 6.0)).norm() < 1e-14);
    }

    #[test]
    fn schur_reconstructs() {
        for n in [1, 2, 5, 12, 20] {
            let a = sample(n, n as u64);
            let (t, q) = schur(&a).unwrap();
            let back = q.matmul(&t).matmul(&q.adjoint());
            assert!(back.sub(&a).frobenius() < 1e-12 * a.frobenius().max(1.0), "n={n}");
            assert!(q.adjoint().matmul(&q).sub(&Mat::identity(n)).frobenius() < 1e-12);
        }
    }

    #[test]
    fn eigenvectors_satisfy_definition() {
        let a = sample(10, 99);
        let (vals, vecs) = eig(&a).unwrap();
        for k in 0..10 {
            let v = vecs.col(k);
            let av = a.matvec(&v);
            let r: Vec<C64> = av.iter().zip(&v).map(|(x, y)| x - vals[k] * y).collect();
            assert!(norm2(&r) < 1e-11 * a.frobenius());
        }
    }

    #[test]
    fn lstsq_recovers_exact_solution() {
        let a = Mat::from_fn(7, 3, |i, j| c((i as f64 + 1.0).powi(j as i32), 0.1 * j as f64));
        let x = vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0)];
        let b = a.matvec(&x);
        let (sol, res) = lstsq(&a, &b).unwrap();
        assert!(res < 1e-10);
        for (p, q) in sol.iter().zip(&x) {
            assert!((p - q).norm() < 1e-10);
        }
    }
}

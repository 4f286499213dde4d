use alloc::vec;
use alloc::vec::Vec;

use crate::real::Real;

/// Row-major real matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<T>,
}

impl<T: Real> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                row.iter().zip(x).fold(T::zero(), |s, (&a, &b)| s + a * b)
            })
            .collect()
    }
}

/// Householder QR of a tall matrix, `A = Q R`, with `Q` kept as reflectors.
pub struct Householder<T> {
    m: usize,
    n: usize,
    /// Column `k` holds the reflector for step `k` below the diagonal (inclusive).
    v: Vec<Vec<T>>,
    r: Mat<T>,
}

impl<T: Real> Householder<T> {
    pub fn new(a: &Mat<T>) -> Self {
        let (m, n) = (a.rows, a.cols);
        assert!(m >= n, "Householder QR needs rows >= cols");
        let mut r = a.clone();
        let mut vs = Vec::with_capacity(n);
        for k in 0..n {
            let mut norm = T::zero();
            for i in k..m {
                norm += r.get(i, k) * r.get(i, k);
            }
            let norm = norm.sqrt();
            let mut v: Vec<T> = (k..m).map(|i| r.get(i, k)).collect();
            if norm.is_zero() {
                vs.push(v.iter().map(|_| T::zero()).collect());
                continue;
            }
            let alpha = if v[0] < T::zero() { norm } else { -norm };
            v[0] -= alpha;
            let vn = v.iter().fold(T::zero(), |s, &x| s + x * x);
            if vn.is_zero() {
                vs.push(v.iter().map(|_| T::zero()).collect());
                continue;
            }
            for j in k..n {
                let mut d = T::zero();
                for i in k..m {
                    d += v[i - k] * r.get(i, j);
                }
                let f = (d + d) / vn;
                for i in k..m {
                    let x = r.get(i, j) - f * v[i - k];
                    r.set(i, j, x);
                }
            }
            // normalise so that applying is `x -= 2 v (v.x)`
            let s = vn.sqrt();
            vs.push(v.into_iter().map(|x| x / s).collect());
        }
        Householder { m, n, v: vs, r }
    }

    fn reflect(&self, k: usize, x: &mut [T]) {
        let v = &self.v[k];
        let mut d = T::zero();
        for i in k..self.m {
            d += v[i - k] * x[i];
        }
        let d2 = d + d;
        for i in k..self.m {
            x[i] -= d2 * v[i - k];
        }
    }

    pub fn apply_qt(&self, x: &mut [T]) {
        for k in 0..self.n {
            self.reflect(k, x);
        }
    }

    pub fn apply_q(&self, x: &mut [T]) {
        for k in (0..self.n).rev() {
            self.reflect(k, x);
        }
    }

    pub fn r_diag(&self, i: usize) -> T {
        self.r.get(i, i)
    }

    /// Least-squares solution; columns whose pivot is below `tol` times the
    /// largest pivot are dropped (set to zero).
    pub fn solve(&self, b: &[T], tol: T) -> Vec<T> {
        let mut y = b.to_vec();
        self.apply_qt(&mut y);
        let n = self.n;
        let rmax = (0..n).fold(T::zero(), |m, i| m.max(self.r.get(i, i).abs()));
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let d = self.r.get(i, i);
            if d.abs() <= tol * rmax || d.is_zero() {
                continue;
            }
            let mut s = y[i];
            for j in i + 1..n {
                s -= self.r.get(i, j) * x[j];
            }
            x[i] = s / d;
        }
        x
    }
}

/// Minimise `|A x - b|`; `A` must have at least as many rows as columns.
pub fn lstsq<T: Real>(a: &Mat<T>, b: &[T]) -> Vec<T> {
    Householder::new(a).solve(b, T::epsilon())
}

/// Orthonormal basis (as columns of an `n x (n - p)` matrix) of the null
/// space of a full-row-rank `p x n` matrix with `p < n`.
pub fn null_space<T: Real>(a: &Mat<T>) -> Mat<T> {
    let (p, n) = (a.rows, a.cols);
    assert!(p < n);
    let qr = Householder::new(&a.transpose());
    let mut out = Mat::zeros(n, n - p);
    for j in p..n {
        let mut e = vec![T::zero(); n];
        e[j] = T::one();
        qr.apply_q(&mut e);
        for i in 0..n {
            out.set(i, j - p, e[i]);
        }
    }
    out
}

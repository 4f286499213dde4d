use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

pub use num_complex::Complex;
use num_traits::{One, Zero};

use crate::real::Real;

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<T> {
    n: usize,
    data: Vec<Complex<T>>,
}

#[inline]
pub fn cabs<T: Real>(z: Complex<T>) -> T {
    z.norm_sqr().sqrt()
}

impl<T: Real> CMatrix<T> {
    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![Complex::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        CMatrix { n, data }
    }

    pub fn from_real(n: usize, f: impl Fn(usize, usize) -> T) -> Self {
        Self::from_fn(n, |i, j| Complex::new(f(i, j), T::zero()))
    }

    pub fn diagonal(d: &[Complex<T>]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|&x| x * s).collect(),
        }
    }

    /// Multiply column `j` by `d[j]` in place, i.e. `self * diag(d)`.
    pub fn scale_columns(&mut self, d: &[Complex<T>]) {
        let n = self.n;
        for row in self.data.chunks_mut(n) {
            for (x, &s) in row.iter_mut().zip(d) {
                *x = *x * s;
            }
        }
    }

    pub fn matmul(&self, b: &Self) -> Self {
        assert_eq!(self.n, b.n, "dimension mismatch");
        let n = self.n;
        let mut out = vec![Complex::zero(); n * n];
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let orow = &mut out[i * n..(i + 1) * n];
            for (k, &a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let brow = &b.data[k * n..(k + 1) * n];
                for (o, &bb) in orow.iter_mut().zip(brow) {
                    *o = *o + a * bb;
                }
            }
        }
        CMatrix { n, data: out }
    }

    pub fn mul_vec(&self, x: &[Complex<T>]) -> Vec<Complex<T>> {
        let n = self.n;
        (0..n)
            .map(|i| {
                self.data[i * n..(i + 1) * n]
                    .iter()
                    .zip(x)
                    .fold(Complex::zero(), |s, (&a, &b)| s + a * b)
            })
            .collect()
    }

    pub fn frobenius_norm(&self) -> T {
        self.data.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt()
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().fold(T::zero(), |m, &z| m.max(cabs(z)))
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        let n = self.n;
        (0..n).all(|i| (i..n).all(|j| cabs(self[(i, j)] - self[(j, i)].conj()) <= tol))
    }

    /// Largest singular value.
    pub fn spectral_norm(&self) -> T {
        let g = self.adjoint().matmul(self);
        let e = HermitianEigen::new(&g);
        e.values.iter().fold(T::zero(), |m, &x| m.max(x)).max(T::zero()).sqrt()
    }

    pub fn power(&self, r: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.n);
        let mut e = r;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.matmul(&base);
            }
        }
        acc
    }

    /// Solve `self x = b` by LU with partial pivoting. `None` if a pivot
    /// vanishes exactly.
    pub fn solve(&self, b: &[Complex<T>]) -> Option<Vec<Complex<T>>> {
        let n = self.n;
        let mut a = self.data.clone();
        let mut x = b.to_vec();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| {
                    a[i * n + k]
                        .norm_sqr()
                        .partial_cmp(&a[j * n + k].norm_sqr())
                        .unwrap_or(core::cmp::Ordering::Equal)
                })
                .unwrap();
            if a[p * n + k].is_zero() {
                return None;
            }
            if p != k {
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                x.swap(k, p);
            }
            let piv = a[k * n + k];
            for i in k + 1..n {
                let f = a[i * n + k] / piv;
                if f.is_zero() {
                    continue;
                }
                for j in k..n {
                    let t = a[k * n + j];
                    a[i * n + j] = a[i * n + j] - f * t;
                }
                let t = x[k];
                x[i] = x[i] - f * t;
            }
        }
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s = s - a[i * n + j] * x[j];
            }
            x[i] = s / a[i * n + i];
        }
        Some(x)
    }

    pub fn convert<U: Real>(&self) -> CMatrix<U> {
        CMatrix {
            n: self.n,
            data: self
                .data
                .iter()
                .map(|z| Complex::new(crate::real::convert(z.re), crate::real::convert(z.im)))
                .collect(),
        }
    }
}

impl<T> core::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = Complex<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.n + j]
    }
}

impl<T> core::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.n + j]
    }
}

impl<T: Real> Add for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn add(self, o: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| a + b).collect(),
        }
    }
}

impl<T: Real> Sub for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn sub(self, o: &CMatrix<T>) -> CMatrix<T> {
        assert_eq!(self.n, o.n, "dimension mismatch");
        CMatrix {
            n: self.n,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| a - b).collect(),
        }
    }
}

impl<T: Real> Mul for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, o: &CMatrix<T>) -> CMatrix<T> {
        self.matmul(o)
    }
}

/// Eigendecomposition `A = V diag(values) V†` of a Hermitian matrix by
/// cyclic complex Jacobi rotations.
#[derive(Debug, Clone)]
pub struct HermitianEigen<T> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
}

impl<T: Real> HermitianEigen<T> {
    pub fn new(a: &CMatrix<T>) -> Self {
        let n = a.n;
        let mut a = a.clone();
        let mut v = CMatrix::identity(n);
        let scale = a.frobenius_norm();
        let zero = T::zero();
        if scale.is_zero() {
            return HermitianEigen {
                values: vec![zero; n],
                vectors: v,
            };
        }
        let tiny = T::epsilon() * T::epsilon() * scale * scale;
        for _sweep in 0..60 {
            let mut off = zero;
            for p in 0..n {
                for q in p + 1..n {
                    off += a[(p, q)].norm_sqr();
                }
            }
            if off <= tiny {
                break;
            }
            for p in 0..n {
                for q in p + 1..n {
                    let apq = a[(p, q)];
                    let mag2 = apq.norm_sqr();
                    if mag2 <= tiny / T::from_i64((n * n) as i64) {
                        continue;
                    }
                    let mag = mag2.sqrt();
                    let e = Complex::new(apq.re / mag, apq.im / mag);
                    let ec = e.conj();
                    let (app, aqq) = (a[(p, p)].re, a[(q, q)].re);
                    let theta = (aqq - app) / (mag + mag);
                    let t = {
                        let d = theta.abs() + (theta * theta + T::one()).sqrt();
                        if theta < zero {
                            -T::one() / d
                        } else {
                            T::one() / d
                        }
                    };
                    let c = T::one() / (t * t + T::one()).sqrt();
                    let s = t * c;
                    let (cc, sc) = (Complex::new(c, zero), Complex::new(s, zero));
                    // columns: A J
                    for i in 0..n {
                        let (xp, xq) = (a[(i, p)], a[(i, q)]);
                        a[(i, p)] = cc * xp - sc * ec * xq;
                        a[(i, q)] = sc * xp + cc * ec * xq;
                        let (vp, vq) = (v[(i, p)], v[(i, q)]);
                        v[(i, p)] = cc * vp - sc * ec * vq;
                        v[(i, q)] = sc * vp + cc * ec * vq;
                    }
                    // rows: J† (A J)
                    for j in 0..n {
                        let (xp, xq) = (a[(p, j)], a[(q, j)]);
                        a[(p, j)] = cc * xp - sc * e * xq;
                        a[(q, j)] = sc * xp + cc * e * xq;
                    }
                    a[(p, q)] = Complex::zero();
                    a[(q, p)] = Complex::zero();
                    a[(p, p)] = Complex::new(a[(p, p)].re, zero);
                    a[(q, q)] = Complex::new(a[(q, q)].re, zero);
                }
            }
        }
        HermitianEigen {
            values: (0..n).map(|i| a[(i, i)].re).collect(),
            vectors: v,
        }
    }

    /// `V diag(f(λ)) V†`.
    pub fn apply_fn(&self, f: impl Fn(T) -> Complex<T>) -> CMatrix<T> {
        let d: Vec<Complex<T>> = self.values.iter().map(|&l| f(l)).collect();
        let mut vd = self.vectors.clone();
        vd.scale_columns(&d);
        vd.matmul(&self.vectors.adjoint())
    }

    /// `exp(-i c A)`.
    pub fn exp_i(&self, c: T) -> CMatrix<T> {
        self.apply_fn(|l| phase(-(c * l)))
    }
}

/// `e^{i x}`.
#[inline]
pub fn phase<T: Real>(x: T) -> Complex<T> {
    let (s, c) = x.sin_cos();
    Complex::new(c, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn eigen_of_pauli_y() {
        let y = CMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 1) => c(0.0, -1.0),
            (1, 0) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        });
        let e = HermitianEigen::new(&y);
        let mut vals = e.values.clone();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((vals[0] + 1.0).abs() < 1e-15 && (vals[1] - 1.0).abs() < 1e-15);
        let back = e.apply_fn(|l| c(l, 0.0));
        assert!((&back - &y).max_abs() < 1e-15);
    }

    #[test]
    fn random_hermitian_reconstructs() {
        let n = 5;
        let a = CMatrix::from_fn(n, |i, j| {
            let (x, y) = ((i * 7 + j * 3) as f64 * 0.37, (i * 2 + j * 5) as f64 * 0.11);
            if i == j {
                c(x.sin(), 0.0)
            } else if i < j {
                c(x.cos(), y.sin())
            } else {
                let (x, y) = ((j * 7 + i * 3) as f64 * 0.37, (j * 2 + i * 5) as f64 * 0.11);
                c(x.cos(), -y.sin())
            }
        });
        assert!(a.is_hermitian(0.0));
        let e = HermitianEigen::new(&a);
        let back = e.apply_fn(|l| c(l, 0.0));
        assert!((&back - &a).max_abs() < 1e-13);
        let u = e.exp_i(0.3);
        assert!((&u.adjoint().matmul(&u) - &CMatrix::identity(n)).max_abs() < 1e-14);
    }

    #[test]
    fn lu_solve_and_norms() {
        let a = CMatrix::from_fn(2, |i, j| [[c(0.0, 0.0), c(2.0, 1.0)], [c(1.0, 0.0), c(1.0, -1.0)]][i][j]);
        let b = [c(1.0, 0.0), c(0.0, 2.0)];
        let x = a.solve(&b).unwrap();
        let r = a.mul_vec(&x);
        assert!((r[0] - b[0]).norm_sqr() < 1e-30 && (r[1] - b[1]).norm_sqr() < 1e-30);
        let d = CMatrix::diagonal(&[c(3.0, 0.0), c(0.0, -4.0)]);
        assert!((d.spectral_norm() - 4.0).abs() < 1e-14);
        assert!((d.power(3)[(1, 1)] - c(0.0, 64.0)).norm_sqr() < 1e-24);
    }
}

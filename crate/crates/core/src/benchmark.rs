//! Error of a product formula on concrete Hermitian matrices: spectral-norm
//! error, eigenvalue and basis error, order slopes, and leading constants
//! aggregated over random ensembles.
//!
//! All unitaries are built in the eigenbasis of the total Hamiltonian `H`.
//! Each term `A_a = V_a Λ_a V_a†` is diagonalised once and a product of
//! exponentials is accumulated as `V_H† V_a1 D_1 V_a1† V_a2 D_2 .. V_H`, one
//! matrix product per exponential. The exact evolution is then diagonal.

use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::formulas::ExponentialSequence;
use crate::linalg::{cabs, phase, CMatrix, Complex, HermitianEigen};
use crate::real::Real;

/// Ensemble label recorded in output metadata.
pub const ENSEMBLE: &str = "hermitised complex Ginibre (G+G^dag)/2, unit spectral norm";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomPairSpec {
    pub dim: usize,
    pub count: usize,
    pub seed: u64,
}

impl Default for RandomPairSpec {
    fn default() -> Self {
        RandomPairSpec {
            dim: 6,
            count: 1000,
            seed: 0,
        }
    }
}

impl RandomPairSpec {
    pub fn validate(&self) -> Result<()> {
        if self.dim < 2 {
            return Err(Error::InvalidArgument("matrix dimension must be at least 2"));
        }
        if self.count == 0 {
            return Err(Error::InvalidArgument("sample count must be positive"));
        }
        Ok(())
    }

    /// The `index`-th pair `(A, B)`. Each index has its own random stream,
    /// so samples do not depend on how many are drawn or in what order.
    pub fn pair(&self, index: usize) -> (CMatrix<f64>, CMatrix<f64>) {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        let a = random_hermitian(self.dim, &mut rng);
        let b = random_hermitian(self.dim, &mut rng);
        (a, b)
    }
}

/// `(G + G†)/2` for complex Ginibre `G`, scaled to unit spectral norm.
pub fn random_hermitian<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix<f64> {
    let mut g = CMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            g[(i, j)] = Complex::new(re, im);
        }
    }
    let mut h = CMatrix::zeros(n);
    for i in 0..n {
        h[(i, i)] = Complex::new(g[(i, i)].re, 0.0);
        for j in i + 1..n {
            let z = (g[(i, j)] + g[(j, i)].conj()) * 0.5;
            h[(i, j)] = z;
            h[(j, i)] = z.conj();
        }
    }
    let s = h.spectral_norm();
    h.scale(Complex::new(1.0 / s, 0.0))
}

/// Terms of a Hamiltonian, diagonalised, with the basis overlaps needed to
/// chain exponentials.
#[derive(Debug, Clone)]
pub struct Hamiltonian<T> {
    terms: Vec<HermitianEigen<T>>,
    total: HermitianEigen<T>,
    // overlap[a][b] = V_a† V_b; index `terms.len()` is the total
    overlap: Vec<Vec<CMatrix<T>>>,
}

impl<T: Real> Hamiltonian<T> {
    pub fn new(terms: &[CMatrix<T>]) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidArgument("need at least one term"));
        }
        let n = terms[0].dim();
        let tol = T::epsilon() * T::from_f64(64.0);
        let mut sum = CMatrix::zeros(n);
        for t in terms {
            if t.dim() != n {
                return Err(Error::DimensionMismatch(t.dim(), n));
            }
            if !t.is_hermitian(tol * t.max_abs().max(T::one())) {
                return Err(Error::InvalidArgument("terms must be Hermitian"));
            }
            sum = &sum + t;
        }
        let eig: Vec<HermitianEigen<T>> = terms.iter().map(HermitianEigen::new).collect();
        let total = HermitianEigen::new(&sum);
        let bases: Vec<&CMatrix<T>> = eig.iter().map(|e| &e.vectors).chain([&total.vectors]).collect();
        let overlap = bases
            .iter()
            .map(|a| {
                let ad = a.adjoint();
                bases.iter().map(|b| ad.matmul(b)).collect()
            })
            .collect();
        Ok(Hamiltonian {
            terms: eig,
            total,
            overlap,
        })
    }

    pub fn pair(a: &CMatrix<T>, b: &CMatrix<T>) -> Result<Self> {
        Self::new(&[a.clone(), b.clone()])
    }

    pub fn dim(&self) -> usize {
        self.total.values.len()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Eigenvalues of the total Hamiltonian, in the order used by [`Propagator`].
    pub fn total_spectrum(&self) -> &[T] {
        &self.total.values
    }

    /// Apply the sequence with every coefficient multiplied by `t`.
    pub fn evolve(&self, seq: &ExponentialSequence<T>, t: T) -> Result<Propagator<T>> {
        if seq.terms() != self.terms.len() {
            return Err(Error::DimensionMismatch(seq.terms(), self.terms.len()));
        }
        let h = self.terms.len();
        let mut cache: Vec<(usize, T, Vec<Complex<T>>)> = Vec::new();
        let mut m: Option<CMatrix<T>> = None;
        let mut last = h;
        for &(a, c) in seq.ops() {
            let d = match cache.iter().find(|e| e.0 == a && e.1 == c) {
                Some(e) => e.2.clone(),
                None => {
                    let d: Vec<Complex<T>> = self.terms[a].values.iter().map(|&l| phase(-(c * t * l))).collect();
                    cache.push((a, c, d.clone()));
                    d
                }
            };
            let mut next = match m {
                None => self.overlap[h][a].clone(),
                Some(prev) => prev.matmul(&self.overlap[last][a]),
            };
            next.scale_columns(&d);
            m = Some(next);
            last = a;
        }
        let w = match m {
            None => CMatrix::identity(self.dim()),
            Some(prev) => prev.matmul(&self.overlap[last][h]),
        };
        let exact = self.total.values.iter().map(|&l| phase(-(t * l))).collect();
        Ok(Propagator { w, exact })
    }

    /// `exp(-i H t)` in the original basis.
    pub fn exact(&self, t: T) -> CMatrix<T> {
        self.total.exp_i(t)
    }

    /// Map a matrix from the eigenbasis of `H` back to the original basis.
    pub fn from_eigenbasis(&self, m: &CMatrix<T>) -> CMatrix<T> {
        let v = &self.total.vectors;
        v.matmul(m).matmul(&v.adjoint())
    }
}

/// A formula's unitary `W` and the exact phases `e^{-iλt}`, both in the
/// eigenbasis of `H`.
#[derive(Debug, Clone)]
pub struct Propagator<T> {
    pub w: CMatrix<T>,
    pub exact: Vec<Complex<T>>,
}

/// `Ũ = V D V†` relative to the exact evolution.
#[derive(Debug, Clone)]
pub struct EigenSplit<T> {
    /// Eigenvalues of `Ũ`, entry `j` paired with exact eigenvalue `j`.
    pub values: Vec<Complex<T>>,
    /// Eigenvectors as columns, phase aligned, in the eigenbasis of `H`.
    pub vectors: CMatrix<T>,
    /// `max_j |λ̃_j - λ_j|`.
    pub eigen_error: T,
    /// `‖V - I‖`.
    pub basis_error: T,
}

const PAIRING_THRESHOLD: f64 = 0.9;

impl<T: Real> Propagator<T> {
    pub fn exact_matrix(&self) -> CMatrix<T> {
        CMatrix::diagonal(&self.exact)
    }

    /// `‖W - diag(e^{-iλt})‖`, largest singular value.
    pub fn spectral_error(&self) -> T {
        let mut e = self.w.clone();
        for (i, &z) in self.exact.iter().enumerate() {
            e[(i, i)] = e[(i, i)] - z;
        }
        e.spectral_norm()
    }

    /// Diagonalise `W` by Rayleigh-quotient iteration started from each
    /// exact eigenvector and pair by overlap. `None` when the overlaps are
    /// not close to a permutation.
    pub fn eigen_split(&self) -> Option<EigenSplit<T>> {
        let n = self.exact.len();
        let w = &self.w;
        let mut vals = Vec::with_capacity(n);
        let mut vecs: Vec<Vec<Complex<T>>> = Vec::with_capacity(n);
        let tol = T::epsilon() * T::from_f64(16.0 * n as f64);
        for j in 0..n {
            let mut x = vec![Complex::new(T::zero(), T::zero()); n];
            x[j] = Complex::new(T::one(), T::zero());
            let mut mu = w[(j, j)];
            for _ in 0..30 {
                let wx = w.mul_vec(&x);
                let res = wx
                    .iter()
                    .zip(&x)
                    .fold(T::zero(), |s, (&a, &b)| s + (a - b * mu).norm_sqr())
                    .sqrt();
                if res <= tol {
                    break;
                }
                let mut shifted = w.clone();
                for i in 0..n {
                    shifted[(i, i)] = shifted[(i, i)] - mu;
                }
                let Some(y) = shifted.solve(&x) else { break };
                let norm = y.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
                if !norm.is_finite() || norm.is_zero() {
                    break;
                }
                x = y.iter().map(|&z| Complex::new(z.re / norm, z.im / norm)).collect();
                let wx = w.mul_vec(&x);
                mu = x.iter().zip(&wx).fold(Complex::new(T::zero(), T::zero()), |s, (&a, &b)| s + a.conj() * b);
            }
            vals.push(mu);
            vecs.push(x);
        }
        // greedy assignment on |<e_i|x_j>|
        let mut owner = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut cand: Vec<(T, usize, usize)> = Vec::with_capacity(n * n);
        for (j, x) in vecs.iter().enumerate() {
            for (i, z) in x.iter().enumerate() {
                cand.push((cabs(*z), i, j));
            }
        }
        cand.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap_or(core::cmp::Ordering::Equal));
        for (o, i, j) in cand {
            if owner[i] == usize::MAX && !used[j] {
                if o.to_f64() < PAIRING_THRESHOLD {
                    return None;
                }
                owner[i] = j;
                used[j] = true;
            }
        }
        let mut values = Vec::with_capacity(n);
        let mut v = CMatrix::zeros(n);
        let mut eigen_error = T::zero();
        for i in 0..n {
            let j = owner[i];
            values.push(vals[j]);
            eigen_error = eigen_error.max(cabs(vals[j] - self.exact[i]));
            let d = vecs[j][i];
            let m = cabs(d);
            let align = Complex::new(d.re / m, -d.im / m);
            for r in 0..n {
                v[(r, i)] = vecs[j][r] * align;
            }
        }
        let mut vm = v.clone();
        for i in 0..n {
            vm[(i, i)] = vm[(i, i)] - Complex::new(T::one(), T::zero());
        }
        Some(EigenSplit {
            values,
            vectors: v,
            eigen_error,
            basis_error: vm.spectral_norm(),
        })
    }
}

pub fn apply_formula<T: Real>(seq: &ExponentialSequence<T>, a: &CMatrix<T>, b: &CMatrix<T>, t: T) -> Result<CMatrix<T>> {
    let h = Hamiltonian::pair(a, b)?;
    Ok(h.from_eigenbasis(&h.evolve(seq, t)?.w))
}

pub fn spectral_error<T: Real>(seq: &ExponentialSequence<T>, a: &CMatrix<T>, b: &CMatrix<T>, t: T) -> Result<T> {
    Ok(Hamiltonian::pair(a, b)?.evolve(seq, t)?.spectral_error())
}

/// `None` when eigenvalue pairing is ambiguous.
pub fn eigenvalue_error<T: Real>(
    seq: &ExponentialSequence<T>,
    a: &CMatrix<T>,
    b: &CMatrix<T>,
    t: T,
) -> Result<Option<T>> {
    Ok(Hamiltonian::pair(a, b)?.evolve(seq, t)?.eigen_split().map(|s| s.eigen_error))
}

/// `None` when eigenvalue pairing is ambiguous.
pub fn basis_error<T: Real>(seq: &ExponentialSequence<T>, a: &CMatrix<T>, b: &CMatrix<T>, t: T) -> Result<Option<T>> {
    Ok(Hamiltonian::pair(a, b)?.evolve(seq, t)?.eigen_split().map(|s| s.basis_error))
}

/// `M c^{1/k}`.
pub fn metric(stages: f64, c: f64, k: u32) -> f64 {
    stages * libm::pow(c, 1.0 / k as f64)
}

/// Geometric mean of the positive entries; `None` if there are none.
pub fn geometric_mean(xs: &[f64]) -> Option<f64> {
    let (s, n) = xs
        .iter()
        .filter(|&&x| x > 0.0)
        .fold((0.0, 0usize), |(s, n), &x| (s + libm::log(x), n + 1));
    (n > 0).then(|| libm::exp(s / n as f64))
}

fn median(xs: &mut [f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap_or(core::cmp::Ordering::Equal));
    let n = xs.len();
    Some(if n % 2 == 1 {
        xs[n / 2]
    } else {
        0.5 * (xs[n / 2 - 1] + xs[n / 2])
    })
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(pts: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = pts
        .iter()
        .filter(|p| p.0 > 0.0 && p.1 > 0.0)
        .map(|&(x, y)| (libm::log(x), libm::log(y)))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

/// `n` points geometrically spaced over `[lo, hi]`.
pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    let r = libm::log(hi / lo) / (n - 1) as f64;
    (0..n).map(|i| lo * libm::exp(r * i as f64)).collect()
}

/// One problem instance for [`measure`]: the Hamiltonian plus the factors
/// that turn a raw error into a normalised constant,
/// `c = err / (norm_factor * t^{k+1})` at `t = s * time_unit`.
#[derive(Debug, Clone)]
pub struct Instance<T> {
    pub ham: Hamiltonian<T>,
    pub time_unit: f64,
    pub norm_factor: f64,
}

impl<T: Real> Instance<T> {
    pub fn plain(ham: Hamiltonian<T>) -> Self {
        Instance {
            ham,
            time_unit: 1.0,
            norm_factor: 1.0,
        }
    }
}

/// Raw errors of one sample over the grid. Eigen and basis entries are
/// `None` where pairing failed.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleErrors {
    pub index: usize,
    pub time_unit: f64,
    pub norm_factor: f64,
    pub spectral: Vec<f64>,
    pub eigen: Vec<Option<f64>>,
    pub basis: Vec<Option<f64>>,
}

/// Errors of `seq` on one instance at `t = s * time_unit` for each `s` in `grid`.
pub fn measure<T: Real>(seq: &ExponentialSequence<T>, inst: &Instance<T>, grid: &[f64], index: usize) -> Result<SampleErrors> {
    let mut out = SampleErrors {
        index,
        time_unit: inst.time_unit,
        norm_factor: inst.norm_factor,
        spectral: Vec::with_capacity(grid.len()),
        eigen: Vec::with_capacity(grid.len()),
        basis: Vec::with_capacity(grid.len()),
    };
    for &s in grid {
        let t = T::from_f64(s) * T::from_f64(inst.time_unit);
        let p = inst.ham.evolve(seq, t)?;
        out.spectral.push(p.spectral_error().to_f64());
        match p.eigen_split() {
            Some(e) => {
                out.eigen.push(Some(e.eigen_error.to_f64()));
                out.basis.push(Some(e.basis_error.to_f64()));
            }
            None => {
                out.eigen.push(None);
                out.basis.push(None);
            }
        }
    }
    Ok(out)
}

/// Measure `seq` on `spec.count` random pairs, converted to `T`.
pub fn measure_random_pairs<T: Real>(
    seq: &ExponentialSequence<T>,
    spec: &RandomPairSpec,
    grid: &[f64],
) -> Result<Vec<SampleErrors>> {
    spec.validate()?;
    let one = |i: usize| -> Result<SampleErrors> {
        let (a, b) = spec.pair(i);
        let ham = Hamiltonian::pair(&a.convert(), &b.convert())?;
        measure(seq, &Instance::plain(ham), grid, i)
    };
    collect_samples(spec.count, one)
}

#[cfg(feature = "parallel")]
pub(crate) fn collect_samples<F>(count: usize, f: F) -> Result<Vec<SampleErrors>>
where
    F: Fn(usize) -> Result<SampleErrors> + Sync + Send,
{
    use rayon::prelude::*;
    (0..count).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn collect_samples<F>(count: usize, f: F) -> Result<Vec<SampleErrors>>
where
    F: Fn(usize) -> Result<SampleErrors>,
{
    (0..count).map(f).collect()
}

/// Which error a fit is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Metric {
    Spectral,
    Eigen,
    Basis,
}

/// Per-metric summary across samples.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConstantFit {
    /// Geometric mean of the per-sample constants.
    pub constant: Option<f64>,
    /// Per-sample constants (excluded samples omitted).
    pub per_sample: Vec<f64>,
    /// Median over samples of the least-squares log-log slope.
    pub median_slope: Option<f64>,
    /// Median over samples of every adjacent-pair slope.
    pub median_adjacent_slope: Option<f64>,
    pub slopes: Vec<f64>,
    /// Samples whose error is at the rounding floor (e.g. commuting inputs).
    pub degenerate: usize,
    /// Samples whose eigenvalue pairing failed somewhere on the grid.
    pub ambiguous: usize,
    /// Samples whose slope is off by more than the tolerance.
    pub slope_failures: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorFit {
    pub k: u32,
    pub t_grid: Vec<f64>,
    pub samples: Vec<SampleErrors>,
    pub spectral: ConstantFit,
    pub eigen: ConstantFit,
    /// Constant `μ` of `basis ≈ μ t^{k+ν}`, with `ν` fitted per sample.
    pub basis: ConstantFit,
    /// Fitted exponent `ν`, reported clamped to `[0, 1]`.
    pub nu_exponent: Option<f64>,
    /// Unclamped fit behind `nu_exponent`.
    pub nu_raw: Option<f64>,
    pub floor: f64,
}

/// Allowed distance of a per-sample slope from `k + 1`.
pub const SLOPE_TOLERANCE: f64 = 0.2;
/// Largest fraction of slope failures before a fit is rejected.
pub const MAX_SLOPE_FAILURES: f64 = 0.1;

/// Rounding floor of an error measured in type `T` over `ops` exponentials.
pub fn error_floor<T: Real>(ops: usize) -> f64 {
    16.0 * (ops as f64 + 1.0) * T::epsilon().to_f64()
}

impl ErrorFit {
    /// Aggregate raw sample errors. Points below `floor` are dropped; a
    /// sample with fewer than two points left is degenerate.
    pub fn from_samples(k: u32, grid: &[f64], samples: Vec<SampleErrors>, floor: f64) -> ErrorFit {
        let spectral = summarize(k, grid, &samples, floor, Metric::Spectral);
        let eigen = summarize(k, grid, &samples, floor, Metric::Eigen);
        let basis = summarize(k, grid, &samples, floor, Metric::Basis);
        let nu_raw = basis.median_slope.map(|s| s - k as f64);
        ErrorFit {
            k,
            t_grid: grid.to_vec(),
            samples,
            spectral,
            eigen,
            basis,
            nu_exponent: nu_raw.map(|v| v.clamp(0.0, 1.0)),
            nu_raw,
            floor,
        }
    }

    pub fn chi(&self) -> Option<f64> {
        self.spectral.constant
    }

    pub fn zeta(&self) -> Option<f64> {
        self.eigen.constant
    }

    pub fn mu(&self) -> Option<f64> {
        self.basis.constant
    }

    /// Err if more than 10% of the usable samples fail the slope check for `m`.
    pub fn check(&self, m: Metric) -> Result<()> {
        let f = match m {
            Metric::Spectral => &self.spectral,
            Metric::Eigen => &self.eigen,
            Metric::Basis => &self.basis,
        };
        let used = f.per_sample.len();
        if used == 0 {
            return Err(Error::FitRejected(alloc::format!(
                "no usable samples ({} degenerate, {} ambiguous)",
                f.degenerate, f.ambiguous
            )));
        }
        let frac = f.slope_failures as f64 / used as f64;
        if frac > MAX_SLOPE_FAILURES {
            return Err(Error::FitRejected(alloc::format!(
                "{} of {} samples have a log-log slope outside {} +/- {} (median {:.3})",
                f.slope_failures,
                used,
                self.k + 1,
                SLOPE_TOLERANCE,
                f.median_slope.unwrap_or(f64::NAN)
            )));
        }
        Ok(())
    }

    /// Geometric-mean error at each grid point, for threshold curves.
    pub fn curve(&self, m: Metric) -> Vec<(f64, f64)> {
        self.t_grid
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| {
                let xs: Vec<f64> = self
                    .samples
                    .iter()
                    .filter_map(|r| sample_value(r, m, i))
                    .filter(|&x| x > self.floor)
                    .collect();
                geometric_mean(&xs).map(|g| (s, g))
            })
            .collect()
    }
}

fn sample_value(r: &SampleErrors, m: Metric, i: usize) -> Option<f64> {
    match m {
        Metric::Spectral => Some(r.spectral[i]),
        Metric::Eigen => r.eigen[i],
        Metric::Basis => r.basis[i],
    }
}

fn summarize(k: u32, grid: &[f64], samples: &[SampleErrors], floor: f64, m: Metric) -> ConstantFit {
    let mut fit = ConstantFit::default();
    let mut adjacent = Vec::new();
    let target = (k + 1) as f64;
    for r in samples {
        let vals: Vec<Option<f64>> = (0..grid.len()).map(|i| sample_value(r, m, i)).collect();
        if vals.iter().any(Option::is_none) {
            fit.ambiguous += 1;
            continue;
        }
        let pts: Vec<(f64, f64)> = grid
            .iter()
            .zip(&vals)
            .map(|(&s, v)| (s * r.time_unit, v.unwrap()))
            .filter(|p| p.1 > floor)
            .collect();
        let Some(slope) = loglog_slope(&pts) else {
            fit.degenerate += 1;
            continue;
        };
        for w in pts.windows(2) {
            adjacent.push(libm::log(w[1].1 / w[0].1) / libm::log(w[1].0 / w[0].0));
        }
        // the basis error has exponent k + ν, ν unknown; use the fitted one
        let power = if m == Metric::Basis { slope } else { target };
        let (t0, e0) = pts[0];
        fit.per_sample.push(e0 / (r.norm_factor * libm::pow(t0, power)));
        if m != Metric::Basis && libm::fabs(slope - target) > SLOPE_TOLERANCE {
            fit.slope_failures += 1;
        }
        fit.slopes.push(slope);
    }
    fit.constant = geometric_mean(&fit.per_sample);
    fit.median_slope = median(&mut fit.slopes.clone());
    fit.median_adjacent_slope = median(&mut adjacent);
    fit
}

/// Measure `seq` on the random ensemble and aggregate, without the slope
/// gate (see [`ErrorFit::check`]).
pub fn measure_fit<T: Real>(seq: &ExponentialSequence<T>, spec: &RandomPairSpec, k: u32, grid: &[f64]) -> Result<ErrorFit> {
    let samples = measure_random_pairs(seq, spec, grid)?;
    Ok(ErrorFit::from_samples(k, grid, samples, error_floor::<T>(seq.len())))
}

/// [`measure_fit`] followed by the spectral and eigenvalue slope gates.
pub fn fit_constants<T: Real>(seq: &ExponentialSequence<T>, spec: &RandomPairSpec, k: u32, grid: &[f64]) -> Result<ErrorFit> {
    let fit = measure_fit(seq, spec, k, grid)?;
    fit.check(Metric::Spectral)?;
    fit.check(Metric::Eigen)?;
    Ok(fit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{expand_stages, push_s2};

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn sx() -> CMatrix<f64> {
        CMatrix::from_fn(2, |i, j| if i != j { c(1.0, 0.0) } else { c(0.0, 0.0) })
    }

    fn sz() -> CMatrix<f64> {
        CMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)])
    }

    fn s2() -> ExponentialSequence<f64> {
        let mut s = ExponentialSequence::new(2);
        push_s2(&mut s, 1.0);
        s
    }

    #[test]
    fn s2_on_pauli_matches_direct_product() {
        let t = 0.1;
        let u = apply_formula(&s2(), &sx(), &sz(), t).unwrap();
        // exp(-i θ σ) = cos θ - i sin θ σ for a Pauli matrix
        let ex = |m: &CMatrix<f64>, th: f64| {
            let mut r = m.scale(c(0.0, -libm::sin(th)));
            r[(0, 0)] += libm::cos(th);
            r[(1, 1)] += libm::cos(th);
            r
        };
        let direct = ex(&sx(), t / 2.0).matmul(&ex(&sz(), t)).matmul(&ex(&sx(), t / 2.0));
        assert!((&u - &direct).max_abs() < 1e-15);
    }

    #[test]
    fn commuting_and_zero_time() {
        let a = CMatrix::diagonal(&[c(0.3, 0.0), c(-0.7, 0.0), c(0.1, 0.0)]);
        let b = CMatrix::diagonal(&[c(-0.2, 0.0), c(0.5, 0.0), c(0.9, 0.0)]);
        let seq = expand_stages(&[0.4, 0.2, 0.4], 1.0, 2);
        assert!(spectral_error(&seq, &a, &b, 0.8).unwrap() < 1e-15);
        assert!(eigenvalue_error(&seq, &a, &b, 0.8).unwrap().unwrap() < 1e-15);
        let u = apply_formula(&seq, &sx(), &sz(), 0.0).unwrap();
        assert!((&u - &CMatrix::identity(2)).max_abs() < 1e-15);
        assert!(apply_formula(&seq, &a, &sx(), 0.1).is_err());
    }

    #[test]
    fn s2_slope_is_three() {
        let grid = [0.01, 0.02, 0.04];
        let errs: Vec<(f64, f64)> = grid.iter().map(|&t| (t, spectral_error(&s2(), &sx(), &sz(), t).unwrap())).collect();
        let s = loglog_slope(&errs).unwrap();
        assert!((s - 3.0).abs() < 0.01, "{s}");
    }

    #[test]
    fn metric_values() {
        assert!((metric(15.0, 5.9e-6, 8) - 3.33).abs() < 5e-3);
        assert!((metric(17.0, 2.2e-9, 8) - 1.41).abs() < 5e-3);
        assert_eq!(metric(7.0, 1.0, 4), 7.0);
    }

    #[test]
    fn geometric_mean_is_scale_covariant() {
        let xs = [1e-3, 4e-3, 2e-2];
        let g = geometric_mean(&xs).unwrap();
        assert!((g - libm::cbrt(8e-8)).abs() < 1e-17);
        let doubled: Vec<f64> = xs.iter().map(|x| 2.0 * x).collect();
        assert!((geometric_mean(&doubled).unwrap() - 2.0 * g).abs() < 1e-15);
        let rev: Vec<f64> = xs.iter().rev().copied().collect();
        assert!((geometric_mean(&rev).unwrap() - g).abs() < 1e-18);
        assert_eq!(geometric_mean(&[0.0]), None);
    }

    #[test]
    fn random_pairs_are_reproducible_and_normalised() {
        let spec = RandomPairSpec { dim: 4, count: 3, seed: 9 };
        let (a, b) = spec.pair(2);
        assert_eq!(spec.pair(2).0, a);
        assert_ne!(spec.pair(1).0, a);
        assert!(a.is_hermitian(0.0) && b.is_hermitian(0.0));
        assert!((a.spectral_norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_pair_is_degenerate() {
        let a = CMatrix::diagonal(&[c(0.3, 0.0), c(-0.7, 0.0)]);
        let b = CMatrix::diagonal(&[c(-0.2, 0.0), c(0.5, 0.0)]);
        let ham = Hamiltonian::pair(&a, &b).unwrap();
        let grid = [0.01, 0.1];
        let r = measure(&s2(), &Instance::plain(ham), &grid, 0).unwrap();
        let fit = ErrorFit::from_samples(2, &grid, vec![r], error_floor::<f64>(3));
        assert_eq!(fit.spectral.degenerate, 1);
        assert_eq!(fit.chi(), None);
        assert!(fit.check(Metric::Spectral).is_err());
    }
}

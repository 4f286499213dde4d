//! Number-conserving fermionic Hamiltonians
//! `H = Σ τ_pq a†_p a_q + Σ ν_pq n_p n_q` restricted to `η` electrons in
//! `d` orbitals, and the error constants normalised by their norms.
//!
//! Basis states are bit masks with bit `p` set when orbital `p` is occupied,
//! ordered by increasing mask. The hop `a†_p a_q` carries the sign
//! `(-1)^(number of occupied orbitals strictly between p and q)`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::benchmark::{collect_samples, error_floor, measure, ErrorFit, Hamiltonian, Instance, Metric};
use crate::error::{Error, Result};
use crate::formulas::ExponentialSequence;
use crate::linalg::{CMatrix, Complex};
use crate::real::Real;
use crate::thresholds::{asymptotic_threshold, empirical_threshold, ErrorCurve, FormulaCost, ThresholdReport};

#[derive(Debug, Clone, PartialEq)]
pub struct FermionicHamiltonian {
    pub d: usize,
    pub eta: usize,
    /// Row-major `d × d`, symmetric.
    pub tau: Vec<f64>,
    pub nu: Vec<f64>,
}

fn symmetric(d: usize, m: &[f64]) -> bool {
    (0..d).all(|p| (0..d).all(|q| m[p * d + q] == m[q * d + p]))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Masks of weight `eta` over `d` bits, increasing.
pub fn sector_basis(d: usize, eta: usize) -> Vec<u32> {
    (0u32..(1u32 << d)).filter(|m| m.count_ones() as usize == eta).collect()
}

impl FermionicHamiltonian {
    pub fn new(d: usize, eta: usize, tau: Vec<f64>, nu: Vec<f64>) -> Result<Self> {
        if d == 0 || d > 20 {
            return Err(Error::InvalidArgument("orbital count must be in 1..=20"));
        }
        if eta > d {
            return Err(Error::InvalidArgument("electron number exceeds orbital count"));
        }
        if tau.len() != d * d {
            return Err(Error::DimensionMismatch(tau.len(), d * d));
        }
        if nu.len() != d * d {
            return Err(Error::DimensionMismatch(nu.len(), d * d));
        }
        if !symmetric(d, &tau) || !symmetric(d, &nu) {
            return Err(Error::InvalidArgument("tau and nu must be symmetric"));
        }
        Ok(FermionicHamiltonian { d, eta, tau, nu })
    }

    /// Entries uniform on `[-1, 1]`, symmetrised by averaging with the transpose.
    pub fn random<R: Rng + ?Sized>(d: usize, eta: usize, rng: &mut R) -> Result<Self> {
        let mut draw = || -> Vec<f64> {
            let raw: Vec<f64> = (0..d * d).map(|_| rng.random_range(-1.0..=1.0)).collect();
            let mut m = vec![0.0; d * d];
            for p in 0..d {
                for q in 0..d {
                    m[p * d + q] = 0.5 * (raw[p * d + q] + raw[q * d + p]);
                }
            }
            m
        };
        let tau = draw();
        let nu = draw();
        Self::new(d, eta, tau, nu)
    }

    pub fn dim(&self) -> usize {
        binomial(self.d, self.eta)
    }

    /// `(T, V)` on the `η`-electron sector.
    pub fn build_matrices(&self) -> (CMatrix<f64>, CMatrix<f64>) {
        let d = self.d;
        let basis = sector_basis(d, self.eta);
        let n = basis.len();
        let index = |m: u32| basis.binary_search(&m).expect("mask in sector");
        let mut t = CMatrix::zeros(n);
        let mut v = CMatrix::zeros(n);
        for (col, &m) in basis.iter().enumerate() {
            let mut diag_t = 0.0;
            let mut diag_v = 0.0;
            for p in 0..d {
                if m >> p & 1 == 0 {
                    continue;
                }
                diag_t += self.tau[p * d + p];
                for q in 0..d {
                    if m >> q & 1 == 1 {
                        diag_v += self.nu[p * d + q];
                    }
                }
            }
            t[(col, col)] = Complex::new(diag_t, 0.0);
            v[(col, col)] = Complex::new(diag_v, 0.0);
            for q in 0..d {
                if m >> q & 1 == 0 {
                    continue;
                }
                for p in 0..d {
                    if p == q || m >> p & 1 == 1 || self.tau[p * d + q] == 0.0 {
                        continue;
                    }
                    let (lo, hi) = if p < q { (p, q) } else { (q, p) };
                    let between = (m >> (lo + 1)) & ((1u32 << (hi - lo - 1)) - 1);
                    let sign = if between.count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
                    let row = index((m & !(1 << q)) | (1 << p));
                    t[(row, col)] += Complex::new(sign * self.tau[p * d + q], 0.0);
                }
            }
        }
        (t, v)
    }

    pub fn norms(&self) -> NormEstimate {
        let d = self.d;
        let tau_norm = (0..d)
            .map(|p| (0..d).map(|q| libm::fabs(self.tau[p * d + q])).sum::<f64>())
            .fold(0.0, f64::max);
        let nu_norm = (0..d)
            .map(|p| {
                let mut row: Vec<f64> = (0..d).map(|q| libm::fabs(self.nu[p * d + q])).collect();
                row.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
                row[..self.eta].iter().sum::<f64>()
            })
            .fold(0.0, f64::max);
        NormEstimate::new(tau_norm, nu_norm, self.eta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate {
    /// `‖τ‖₁ = max_p Σ_q |τ_pq|`.
    pub tau_norm: f64,
    /// `‖ν‖_{1,[η]}`: the `η` largest `|ν_pq|` of a row, summed, maximised over rows.
    pub nu_norm: f64,
    pub eta: usize,
}

impl NormEstimate {
    pub fn new(tau_norm: f64, nu_norm: f64, eta: usize) -> Self {
        NormEstimate { tau_norm, nu_norm, eta }
    }

    /// `‖τ‖₁ + ‖ν‖_{1,[η]}`.
    pub fn combined(&self) -> f64 {
        self.tau_norm + self.nu_norm
    }

    /// `‖τ‖₁ ‖ν‖_{1,[η]} η / (‖τ‖₁ + ‖ν‖_{1,[η]})`, the factor multiplying `T/ε`.
    pub fn lhs_factor(&self) -> f64 {
        let s = self.combined();
        if s == 0.0 {
            return 0.0;
        }
        self.tau_norm * self.nu_norm * self.eta as f64 / s
    }

    /// Factor turning a raw error at time `t` into the scaled-curve value
    /// `s g(s)`: `(‖τ‖₁+‖ν‖_{1,[η]})² / (‖τ‖₁ ‖ν‖_{1,[η]} η)`.
    pub fn curve_weight(&self) -> f64 {
        let s = self.combined();
        s * s / (self.tau_norm * self.nu_norm * self.eta as f64)
    }

    /// `(‖τ‖₁+‖ν‖_{1,[η]})^{k-1} ‖τ‖₁ ‖ν‖_{1,[η]} η`, dividing `χ` into `ξ`.
    pub fn error_factor(&self, k: u32) -> f64 {
        libm::pow(self.combined(), k as f64 - 1.0) * self.tau_norm * self.nu_norm * self.eta as f64
    }
}

/// Plane-wave estimates `(‖τ‖₁, ‖ν‖_{1,[η]})` for `η` electrons, `N` orbitals, cell volume `Ω`.
pub fn scaling_norms(eta: f64, n: f64, omega: f64) -> (f64, f64) {
    let pi = core::f64::consts::PI;
    let tau = 3.0 * pi * pi * libm::pow(n / omega, 2.0 / 3.0) / 2.0;
    let nu = libm::cbrt(pi) * libm::pow(0.75, 2.0 / 3.0) * libm::pow(eta, 2.0 / 3.0) * libm::cbrt(n / omega);
    (tau, nu)
}

/// Random instances for [`fermionic_constants`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FermionSpec {
    pub d: usize,
    pub eta: usize,
    pub count: usize,
    pub seed: u64,
}

impl FermionSpec {
    /// Half filling.
    pub fn half_filled(d: usize, count: usize, seed: u64) -> Self {
        FermionSpec {
            d,
            eta: d / 2,
            count,
            seed,
        }
    }

    pub fn instance(&self, index: usize) -> Result<FermionicHamiltonian> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        FermionicHamiltonian::random(self.d, self.eta, &mut rng)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FermionicFit {
    /// Spectral constant `ξ`.
    pub xi: Option<f64>,
    /// Eigenvalue constant `ω`.
    pub omega: Option<f64>,
    /// Sample errors are stored as scaled-curve values (see
    /// [`NormEstimate::curve_weight`]) on the grid `s = t (‖τ‖₁+‖ν‖_{1,[η]})`.
    pub fit: ErrorFit,
    pub norms: Vec<NormEstimate>,
}

impl FermionicFit {
    /// Geometric-mean `s g(s)` in the scaled variable, with `g` the error per
    /// unit time divided by the threshold factor: a power law `c s^{k+1}`
    /// in the scaling regime.
    pub fn scaled_curve(&self, m: Metric) -> Vec<(f64, f64)> {
        self.fit.curve(m)
    }
}

/// Measure `seq` on random `(T, V)` pairs at `t = s / (‖τ‖₁+‖ν‖_{1,[η]})`
/// for `s` in `grid`, and normalise by the norm factor.
pub fn fermionic_constants<T: Real>(
    seq: &ExponentialSequence<T>,
    spec: &FermionSpec,
    k: u32,
    grid: &[f64],
) -> Result<FermionicFit> {
    if spec.count == 0 {
        return Err(Error::InvalidArgument("sample count must be positive"));
    }
    let hams: Vec<FermionicHamiltonian> = (0..spec.count).map(|i| spec.instance(i)).collect::<Result<_>>()?;
    fermionic_fit(seq, &hams, k, grid)
}

/// [`fermionic_constants`] on given Hamiltonians.
pub fn fermionic_fit<T: Real>(
    seq: &ExponentialSequence<T>,
    hams: &[FermionicHamiltonian],
    k: u32,
    grid: &[f64],
) -> Result<FermionicFit> {
    if hams.is_empty() {
        return Err(Error::InvalidArgument("no Hamiltonians to measure"));
    }
    if hams.iter().any(|h| h.eta == 0 || h.eta == h.d) {
        return Err(Error::InvalidArgument("empty or full sectors have trivial dynamics"));
    }
    let norms: Vec<NormEstimate> = hams.iter().map(FermionicHamiltonian::norms).collect();
    if norms.iter().any(|n| n.lhs_factor() == 0.0) {
        return Err(Error::InvalidArgument("tau and nu must both be nonzero"));
    }
    let one = |i: usize| {
        let n = norms[i];
        let (t, v) = hams[i].build_matrices();
        let ham = Hamiltonian::pair(&t.convert(), &v.convert())?;
        let s = n.combined();
        let inst = Instance {
            ham,
            time_unit: 1.0 / s,
            norm_factor: n.error_factor(k),
        };
        let mut r = measure(seq, &inst, grid, i)?;
        let w = n.curve_weight();
        for x in &mut r.spectral {
            *x *= w;
        }
        for x in r.eigen.iter_mut().chain(r.basis.iter_mut()).flatten() {
            *x *= w;
        }
        r.time_unit = 1.0;
        r.norm_factor = 1.0;
        Ok(r)
    };
    let samples = collect_samples(hams.len(), one)?;
    let floor = error_floor::<T>(seq.len());
    let fit = ErrorFit::from_samples(k, grid, samples, floor);
    Ok(FermionicFit {
        xi: fit.chi(),
        omega: fit.zeta(),
        fit,
        norms,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermionicThreshold {
    /// `‖τ‖₁‖ν‖_{1,[η]}η/(‖τ‖₁+‖ν‖_{1,[η]}) · T/ε` at the crossover.
    pub scaled: f64,
    /// `T/ε` for the given norms, if any.
    pub t_over_eps: Option<f64>,
    pub report: Option<ThresholdReport>,
}

/// Asymptotic crossover with `ξ`/`ω` constants.
pub fn fermionic_threshold(low: &FormulaCost, high: &FormulaCost, norms: Option<&NormEstimate>) -> Result<FermionicThreshold> {
    let scaled = asymptotic_threshold(low, high)?;
    Ok(FermionicThreshold {
        scaled,
        t_over_eps: norms.map(|n| scaled / n.lhs_factor()),
        report: None,
    })
}

/// Non-asymptotic crossover from curves in the scaled variable
/// (see [`FermionicFit::scaled_curve`]).
pub fn fermionic_threshold_curves(
    m1: f64,
    g1: &ErrorCurve,
    m2: f64,
    g2: &ErrorCurve,
    norms: Option<&NormEstimate>,
) -> Result<FermionicThreshold> {
    let r = empirical_threshold(m1, g1, m2, g2)?;
    Ok(FermionicThreshold {
        scaled: r.ratio,
        t_over_eps: norms.map(|n| r.ratio / n.lhs_factor()),
        report: Some(r),
    })
}

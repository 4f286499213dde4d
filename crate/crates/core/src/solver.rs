//! Restart-based Levenberg-Marquardt search for composition weights, with
//! deduplication, refinement along the solution manifold and polishing in a
//! wider scalar tier.

use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::formulas::{
    central_weight, expand, expand_processed, ExponentialSequence, ProcessedFormula, StageCoefficients,
};
use crate::linalg::{lstsq, CMatrix, HermitianEigen, Mat};
use crate::order_conditions::{condition_vector, reduced_conditions, reduced_count, FormulaRef};
use crate::real::{convert, Real};
use crate::word_series;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Symmetric composition with `w_0` eliminated; closed-form conditions.
    Plain,
    /// Kernel and processor solved together; solutions deduplicated on the kernel.
    Kernel,
    /// Kernel and processor solved together; deduplicated on both.
    JointProcessed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub order: u32,
    pub m: usize,
    pub restarts: usize,
    pub init_sigma: f64,
    /// When non-empty, restart `i` draws with `sigma_cycle[i % len]` instead
    /// of `init_sigma`, mixing small- and large-weight basins in one run.
    pub sigma_cycle: Vec<f64>,
    pub mode: SearchMode,
    pub seed: u64,
    /// Processor length `G` (joint modes).
    pub processor_len: usize,
    /// Keep the kernel fixed at these weights `w_0..w_m` and solve for the processor only.
    pub fixed_kernel: Option<Vec<f64>>,
    /// Centre of the initial distribution for the free unknowns; the first
    /// restart starts exactly here.
    pub seed_point: Option<Vec<f64>>,
    pub max_iter: usize,
    /// Acceptance threshold on the Euclidean residual norm.
    pub tol: f64,
    pub dedup_radius: f64,
}

impl SearchConfig {
    pub fn plain(order: u32, m: usize, restarts: usize, seed: u64) -> Self {
        SearchConfig {
            order,
            m,
            restarts,
            init_sigma: default_sigma(order),
            sigma_cycle: Vec::new(),
            mode: SearchMode::Plain,
            seed,
            processor_len: 0,
            fixed_kernel: None,
            seed_point: None,
            max_iter: 400,
            tol: 1e-12,
            dedup_radius: 0.01,
        }
    }

    pub fn joint(order: u32, m: usize, processor_len: usize, restarts: usize, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::JointProcessed,
            processor_len,
            ..Self::plain(order, m, restarts, seed)
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.init_sigma > 0.0) || self.sigma_cycle.iter().any(|s| !(*s > 0.0)) {
            return Err(Error::InvalidArgument("init_sigma must be positive"));
        }
        if self.restarts == 0 {
            return Err(Error::InvalidArgument("restarts must be at least 1"));
        }
        if reduced_count(self.order).is_none() {
            return Err(Error::InvalidArgument("order must be 2, 4, 6, 8 or 10"));
        }
        if self.mode != SearchMode::Plain && self.processor_len == 0 && self.fixed_kernel.is_none() {
            return Err(Error::InvalidArgument("joint modes need a processor length"));
        }
        if let Some(w) = &self.fixed_kernel {
            if w.len() != self.m + 1 {
                return Err(Error::DimensionMismatch(w.len(), self.m + 1));
            }
        }
        if let Some(p) = &self.seed_point {
            let n = problem_for(self)?.dim();
            if p.len() != n {
                return Err(Error::DimensionMismatch(p.len(), n));
            }
        }
        Ok(())
    }
}

/// Initial standard deviation: 0.6 at order 8, 0.9 at order 10, 1.0 otherwise.
pub fn default_sigma(order: u32) -> f64 {
    match order {
        8 => 0.6,
        10 => 0.9,
        _ => 1.0,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<T> {
    /// `w_0..w_m`.
    pub w: Vec<T>,
    /// Full processor `γ_1..γ_G` (empty for plain formulae).
    pub gammas: Vec<T>,
    pub order: u32,
    pub residual_norm: T,
    /// Euclidean norm of the word-series residual at order `k + 1`.
    pub next_order_residual_norm: T,
}

impl<T: Real> Solution<T> {
    pub fn stage_coefficients(&self, label: &str) -> StageCoefficients<T> {
        StageCoefficients {
            w: self.w.clone(),
            order: self.order,
            label: label.into(),
        }
    }

    pub fn processed(&self, label: &str) -> Option<ProcessedFormula<T>> {
        (!self.gammas.is_empty()).then(|| ProcessedFormula {
            kernel: self.stage_coefficients(label),
            gammas: self.gammas.clone(),
            order: self.order,
        })
    }

    /// Coordinates compared during deduplication.
    pub fn dedup_key(&self, mode: SearchMode) -> Vec<f64> {
        let mut k: Vec<f64> = self.w.iter().map(|x| x.to_f64()).collect();
        if mode == SearchMode::JointProcessed {
            k.extend(self.gammas.iter().map(|x| x.to_f64()));
        }
        k
    }

    pub fn convert<U: Real>(&self) -> Solution<U> {
        let c = |v: &[T]| v.iter().map(|&x| convert::<T, U>(x)).collect();
        Solution {
            w: c(&self.w),
            gammas: c(&self.gammas),
            order: self.order,
            residual_norm: convert(self.residual_norm),
            next_order_residual_norm: convert(self.next_order_residual_norm),
        }
    }
}

/// Summary of a search run.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub solutions: Vec<Solution<f64>>,
    pub restarts: usize,
    pub converged: usize,
    pub duplicates: usize,
}

// ---------------------------------------------------------------------------
// Problems

/// Unknown vector and the equations it must satisfy.
#[derive(Debug, Clone)]
pub enum Problem<T> {
    Plain {
        order: u32,
        m: usize,
    },
    Joint {
        order: u32,
        m: usize,
        processor_len: usize,
        fixed_kernel: Option<Vec<T>>,
    },
}

fn problem_for(cfg: &SearchConfig) -> Result<Problem<f64>> {
    Ok(match cfg.mode {
        SearchMode::Plain => Problem::Plain { order: cfg.order, m: cfg.m },
        _ => Problem::Joint {
            order: cfg.order,
            m: cfg.m,
            processor_len: cfg.processor_len,
            fixed_kernel: cfg.fixed_kernel.clone(),
        },
    })
}

impl<T: Real> Problem<T> {
    pub fn order(&self) -> u32 {
        match self {
            Problem::Plain { order, .. } | Problem::Joint { order, .. } => *order,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Problem::Plain { m, .. } => *m,
            Problem::Joint {
                m,
                processor_len,
                fixed_kernel,
                ..
            } => processor_len.saturating_sub(1) + if fixed_kernel.is_some() { 0 } else { m + 1 },
        }
    }

    /// Split unknowns into `(w_0..w_m, γ_1..γ_G)`.
    pub fn unpack(&self, x: &[T]) -> (Vec<T>, Vec<T>) {
        match self {
            Problem::Plain { .. } => {
                let mut w = vec![central_weight(x)];
                w.extend_from_slice(x);
                (w, Vec::new())
            }
            Problem::Joint {
                m,
                processor_len,
                fixed_kernel,
                ..
            } => {
                let (w, rest) = match fixed_kernel {
                    Some(w) => (w.clone(), x),
                    None => (x[..m + 1].to_vec(), &x[m + 1..]),
                };
                let mut g = rest.to_vec();
                if *processor_len > 0 {
                    let s = g.iter().fold(T::zero(), |s, &v| s + v);
                    g.push(-s);
                }
                (w, g)
            }
        }
    }

    /// Inverse of [`unpack`](Self::unpack).
    pub fn pack(&self, w: &[T], gammas: &[T]) -> Vec<T> {
        match self {
            Problem::Plain { .. } => w[1..].to_vec(),
            Problem::Joint { fixed_kernel, .. } => {
                let mut x = if fixed_kernel.is_some() { Vec::new() } else { w.to_vec() };
                if !gammas.is_empty() {
                    x.extend_from_slice(&gammas[..gammas.len() - 1]);
                }
                x
            }
        }
    }

    fn sequence(&self, w: &[T], g: &[T]) -> Result<ExponentialSequence<T>> {
        let kernel = StageCoefficients {
            w: w.to_vec(),
            order: self.order(),
            label: alloc::string::String::new(),
        };
        if g.is_empty() {
            expand(&kernel, T::one(), 2)
        } else {
            expand_processed(
                &ProcessedFormula {
                    kernel,
                    gammas: g.to_vec(),
                    order: self.order(),
                },
                T::one(),
                2,
            )
        }
    }

    /// Residual the solver drives to zero.
    pub fn conditions(&self, x: &[T]) -> Vec<T> {
        let (w, g) = self.unpack(x);
        match self {
            Problem::Plain { order, .. } => reduced_conditions(&w, *order).expect("validated order"),
            Problem::Joint { order, .. } => {
                let seq = self.sequence(&w, &g).expect("two-term expansion");
                let mut r = word_series::residual(&seq, *order as usize).expect("supported order");
                r.remove(0);
                r
            }
        }
    }

    /// Word-series residual of the words of length `k + 1`.
    pub fn next_order(&self, x: &[T]) -> Vec<T> {
        let (w, g) = self.unpack(x);
        let k = self.order() as usize + 1;
        let seq = self.sequence(&w, &g).expect("two-term expansion");
        let r = word_series::residual(&seq, k).expect("supported order");
        r[(1 << k) - 1..].to_vec()
    }

    pub fn solution(&self, x: &[T]) -> Solution<T> {
        let (w, gammas) = self.unpack(x);
        Solution {
            w,
            gammas,
            order: self.order(),
            residual_norm: norm(&self.conditions(x)),
            next_order_residual_norm: norm(&self.next_order(x)),
        }
    }

    pub fn convert<U: Real>(&self) -> Problem<U> {
        match self {
            Problem::Plain { order, m } => Problem::Plain { order: *order, m: *m },
            Problem::Joint {
                order,
                m,
                processor_len,
                fixed_kernel,
            } => Problem::Joint {
                order: *order,
                m: *m,
                processor_len: *processor_len,
                fixed_kernel: fixed_kernel
                    .as_ref()
                    .map(|w| w.iter().map(|&v| convert::<T, U>(v)).collect()),
            },
        }
    }
}

pub fn norm<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |s, &x| s + x * x).sqrt()
}

// ---------------------------------------------------------------------------
// Levenberg-Marquardt

#[derive(Debug, Clone, Copy)]
pub struct LmOptions<T> {
    pub max_iter: usize,
    pub tol: T,
    pub fd_step: T,
    /// Give up once any unknown exceeds this magnitude.
    pub max_abs: T,
}

#[derive(Debug, Clone)]
pub struct LmResult<T> {
    pub x: Vec<T>,
    pub norm: T,
    pub iterations: usize,
    pub converged: bool,
}

fn jacobian<T: Real>(f: &dyn Fn(&[T]) -> Vec<T>, x: &[T], r: &[T], h: T) -> Mat<T> {
    let n = x.len();
    let mut j = Mat::zeros(r.len(), n);
    let mut xp = x.to_vec();
    for c in 0..n {
        let step = h * (T::one() + x[c].abs());
        xp[c] = x[c] + step;
        let rp = f(&xp);
        xp[c] = x[c];
        for (i, (&a, &b)) in rp.iter().zip(r).enumerate() {
            j.set(i, c, (a - b) / step);
        }
    }
    j
}

/// Damped Gauss-Newton on `f(x) = 0` with forward-difference Jacobians and
/// Marquardt column scaling. The damping doubles on a rejected step and
/// drops by a factor 3 on an accepted one.
pub fn levenberg_marquardt<T: Real>(f: &dyn Fn(&[T]) -> Vec<T>, x0: Vec<T>, opts: &LmOptions<T>) -> LmResult<T> {
    let n = x0.len();
    let mut x = x0;
    let mut r = f(&x);
    let mut cost = norm(&r);
    if n == 0 {
        return LmResult {
            converged: cost <= opts.tol,
            x,
            norm: cost,
            iterations: 0,
        };
    }
    let mut lambda = T::from_f64(1e-3);
    let mut scale = vec![T::zero(); n];
    let mut it = 0;
    while it < opts.max_iter && cost > opts.tol && cost.is_finite() {
        it += 1;
        let j = jacobian(f, &x, &r, opts.fd_step);
        for (c, s) in scale.iter_mut().enumerate() {
            let cn = (0..j.rows).fold(T::zero(), |a, i| a + j.get(i, c) * j.get(i, c)).sqrt();
            *s = s.max(cn);
            if s.is_zero() {
                *s = T::one();
            }
        }
        let mut accepted = false;
        for _ in 0..30 {
            let mut a = Mat::zeros(j.rows + n, n);
            a.data[..j.rows * n].copy_from_slice(&j.data);
            let sl = lambda.sqrt();
            for c in 0..n {
                a.set(j.rows + c, c, sl * scale[c]);
            }
            let mut b: Vec<T> = r.iter().map(|&v| -v).collect();
            b.resize(j.rows + n, T::zero());
            let d = lstsq(&a, &b);
            let xn: Vec<T> = x.iter().zip(&d).map(|(&a, &b)| a + b).collect();
            let rn = f(&xn);
            let cn = norm(&rn);
            if cn.is_finite() && cn < cost {
                let small = norm(&d) <= T::epsilon() * (norm(&x) + T::one());
                x = xn;
                r = rn;
                cost = cn;
                lambda = (lambda / T::from_f64(3.0)).max(T::from_f64(1e-30));
                accepted = true;
                if small {
                    it = opts.max_iter;
                }
                break;
            }
            lambda *= T::from_f64(2.0);
            if lambda > T::from_f64(1e20) {
                break;
            }
        }
        if !accepted || x.iter().any(|v| v.abs() > opts.max_abs) {
            break;
        }
    }
    LmResult {
        converged: cost <= opts.tol,
        x,
        norm: cost,
        iterations: it,
    }
}

// ---------------------------------------------------------------------------
// Search

fn run_restart(cfg: &SearchConfig, prob: &Problem<f64>, index: usize) -> Option<Solution<f64>> {
    let n = prob.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let sigma = if cfg.sigma_cycle.is_empty() {
        cfg.init_sigma
    } else {
        cfg.sigma_cycle[index % cfg.sigma_cycle.len()]
    };
    let normal = Normal::new(0.0, sigma).expect("positive sigma");
    let x0: Vec<f64> = match &cfg.seed_point {
        Some(p) if index == 0 => p.clone(),
        Some(p) => p.iter().map(|&c| c + normal.sample(&mut rng)).collect(),
        None => {
            let mut x: Vec<f64> = (0..n).map(|_| normal.sample(&mut rng)).collect();
            // a free joint kernel starts consistent: w_0 = 1 - 2 sum w_j
            if let Problem::Joint { m, fixed_kernel: None, .. } = prob {
                x[0] = central_weight(&x[1..m + 1]);
            }
            x
        }
    };
    let opts = LmOptions {
        max_iter: cfg.max_iter,
        tol: cfg.tol * 1e-2,
        fd_step: 1e-7,
        max_abs: 1e3,
    };
    let f = |x: &[f64]| prob.conditions(x);
    let res = levenberg_marquardt(&f, x0, &opts);
    if res.norm > cfg.tol || !res.norm.is_finite() {
        return None;
    }
    let sol = prob.solution(&res.x);
    if let Problem::Plain { order, .. } = prob {
        // the closed-form path and the word-series path must agree
        let f = sol.stage_coefficients("");
        let v = condition_vector(FormulaRef::Plain(&f), *order).ok()?;
        if !(norm(&v) < cfg.tol) {
            return None;
        }
    }
    Some(sol)
}

#[cfg(feature = "parallel")]
fn run_all(cfg: &SearchConfig, prob: &Problem<f64>) -> Vec<Option<Solution<f64>>> {
    use rayon::prelude::*;
    (0..cfg.restarts).into_par_iter().map(|i| run_restart(cfg, prob, i)).collect()
}

#[cfg(not(feature = "parallel"))]
fn run_all(cfg: &SearchConfig, prob: &Problem<f64>) -> Vec<Option<Solution<f64>>> {
    (0..cfg.restarts).map(|i| run_restart(cfg, prob, i)).collect()
}

/// Remove solutions within `radius` (Euclidean, on [`Solution::dedup_key`]) of an earlier one.
pub fn dedup(sols: Vec<Solution<f64>>, mode: SearchMode, radius: f64) -> (Vec<Solution<f64>>, usize) {
    let mut kept: Vec<Solution<f64>> = Vec::new();
    let mut keys: Vec<Vec<f64>> = Vec::new();
    let mut dropped = 0;
    for s in sols {
        let k = s.dedup_key(mode);
        let close = keys.iter().any(|o| {
            o.len() == k.len() && o.iter().zip(&k).map(|(a, b)| (a - b) * (a - b)).sum::<f64>() < radius * radius
        });
        if close {
            dropped += 1;
        } else {
            keys.push(k);
            kept.push(s);
        }
    }
    (kept, dropped)
}

/// Run `cfg.restarts` independent solves and return the distinct converged
/// solutions, ordered by next-order residual. Deterministic in `(cfg, seed)`
/// whether or not restarts run in parallel.
pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let prob = problem_for(cfg)?;
    let found: Vec<Solution<f64>> = run_all(cfg, &prob).into_iter().flatten().collect();
    let converged = found.len();
    let (mut solutions, duplicates) = dedup(found, cfg.mode, cfg.dedup_radius);
    solutions.sort_by(|a, b| {
        a.next_order_residual_norm
            .partial_cmp(&b.next_order_residual_norm)
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    Ok(SearchOutcome {
        solutions,
        restarts: cfg.restarts,
        converged,
        duplicates,
    })
}

/// Joint kernel and processor search (`cfg.mode` must not be `Plain`).
pub fn joint_processed_search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    if cfg.mode == SearchMode::Plain {
        return Err(Error::InvalidArgument("joint search needs a joint mode"));
    }
    search(cfg)
}

/// Find a processor `γ_1..γ_G` making `kernel` an order-`order` formula,
/// then polish it to `digits` in `T` (skipped for `digits <= 17`).
///
/// With `start` the first restart is the given `γ_1..γ_{G-1}` and the rest
/// are drawn close to it; otherwise restarts are drawn around zero.
pub fn solve_processor<T: Real>(
    kernel: &StageCoefficients<T>,
    order: u32,
    processor_len: usize,
    start: Option<&[f64]>,
    restarts: usize,
    seed: u64,
    digits: u32,
) -> Result<Solution<T>> {
    if processor_len < 2 {
        return Err(Error::InvalidArgument("a processor needs at least two stages"));
    }
    let w: Vec<f64> = kernel.w.iter().map(|x| x.to_f64()).collect();
    let mut cfg = SearchConfig::joint(order, kernel.m(), processor_len, restarts, seed);
    cfg.fixed_kernel = Some(w);
    match start {
        Some(g) => {
            cfg.seed_point = Some(g[..processor_len - 1].to_vec());
            cfg.init_sigma = 0.05;
        }
        None => cfg.init_sigma = 0.3,
    }
    let out = search(&cfg)?;
    let best = out
        .solutions
        .iter()
        .min_by(|a, b| a.residual_norm.partial_cmp(&b.residual_norm).unwrap_or(core::cmp::Ordering::Equal))
        .ok_or_else(|| Error::Numerical(alloc::format!("no processor found in {restarts} restarts")))?;
    let prob = Problem::Joint {
        order,
        m: kernel.m(),
        processor_len,
        fixed_kernel: Some(kernel.w.clone()),
    };
    let mut sol = best.convert::<T>();
    sol.w = kernel.w.clone();
    if digits <= 17 {
        return Ok(prob.solution(&prob.pack(&sol.w, &sol.gammas)));
    }
    polish(&sol, &prob, digits)
}

// ---------------------------------------------------------------------------
// Refinement and polishing

/// Move along the solution manifold to lower the order-`k+1` residual.
///
/// Each step minimises the linearised next-order residual over the null
/// space of the condition Jacobian, then projects back onto the manifold.
/// Stops once a step improves by less than 0.1%. Returns the input when the
/// conditions leave no freedom.
pub fn refine<T: Real>(sol: &Solution<T>, prob: &Problem<T>) -> Solution<T> {
    let mut x = prob.pack(&sol.w, &sol.gammas);
    let n = x.len();
    let h = T::epsilon().sqrt();
    let cond = |x: &[T]| prob.conditions(x);
    let next = |x: &[T]| prob.next_order(x);
    let mut e = next(&x);
    let mut cost = norm(&e);
    let base_tol = sol.residual_norm.max(T::epsilon() * T::from_f64(1e3));
    let mut lambda = T::from_f64(1e-6);
    for _ in 0..200 {
        let c = cond(&x);
        let jc = jacobian(&cond, &x, &c, h);
        // null space of the constraint Jacobian from the eigenvectors of Jc^T Jc
        let g = CMatrix::from_real(n, |i, j| (0..jc.rows).fold(T::zero(), |s, r| s + jc.get(r, i) * jc.get(r, j)));
        let eig = HermitianEigen::new(&g);
        let top = eig.values.iter().fold(T::zero(), |m, &v| m.max(v));
        let cut = top * T::from_f64(1e-9);
        let free: Vec<usize> = (0..n).filter(|&i| eig.values[i] <= cut).collect();
        if free.is_empty() {
            break;
        }
        let mut basis = Mat::zeros(n, free.len());
        for (col, &i) in free.iter().enumerate() {
            for r in 0..n {
                basis.set(r, col, eig.vectors[(r, i)].re);
            }
        }
        let je = jacobian(&next, &x, &e, h);
        let q = free.len();
        let mut improved = false;
        for _ in 0..20 {
            let mut a = Mat::zeros(je.rows + q, q);
            for i in 0..je.rows {
                for j in 0..q {
                    let v = (0..n).fold(T::zero(), |s, k| s + je.get(i, k) * basis.get(k, j));
                    a.set(i, j, v);
                }
            }
            let sl = lambda.sqrt() * (cost + T::epsilon());
            for j in 0..q {
                a.set(je.rows + j, j, sl);
            }
            let mut b: Vec<T> = e.iter().map(|&v| -v).collect();
            b.resize(je.rows + q, T::zero());
            let z = lstsq(&a, &b);
            let step = basis.mul_vec(&z);
            let trial: Vec<T> = x.iter().zip(&step).map(|(&a, &b)| a + b).collect();
            let proj = levenberg_marquardt(
                &cond,
                trial,
                &LmOptions {
                    max_iter: 50,
                    tol: base_tol,
                    fd_step: h,
                    max_abs: T::from_f64(1e3),
                },
            );
            if proj.converged {
                let en = next(&proj.x);
                let cn = norm(&en);
                if cn < cost {
                    let gain = (cost - cn) / cost;
                    x = proj.x;
                    e = en;
                    cost = cn;
                    lambda = (lambda / T::from_f64(3.0)).max(T::from_f64(1e-12));
                    improved = gain > T::from_f64(1e-3);
                    break;
                }
            }
            lambda *= T::from_f64(2.0);
        }
        if !improved {
            break;
        }
    }
    prob.solution(&x)
}

/// Drive the residual below `10^{2 - digits}` in the scalar type `T`,
/// starting from `sol` (already converted to `T`).
pub fn polish<T: Real>(sol: &Solution<T>, prob: &Problem<T>, digits: u32) -> Result<Solution<T>> {
    if digits > T::DIGITS + 1 {
        return Err(Error::InvalidArgument("scalar type too narrow for the requested digits"));
    }
    let tol = T::from_f64(10f64.powi(2 - digits as i32));
    let x0 = prob.pack(&sol.w, &sol.gammas);
    let cond = |x: &[T]| prob.conditions(x);
    let res = levenberg_marquardt(
        &cond,
        x0,
        &LmOptions {
            max_iter: 60,
            tol,
            fd_step: T::from_f64(libm::pow(10.0, -(digits as f64) / 2.0)),
            max_abs: T::from_f64(1e3),
        },
    );
    if !res.converged {
        return Err(Error::Numerical(alloc::format!(
            "polish stalled at residual {:.3e}",
            res.norm.to_f64()
        )));
    }
    Ok(prob.solution(&res.x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_order_m1_is_the_triple_jump() {
        let out = search(&SearchConfig::plain(4, 1, 20, 3)).unwrap();
        assert_eq!(out.solutions.len(), 1);
        let s2: f64 = crate::formulas::suzuki_factor(2, 3);
        assert!((out.solutions[0].w[1] - s2).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_config() {
        let mut c = SearchConfig::plain(6, 3, 1, 0);
        c.init_sigma = 0.0;
        assert!(search(&c).is_err());
        assert!(search(&SearchConfig::plain(6, 3, 0, 0)).is_err());
        assert!(search(&SearchConfig::plain(7, 3, 1, 0)).is_err());
    }

    #[test]
    fn second_order_has_nothing_to_refine() {
        let prob = Problem::<f64>::Plain { order: 2, m: 0 };
        let s = prob.solution(&[]);
        assert_eq!(s.w, vec![1.0]);
        let r = refine(&s, &prob);
        assert_eq!(r, s);
        let p = polish(&s, &prob, 16).unwrap();
        assert_eq!(p.w, vec![1.0]);
        assert_eq!(p.residual_norm, 0.0);
    }
}

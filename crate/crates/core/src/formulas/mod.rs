//! Product-formula representations and their expansion into ordered
//! exponential sequences.
//!
//! A symmetric composition is stored by its stage weights `w_0..w_m`; the
//! stages applied are `S2(w_m t) .. S2(w_1 t) S2(w_0 t) S2(w_1 t) .. S2(w_m t)`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::real::{convert, Real};

pub mod catalog;

pub use catalog::{catalog, lookup, CatalogEntry, CatalogFormula, Published};

/// Ordered list of `(term, coefficient)` factors `exp(c * H_term)`.
///
/// Adjacent factors on the same term are merged and exact zeros dropped as
/// they are pushed, so the stored list is always in canonical form.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialSequence<T> {
    terms: usize,
    ops: Vec<(usize, T)>,
}

impl<T: Real> ExponentialSequence<T> {
    pub fn new(terms: usize) -> Self {
        ExponentialSequence {
            terms,
            ops: Vec::new(),
        }
    }

    pub fn from_ops<I: IntoIterator<Item = (usize, T)>>(terms: usize, ops: I) -> Result<Self> {
        let mut s = ExponentialSequence::new(terms);
        for (t, c) in ops {
            if t >= terms {
                return Err(Error::InvalidArgument("term index out of range"));
            }
            s.push(t, c);
        }
        Ok(s)
    }

    pub fn push(&mut self, term: usize, c: T) {
        debug_assert!(term < self.terms);
        if let Some(last) = self.ops.last_mut() {
            if last.0 == term {
                last.1 += c;
                if last.1.is_zero() {
                    self.ops.pop();
                }
                return;
            }
        }
        if !c.is_zero() {
            self.ops.push((term, c));
        }
    }

    pub fn append(&mut self, other: &ExponentialSequence<T>) {
        debug_assert_eq!(self.terms, other.terms);
        for &(t, c) in &other.ops {
            self.push(t, c);
        }
    }

    pub fn terms(&self) -> usize {
        self.terms
    }

    pub fn ops(&self) -> &[(usize, T)] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// The sequence of the inverse operator: reversed order, negated coefficients.
    pub fn inverse(&self) -> Self {
        let mut s = ExponentialSequence::new(self.terms);
        for &(t, c) in self.ops.iter().rev() {
            s.push(t, -c);
        }
        s
    }

    pub fn scaled(&self, factor: T) -> Self {
        let mut s = ExponentialSequence::new(self.terms);
        for &(t, c) in &self.ops {
            s.push(t, c * factor);
        }
        s
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.ops.len();
        (0..n / 2).all(|i| self.ops[i] == self.ops[n - 1 - i])
    }

    /// Sum of the coefficients attached to each term.
    pub fn term_sums(&self) -> Vec<T> {
        let mut s = alloc::vec![T::zero(); self.terms];
        for &(t, c) in &self.ops {
            s[t] += c;
        }
        s
    }

    pub fn convert<U: Real>(&self) -> ExponentialSequence<U> {
        ExponentialSequence {
            terms: self.terms,
            ops: self.ops.iter().map(|&(t, c)| (t, convert::<T, U>(c))).collect(),
        }
    }
}

/// Append the symmetric second-order block for `terms` Hamiltonian terms:
/// `H_1(c/2) .. H_{J-1}(c/2) H_J(c) H_{J-1}(c/2) .. H_1(c/2)`.
pub fn push_s2<T: Real>(seq: &mut ExponentialSequence<T>, c: T) {
    let j = seq.terms();
    let half = c / T::from_f64(2.0);
    for t in 0..j - 1 {
        seq.push(t, half);
    }
    seq.push(j - 1, c);
    for t in (0..j - 1).rev() {
        seq.push(t, half);
    }
}

/// Weights `w_0..w_m` of a symmetric composition of second-order stages.
#[derive(Debug, Clone, PartialEq)]
pub struct StageCoefficients<T> {
    pub w: Vec<T>,
    pub order: u32,
    pub label: String,
}

impl<T: Real> StageCoefficients<T> {
    pub fn new(w: Vec<T>, order: u32, label: impl Into<String>) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::InvalidArgument("empty stage weights"));
        }
        Ok(StageCoefficients {
            w,
            order,
            label: label.into(),
        })
    }

    /// Build from the free weights `w_1..w_m`, fixing `w_0 = 1 - 2 sum w_j`.
    pub fn from_free(free: &[T], order: u32, label: impl Into<String>) -> Self {
        let mut w = Vec::with_capacity(free.len() + 1);
        w.push(central_weight(free));
        w.extend_from_slice(free);
        StageCoefficients {
            w,
            order,
            label: label.into(),
        }
    }

    pub fn m(&self) -> usize {
        self.w.len() - 1
    }

    /// Number of second-order stages, `M = 2m + 1`.
    pub fn stage_count(&self) -> usize {
        2 * self.m() + 1
    }

    pub fn free(&self) -> &[T] {
        &self.w[1..]
    }

    /// Stage weights in application order, `w_m .. w_0 .. w_m`.
    pub fn stages(&self) -> Vec<T> {
        let mut s: Vec<T> = self.w[1..].iter().rev().copied().collect();
        s.extend_from_slice(&self.w);
        s
    }

    /// `1 - (w_0 + 2 sum w_j)`; zero for a consistent formula.
    pub fn consistency_defect(&self) -> T {
        let mut s = self.w[0];
        for &x in &self.w[1..] {
            s += x + x;
        }
        T::one() - s
    }

    pub fn convert<U: Real>(&self) -> StageCoefficients<U> {
        StageCoefficients {
            w: self.w.iter().map(|&x| convert::<T, U>(x)).collect(),
            order: self.order,
            label: self.label.clone(),
        }
    }
}

pub fn central_weight<T: Real>(free: &[T]) -> T {
    let mut s = T::zero();
    for &x in free {
        s += x;
    }
    T::one() - (s + s)
}

/// A kernel conjugated by a processor, `P Σ P^{-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProcessedFormula<T> {
    pub kernel: StageCoefficients<T>,
    /// `γ_1..γ_G`, summing to zero.
    pub gammas: Vec<T>,
    pub order: u32,
}

impl<T: Real> ProcessedFormula<T> {
    /// Takes `γ_1..γ_{G-1}` and appends the last one so the sum vanishes.
    pub fn from_partial(kernel: StageCoefficients<T>, partial: &[T], order: u32) -> Self {
        let mut gammas = partial.to_vec();
        let mut s = T::zero();
        for &g in partial {
            s += g;
        }
        gammas.push(-s);
        ProcessedFormula {
            kernel,
            gammas,
            order,
        }
    }

    pub fn new(kernel: StageCoefficients<T>, gammas: Vec<T>, order: u32) -> Result<Self> {
        let mut s = T::zero();
        let mut scale = T::zero();
        for &g in &gammas {
            s += g;
            scale = scale.max(g.abs());
        }
        let tol = T::epsilon() * T::from_f64(64.0) * (scale + T::one());
        if s.abs() > tol {
            return Err(Error::InvalidArgument("processor coefficients must sum to zero"));
        }
        Ok(ProcessedFormula {
            kernel,
            gammas,
            order,
        })
    }

    pub fn convert<U: Real>(&self) -> ProcessedFormula<U> {
        ProcessedFormula {
            kernel: self.kernel.convert(),
            gammas: self.gammas.iter().map(|&x| convert::<T, U>(x)).collect(),
            order: self.order,
        }
    }
}

/// Expand a symmetric composition into its merged exponential sequence.
pub fn expand<T: Real>(f: &StageCoefficients<T>, t_scale: T, terms: usize) -> Result<ExponentialSequence<T>> {
    if terms < 2 {
        return Err(Error::InvalidArgument("need at least two Hamiltonian terms"));
    }
    if f.w.is_empty() {
        return Err(Error::InvalidArgument("empty stage weights"));
    }
    Ok(expand_stages(&f.stages(), t_scale, terms))
}

/// Expand an explicit list of stage weights (applied left to right).
pub fn expand_stages<T: Real>(stages: &[T], t_scale: T, terms: usize) -> ExponentialSequence<T> {
    let mut seq = ExponentialSequence::new(terms);
    for &w in stages {
        push_s2(&mut seq, w * t_scale);
    }
    seq
}

/// `Q(τ) = S2(τγ_G) .. S2(τγ_1)` followed by `Q(-τ)`.
pub fn processor_sequence<T: Real>(gammas: &[T], t_scale: T, terms: usize) -> ExponentialSequence<T> {
    let mut p = ExponentialSequence::new(terms);
    for sign in [T::one(), -T::one()] {
        for &g in gammas.iter().rev() {
            push_s2(&mut p, sign * g * t_scale);
        }
    }
    p
}

/// Expand `P Σ^n P^{-1}`.
pub fn expand_processed_power<T: Real>(
    f: &ProcessedFormula<T>,
    t_scale: T,
    terms: usize,
    n: usize,
) -> Result<ExponentialSequence<T>> {
    let kernel = expand(&f.kernel, t_scale, terms)?;
    let p = processor_sequence(&f.gammas, t_scale, terms);
    let mut seq = p.clone();
    for _ in 0..n {
        seq.append(&kernel);
    }
    seq.append(&p.inverse());
    Ok(seq)
}

/// Expand `P Σ P^{-1}` with `P = Q(τ)Q(-τ)`.
pub fn expand_processed<T: Real>(f: &ProcessedFormula<T>, t_scale: T, terms: usize) -> Result<ExponentialSequence<T>> {
    expand_processed_power(f, t_scale, terms, 1)
}

/// Stage weights of the first fractal construction
/// `S_{2κ}(t) = S_{2κ-2}(s t) S_{2κ-2}((1-2s) t) S_{2κ-2}(s t)`.
pub fn suzuki_first_stages<T: Real>(kappa: u32) -> Result<Vec<T>> {
    suzuki_stages(kappa, 3)
}

/// Stage weights of the second construction with five sub-steps
/// `u, u, 1-4u, u, u`.
pub fn suzuki_second_stages<T: Real>(kappa: u32) -> Result<Vec<T>> {
    suzuki_stages(kappa, 5)
}

/// Scale factor `s_κ = 1/(2 - 2^{1/(2κ-1)})` (`parts = 3`) or
/// `u_κ = 1/(4 - 4^{1/(2κ-1)})` (`parts = 5`).
pub fn suzuki_factor<T: Real>(kappa: u32, parts: u32) -> T {
    let base = T::from_i64(((parts - 1) / 2 * 2) as i64);
    let root = base.root(2 * kappa - 1);
    T::one() / (base - root)
}

fn suzuki_stages<T: Real>(kappa: u32, parts: u32) -> Result<Vec<T>> {
    if kappa == 0 {
        return Err(Error::InvalidArgument("kappa must be at least 1"));
    }
    let mut stages = alloc::vec![T::one()];
    for k in 2..=kappa {
        let s = suzuki_factor::<T>(k, parts);
        let mid = T::one() - T::from_i64(parts as i64 - 1) * s;
        let mut next = Vec::with_capacity(stages.len() * parts as usize);
        for i in 0..parts {
            let f = if i == parts / 2 { mid } else { s };
            next.extend(stages.iter().map(|&x| x * f));
        }
        stages = next;
    }
    Ok(stages)
}

/// Palindromic stage list of odd length as a [`StageCoefficients`].
pub fn from_palindrome<T: Real>(stages: &[T], order: u32, label: impl Into<String>) -> Result<StageCoefficients<T>> {
    let n = stages.len();
    if n.is_multiple_of(2) || (0..n / 2).any(|i| stages[i] != stages[n - 1 - i]) {
        return Err(Error::InvalidArgument("stage list is not an odd-length palindrome"));
    }
    StageCoefficients::new(stages[n / 2..].to_vec(), order, label)
}

pub fn suzuki_first<T: Real>(kappa: u32, terms: usize) -> Result<ExponentialSequence<T>> {
    Ok(expand_stages(&suzuki_first_stages::<T>(kappa)?, T::one(), terms))
}

pub fn suzuki_second<T: Real>(kappa: u32, terms: usize) -> Result<ExponentialSequence<T>> {
    Ok(expand_stages(&suzuki_second_stages::<T>(kappa)?, T::one(), terms))
}

/// Merged exponential count of a symmetric composition of `stages` stages.
pub fn exponential_count(stages: usize, terms: usize) -> usize {
    2 * stages * (terms - 1) + 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_expansion() {
        let f = StageCoefficients::new(alloc::vec![1.0], 2, "S2").unwrap();
        let seq = expand(&f, 1.0, 2).unwrap();
        assert_eq!(seq.ops(), &[(0, 0.5), (1, 1.0), (0, 0.5)]);
        let seq3 = expand(&f, 1.0, 3).unwrap();
        assert_eq!(seq3.ops(), &[(0, 0.5), (1, 0.5), (2, 1.0), (1, 0.5), (0, 0.5)]);
        assert_eq!(expand(&f, 0.5, 2).unwrap().ops()[0], (0, 0.25));
    }

    #[test]
    fn suzuki_counts_and_factor() {
        let s2: f64 = suzuki_factor(2, 3);
        assert!((s2 - 1.351207191959658).abs() < 1e-14);
        assert_eq!(suzuki_first::<f64>(1, 2).unwrap().len(), 3);
        assert_eq!(suzuki_first::<f64>(2, 2).unwrap().len(), 7);
        assert_eq!(suzuki_second::<f64>(2, 2).unwrap().len(), 11);
        assert_eq!(suzuki_second::<f64>(3, 2).unwrap().len(), 51);
        assert!(suzuki_first::<f64>(0, 2).is_err());
    }

    #[test]
    fn merging_drops_cancelled_factors() {
        let s = ExponentialSequence::from_ops(2, [(0, 1.0), (1, 2.0), (1, -2.0), (0, 3.0)]).unwrap();
        assert_eq!(s.ops(), &[(0, 4.0)]);
        let id = s.clone();
        let mut both = s.clone();
        both.append(&id.inverse());
        assert!(both.is_empty());
    }

    #[test]
    fn processed_with_zero_processor_is_kernel() {
        let k = StageCoefficients::from_free(&[0.3, -0.2], 4, "k");
        let p = ProcessedFormula::from_partial(k.clone(), &[0.0, 0.0], 4);
        assert_eq!(expand_processed(&p, 1.0, 2).unwrap(), expand(&k, 1.0, 2).unwrap());
    }

    #[test]
    fn processor_sum_checked() {
        let k = StageCoefficients::from_free(&[0.3], 4, "k");
        assert!(ProcessedFormula::new(k.clone(), alloc::vec![0.1, 0.2], 4).is_err());
        assert!(ProcessedFormula::new(k, alloc::vec![0.1, -0.1], 4).is_ok());
    }
}

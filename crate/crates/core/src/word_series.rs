//! Truncated power series in two non-commuting letters `X`, `Y`.
//!
//! A word is encoded as an integer with a leading marker bit: strip the most
//! significant set bit and read the rest left to right with `0 -> X`,
//! `1 -> Y`. The empty word is `1`, words of length `L` occupy codes
//! `2^L ..= 2^{L+1}-1`, and a series truncated at order `k` is a dense
//! vector of `2^{k+1}-1` coefficients indexed by `code - 1`.
//!
//! Word length carries the power of the step size, so the exact evolution
//! `exp(X + Y)` has coefficient `1/p!` on every word of length `p`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::formulas::ExponentialSequence;
use crate::real::Real;

/// Largest supported truncation order (4M coefficients).
pub const MAX_ORDER: usize = 21;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    #[inline]
    fn bit(self) -> u32 {
        match self {
            Letter::X => 0,
            Letter::Y => 1,
        }
    }

    pub fn from_term(term: usize) -> Option<Letter> {
        match term {
            0 => Some(Letter::X),
            1 => Some(Letter::Y),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WordIndex(u32);

impl WordIndex {
    pub const EMPTY: WordIndex = WordIndex(1);

    pub fn from_code(code: u32) -> Option<WordIndex> {
        (code >= 1).then_some(WordIndex(code))
    }

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        (31 - self.0.leading_zeros()) as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 1
    }

    pub fn letters(self) -> Vec<Letter> {
        decode_word(self)
    }
}

pub fn encode_word(letters: &[Letter]) -> WordIndex {
    assert!(letters.len() < 32, "word too long to encode");
    let mut code = 1u32;
    for l in letters {
        code = (code << 1) | l.bit();
    }
    WordIndex(code)
}

pub fn decode_word(w: WordIndex) -> Vec<Letter> {
    let n = w.len();
    (0..n)
        .rev()
        .map(|i| if (w.0 >> i) & 1 == 0 { Letter::X } else { Letter::Y })
        .collect()
}

/// Number of coefficients of a series truncated at order `k`.
pub const fn series_len(k: usize) -> usize {
    (1usize << (k + 1)) - 1
}

#[inline]
fn word_len(code: usize) -> usize {
    (usize::BITS - 1 - code.leading_zeros()) as usize
}

#[derive(Debug, Clone, PartialEq)]
pub struct WordPoly<T> {
    order_cap: usize,
    coeffs: Vec<T>,
}

impl<T: Real> WordPoly<T> {
    fn check_order(k: usize) -> Result<()> {
        if k > MAX_ORDER {
            return Err(Error::InvalidArgument("order cap too large for a dense word series"));
        }
        Ok(())
    }

    pub fn zero(k: usize) -> Result<Self> {
        Self::check_order(k)?;
        Ok(WordPoly {
            order_cap: k,
            coeffs: vec![T::zero(); series_len(k)],
        })
    }

    pub fn identity(k: usize) -> Result<Self> {
        let mut p = Self::zero(k)?;
        p.coeffs[0] = T::one();
        Ok(p)
    }

    pub fn from_coeffs(k: usize, coeffs: Vec<T>) -> Result<Self> {
        Self::check_order(k)?;
        if coeffs.len() != series_len(k) {
            return Err(Error::DimensionMismatch(coeffs.len(), series_len(k)));
        }
        Ok(WordPoly { order_cap: k, coeffs })
    }

    pub fn order_cap(&self) -> usize {
        self.order_cap
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of a word; zero for words beyond the cap.
    pub fn coeff(&self, w: WordIndex) -> T {
        self.coeffs.get(w.code() as usize - 1).copied().unwrap_or_else(T::zero)
    }

    pub fn set_coeff(&mut self, w: WordIndex, c: T) {
        let i = w.code() as usize - 1;
        assert!(i < self.coeffs.len(), "word beyond the order cap");
        self.coeffs[i] = c;
    }

    /// `exp(c * letter)` truncated at order `k`.
    pub fn exp_letter(letter: Letter, c: T, k: usize) -> Result<Self> {
        let mut p = Self::identity(k)?;
        p.mul_exp_letter(letter, c);
        Ok(p)
    }

    /// Multiply on the right by `exp(c * letter)` in place.
    ///
    /// The coefficient of `w` becomes the sum over trailing runs `w = u letter^j`
    /// of `self[u] c^j / j!`. Prefixes have smaller codes, so sweeping codes
    /// downward reads only values that have not been overwritten yet.
    pub fn mul_exp_letter(&mut self, letter: Letter, c: T) {
        let k = self.order_cap;
        let bit = letter.bit() as usize;
        let mut taylor = Vec::with_capacity(k + 1);
        let mut f = T::one();
        taylor.push(f);
        for j in 1..=k {
            f = f * c / T::from_i64(j as i64);
            taylor.push(f);
        }
        let a = &mut self.coeffs;
        for code in (2..=a.len()).rev() {
            if code & 1 != bit {
                continue;
            }
            let len = word_len(code);
            let mut acc = a[code - 1];
            let mut cc = code;
            let mut j = 0;
            while j < len && cc & 1 == bit {
                cc >>= 1;
                j += 1;
                acc += a[cc - 1] * taylor[j];
            }
            a[code - 1] = acc;
        }
    }

    /// Truncated product: coefficient of `w` is the sum over splittings `w = u v`.
    pub fn multiply(&self, other: &WordPoly<T>) -> Result<WordPoly<T>> {
        if self.order_cap != other.order_cap {
            return Err(Error::OrderCapMismatch(self.order_cap, other.order_cap));
        }
        let k = self.order_cap;
        let mut out = vec![T::zero(); series_len(k)];
        for (i, &x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let u = i + 1;
            let lu = word_len(u);
            for lv in 0..=(k - lu) {
                let start = 1usize << lv;
                let shifted = u << lv;
                for v in start..(start << 1) {
                    let y = other.coeffs[v - 1];
                    if !y.is_zero() {
                        out[(shifted | (v - start)) - 1] += x * y;
                    }
                }
            }
        }
        Ok(WordPoly { order_cap: k, coeffs: out })
    }

    pub fn sub(&self, other: &WordPoly<T>) -> Result<WordPoly<T>> {
        if self.order_cap != other.order_cap {
            return Err(Error::OrderCapMismatch(self.order_cap, other.order_cap));
        }
        Ok(WordPoly {
            order_cap: self.order_cap,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| a - b).collect(),
        })
    }

    /// Coefficients `1/p!` on every word of length `p`.
    pub fn exact_series(k: usize) -> Result<Self> {
        let mut p = Self::zero(k)?;
        let mut f = T::one();
        for len in 0..=k {
            if len > 0 {
                f /= T::from_i64(len as i64);
            }
            for c in &mut p.coeffs[(1 << len) - 1..(1 << (len + 1)) - 1] {
                *c = f;
            }
        }
        Ok(p)
    }

    /// Ordered product of the exponentials in a two-term sequence.
    pub fn formula_series(seq: &ExponentialSequence<T>, k: usize) -> Result<Self> {
        if seq.terms() != 2 {
            return Err(Error::InvalidArgument("word series are defined for two terms"));
        }
        let mut p = Self::identity(k)?;
        for &(t, c) in seq.ops() {
            p.mul_exp_letter(Letter::from_term(t).expect("two-term sequence"), c);
        }
        Ok(p)
    }

    /// Largest magnitude among words of length `lo..=hi`.
    pub fn max_abs_in(&self, lo: usize, hi: usize) -> T {
        let hi = hi.min(self.order_cap);
        let mut m = T::zero();
        if lo > hi {
            return m;
        }
        for &c in &self.coeffs[(1 << lo) - 1..(1 << (hi + 1)) - 1] {
            m = m.max(c.abs());
        }
        m
    }
}

/// `formula_series(seq, k) - exact_series(k)` as a flat vector indexed by
/// `code - 1` (the identity entry is always zero).
pub fn residual<T: Real>(seq: &ExponentialSequence<T>, k: usize) -> Result<Vec<T>> {
    let mut p = WordPoly::formula_series(seq, k)?;
    let mut f = T::one();
    for len in 0..=k {
        if len > 0 {
            f /= T::from_i64(len as i64);
        }
        for c in &mut p.coeffs[(1 << len) - 1..(1 << (len + 1)) - 1] {
            *c -= f;
        }
    }
    Ok(p.coeffs)
}

/// Maximum absolute residual over words of length `1..=k`.
pub fn residual_max<T: Real>(seq: &ExponentialSequence<T>, k: usize) -> Result<T> {
    Ok(residual(seq, k)?.iter().fold(T::zero(), |m, &x| m.max(x.abs())))
}

/// Maximum residual over words of exactly length `p`, for `p = 1..=k`.
pub fn residual_by_length<T: Real>(seq: &ExponentialSequence<T>, k: usize) -> Result<Vec<T>> {
    let r = residual(seq, k)?;
    Ok((1..=k)
        .map(|len| {
            r[(1 << len) - 1..(1 << (len + 1)) - 1]
                .iter()
                .fold(T::zero(), |m, &x| m.max(x.abs()))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::{X, Y};

    #[test]
    fn encoding_examples() {
        assert_eq!(encode_word(&[]).code(), 1);
        assert_eq!(encode_word(&[X]).code(), 2);
        assert_eq!(encode_word(&[Y]).code(), 3);
        assert_eq!(encode_word(&[X, Y]).code(), 5);
        assert_eq!(encode_word(&[Y, X]).code(), 6);
        for code in 1..200u32 {
            let w = WordIndex::from_code(code).unwrap();
            assert_eq!(encode_word(&decode_word(w)), w);
        }
        assert!(WordIndex::from_code(0).is_none());
    }

    #[test]
    fn exp_letter_examples() {
        let p = WordPoly::exp_letter(X, 1.0, 2).unwrap();
        assert_eq!(p.coeff(encode_word(&[])), 1.0);
        assert_eq!(p.coeff(encode_word(&[X])), 1.0);
        assert_eq!(p.coeff(encode_word(&[X, X])), 0.5);
        assert_eq!(p.coeff(encode_word(&[X, Y])), 0.0);
        assert_eq!(WordPoly::exp_letter(Y, 0.0, 3).unwrap(), WordPoly::identity(3).unwrap());
        let q = WordPoly::exp_letter(X, -0.5, 1).unwrap();
        assert_eq!(q.coeffs(), &[1.0, -0.5, 0.0]);
    }

    #[test]
    fn multiply_examples() {
        let e = WordPoly::exp_letter(X, 1.0, 1).unwrap();
        assert_eq!(e.multiply(&e).unwrap().coeffs(), &[1.0, 2.0, 0.0]);
        let p = WordPoly::exp_letter(Y, 0.7, 3).unwrap();
        assert_eq!(p.multiply(&WordPoly::identity(3).unwrap()).unwrap(), p);
        let (a, b) = (0.3, -1.7);
        let ab = WordPoly::exp_letter(X, a, 2)
            .unwrap()
            .multiply(&WordPoly::exp_letter(Y, b, 2).unwrap())
            .unwrap();
        assert_eq!(ab.coeff(encode_word(&[X, Y])), a * b);
        assert_eq!(ab.coeff(encode_word(&[Y, X])), 0.0);
        assert!(e.multiply(&p).is_err());
    }

    #[test]
    fn in_place_matches_convolution() {
        let mut p = WordPoly::exp_letter(X, 0.4, 5).unwrap();
        p.mul_exp_letter(Y, -1.1);
        p.mul_exp_letter(X, 0.25);
        let q = WordPoly::exp_letter(X, 0.4, 5)
            .unwrap()
            .multiply(&WordPoly::exp_letter(Y, -1.1, 5).unwrap())
            .unwrap()
            .multiply(&WordPoly::exp_letter(X, 0.25, 5).unwrap())
            .unwrap();
        for (a, b) in p.coeffs().iter().zip(q.coeffs()) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn exact_series_examples() {
        let e = WordPoly::<f64>::exact_series(2).unwrap();
        assert_eq!(e.coeffs(), &[1.0, 1.0, 1.0, 0.5, 0.5, 0.5, 0.5]);
        assert_eq!(WordPoly::<f64>::exact_series(0).unwrap().coeffs(), &[1.0]);
        let e3 = WordPoly::<f64>::exact_series(3).unwrap();
        assert!((e3.coeff(encode_word(&[X, Y, X])) - 1.0 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn s2_series() {
        let seq = ExponentialSequence::from_ops(2, [(0, 0.5), (1, 1.0), (0, 0.5)]).unwrap();
        assert_eq!(
            WordPoly::formula_series(&seq, 2).unwrap(),
            WordPoly::exact_series(2).unwrap()
        );
        let s3 = WordPoly::formula_series(&seq, 3).unwrap();
        assert!((s3.coeff(encode_word(&[X, X, Y])) - 0.125).abs() < 1e-16);
        assert!(residual(&seq, 2).unwrap().iter().all(|&x| x.abs() < 1e-16));
        let r3 = residual(&seq, 3).unwrap();
        assert!((r3[encode_word(&[X, X, Y]).code() as usize - 1] + 1.0 / 24.0).abs() < 1e-16);
        let empty = ExponentialSequence::<f64>::new(2);
        assert_eq!(WordPoly::formula_series(&empty, 3).unwrap(), WordPoly::identity(3).unwrap());
    }
}

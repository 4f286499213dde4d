//! Closed-form order conditions of symmetric compositions.
//!
//! The logarithm of a symmetric composition is a Lie series in the odd
//! graded parts `a_1, a_3, ..` of `log S2`. Its coordinates in a fixed
//! commutator basis are polynomials in the weights, built up one stage pair
//! at a time: going from `m` to `m + 1` wraps the composition as
//! `S2(w) Σ_m S2(w)` and updates every coordinate from the old ones.
//!
//! Basis (right-nested, `[x, y, z] = [x, [y, z]]`):
//!
//! | slot | element | slot | element |
//! |------|---------|------|---------|
//! | `B5` | `[a1, a1, a3]` | `B9` | `[a1, a1, a7]` |
//! | `B7` | `[a1, a1, a5]` | `D9_1` | `[a1, a1, a1, a1, a5]` |
//! | `C7` | `[a3, a3, a1]` | `D9_2` | `[a3, a1, a1, a1, a3]` |
//! | `D7` | `[a1, a1, a1, a1, a3]` | `D9_3` | `[a1, a3, a1, a1, a3]` |
//! | `E9` | `[a1, a1, a1, a1, a1, a1, a3]` | | |
//!
//! The three grade-9 slots `C9_*` come from the coordinates `g1`, `g3` on
//! `[a1, a3, a5]` and `[a5, a1, a3]`, redistributed over the three triple
//! commutators of `a1, a3, a5` so that `C9_2 = C9_1 + C9_3` (the Jacobi
//! identity leaves only two of them independent).

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::formulas::{expand, expand_processed, ProcessedFormula, StageCoefficients};
use crate::real::Real;
use crate::word_series;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    Plain,
    Kernel,
}

/// Named condition-polynomial values for one weight vector.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionSet<T> {
    pub order: u32,
    pub values: Vec<(&'static str, T)>,
    pub kind: ConditionKind,
}

impl<T: Real> ConditionSet<T> {
    pub fn get(&self, name: &str) -> Option<T> {
        self.values.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }

    /// Target value of a slot: `A1 = 1`, everything else zero.
    pub fn target(name: &str) -> T {
        if name == "A1" {
            T::one()
        } else {
            T::zero()
        }
    }

    /// Largest deviation from the targets over the independent slots.
    pub fn max_defect(&self) -> T {
        self.values
            .iter()
            .filter(|(n, _)| *n != "C9_2")
            .fold(T::zero(), |m, &(n, v)| m.max((v - Self::target(n)).abs()))
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Coords<T> {
    a1: T,
    a3: T,
    a5: T,
    a7: T,
    a9: T,
    b5: T,
    b7: T,
    c7: T,
    d7: T,
    b9: T,
    g1: T,
    g3: T,
    d91: T,
    d92: T,
    d93: T,
    e9: T,
}

#[inline(always)]
fn r<T: Real>(p: i64, q: i64) -> T {
    T::from_i64(p) / T::from_i64(q)
}

fn powers<T: Real>(x: T, n: usize) -> [T; 10] {
    let mut p = [T::one(); 10];
    for i in 1..=n.min(9) {
        p[i] = p[i - 1] * x;
    }
    p
}

/// Evaluate the coordinates up to grade `level` (5, 7 or 9) for weights `w_0..w_m`.
fn coords<T: Real>(w: &[T], level: u32) -> Coords<T> {
    let w0 = powers(w[0], 9);
    let mut c = Coords {
        a1: w0[1],
        a3: w0[3],
        a5: w0[5],
        ..Default::default()
    };
    if level >= 7 {
        c.a7 = w0[7];
    }
    if level >= 9 {
        c.a9 = w0[9];
    }
    let two = T::from_f64(2.0);
    for &x in &w[1..] {
        let o = c;
        let mut n = o;
        let wp = powers(x, 9);
        let a1p = powers(o.a1, 6);
        n.a1 += two * wp[1];
        n.a3 += two * wp[3];
        n.a5 += two * wp[5];
            n.b5 += r::<T>(1, 6) * a1p[2] * wp[3]
                + r::<T>(-1, 6) * o.a1 * o.a3 * wp[1]
                + r::<T>(1, 6) * o.a1 * wp[4]
                + r::<T>(-1, 6) * o.a3 * wp[2];
        if level >= 7 {
            n.a7 += two * wp[7];
            n.b7 += r::<T>(1, 6) * a1p[2] * wp[5]
                + r::<T>(-1, 6) * o.a1 * o.a5 * wp[1]
                + r::<T>(1, 6) * o.a1 * wp[6]
                + r::<T>(-1, 6) * o.a5 * wp[2];
            n.c7 += r::<T>(-1, 6) * o.a1 * o.a3 * wp[3]
                + r::<T>(-1, 6) * o.a1 * wp[6]
                + r::<T>(1, 6) * o.a3 * o.a3 * wp[1]
                + r::<T>(1, 6) * o.a3 * wp[4];
            n.d7 += r::<T>(-1, 360) * a1p[4] * wp[3]
                + r::<T>(1, 360) * a1p[3] * o.a3 * wp[1]
                + r::<T>(-1, 45) * a1p[3] * wp[4]
                + r::<T>(1, 45) * a1p[2] * o.a3 * wp[2]
                + r::<T>(-7, 180) * a1p[2] * wp[5]
                + r::<T>(7, 180) * o.a1 * o.a3 * wp[3]
                + r::<T>(-1, 6) * o.a1 * o.b5 * wp[1]
                + r::<T>(-7, 360) * o.a1 * wp[6]
                + r::<T>(7, 360) * o.a3 * wp[4]
                + r::<T>(-1, 6) * o.b5 * wp[2];
        }
        if level >= 9 {
            n.a9 += two * wp[9];
            n.b9 += r::<T>(1, 6) * a1p[2] * wp[7]
                + r::<T>(-1, 6) * o.a1 * o.a7 * wp[1]
                + r::<T>(1, 6) * o.a1 * wp[8]
                + r::<T>(-1, 6) * o.a7 * wp[2];
            n.g1 += r::<T>(1, 3) * o.a1 * o.a3 * wp[5]
                + r::<T>(-1, 6) * o.a1 * o.a5 * wp[3]
                + r::<T>(1, 6) * o.a1 * wp[8]
                + r::<T>(-1, 6) * o.a3 * o.a5 * wp[1]
                + r::<T>(1, 6) * o.a3 * wp[6]
                + r::<T>(-1, 3) * o.a5 * wp[4];
            n.g3 += r::<T>(1, 6) * o.a1 * o.a3 * wp[5]
                + r::<T>(1, 6) * o.a1 * o.a5 * wp[3]
                + r::<T>(1, 3) * o.a1 * wp[8]
                + r::<T>(-1, 3) * o.a3 * o.a5 * wp[1]
                + r::<T>(-1, 6) * o.a3 * wp[6]
                + r::<T>(-1, 6) * o.a5 * wp[4];
            n.d91 += r::<T>(-1, 360) * a1p[4] * wp[5]
                + r::<T>(1, 360) * a1p[3] * o.a5 * wp[1]
                + r::<T>(-1, 45) * a1p[3] * wp[6]
                + r::<T>(1, 45) * a1p[2] * o.a5 * wp[2]
                + r::<T>(-7, 180) * a1p[2] * wp[7]
                + r::<T>(7, 180) * o.a1 * o.a5 * wp[3]
                + r::<T>(-1, 6) * o.a1 * o.b7 * wp[1]
                + r::<T>(-7, 360) * o.a1 * wp[8]
                + r::<T>(7, 360) * o.a5 * wp[4]
                + r::<T>(-1, 6) * o.b7 * wp[2];
            n.d92 += r::<T>(-1, 360) * a1p[3] * o.a3 * wp[3]
                + r::<T>(1, 90) * a1p[3] * wp[6]
                + r::<T>(1, 360) * a1p[2] * o.a3 * o.a3 * wp[1]
                + r::<T>(-2, 45) * a1p[2] * o.a3 * wp[4]
                + r::<T>(-1, 60) * a1p[2] * wp[7]
                + r::<T>(1, 30) * o.a1 * o.a3 * o.a3 * wp[2]
                + r::<T>(-1, 180) * o.a1 * o.a3 * wp[5]
                + r::<T>(1, 6) * o.a1 * o.b5 * wp[3]
                + r::<T>(-7, 360) * o.a1 * wp[8]
                + r::<T>(1, 45) * o.a3 * o.a3 * wp[3]
                + r::<T>(-1, 3) * o.a3 * o.b5 * wp[1]
                + r::<T>(7, 360) * o.a3 * wp[6]
                + r::<T>(-1, 6) * o.b5 * wp[4];
            n.d93 += r::<T>(-1, 180) * a1p[3] * o.a3 * wp[3]
                + r::<T>(-1, 30) * a1p[3] * wp[6]
                + r::<T>(1, 180) * a1p[2] * o.a3 * o.a3 * wp[1]
                + r::<T>(1, 45) * a1p[2] * o.a3 * wp[4]
                + r::<T>(-11, 180) * a1p[2] * wp[7]
                + r::<T>(1, 90) * o.a1 * o.a3 * o.a3 * wp[2]
                + r::<T>(2, 45) * o.a1 * o.a3 * wp[5]
                + r::<T>(-1, 3) * o.a1 * o.b5 * wp[3]
                + r::<T>(1, 6) * o.a1 * o.c7 * wp[1]
                + r::<T>(-7, 180) * o.a1 * wp[8]
                + r::<T>(1, 60) * o.a3 * o.a3 * wp[3]
                + r::<T>(1, 6) * o.a3 * o.b5 * wp[1]
                + r::<T>(7, 180) * o.a3 * wp[6]
                + r::<T>(-1, 6) * o.b5 * wp[4]
                + r::<T>(1, 6) * o.c7 * wp[2];
            n.e9 += r::<T>(1, 15120) * a1p[6] * wp[3]
                + r::<T>(-1, 15120) * a1p[5] * o.a3 * wp[1]
                + r::<T>(1, 1260) * a1p[5] * wp[4]
                + r::<T>(-1, 1260) * a1p[4] * o.a3 * wp[2]
                + r::<T>(53, 15120) * a1p[4] * wp[5]
                + r::<T>(-53, 15120) * a1p[3] * o.a3 * wp[3]
                + r::<T>(1, 360) * a1p[3] * o.b5 * wp[1]
                + r::<T>(13, 1890) * a1p[3] * wp[6]
                + r::<T>(-13, 1890) * a1p[2] * o.a3 * wp[4]
                + r::<T>(1, 45) * a1p[2] * o.b5 * wp[2]
                + r::<T>(31, 5040) * a1p[2] * wp[7]
                + r::<T>(-31, 5040) * o.a1 * o.a3 * wp[5]
                + r::<T>(7, 180) * o.a1 * o.b5 * wp[3]
                + r::<T>(-1, 6) * o.a1 * o.d7 * wp[1]
                + r::<T>(31, 15120) * o.a1 * wp[8]
                + r::<T>(-31, 15120) * o.a3 * wp[6]
                + r::<T>(7, 360) * o.b5 * wp[4]
                + r::<T>(-1, 6) * o.d7 * wp[2];
        }
        c = n;
    }
    c
}

fn set_for<T: Real>(c: &Coords<T>, order: u32) -> ConditionSet<T> {
    let mut values = alloc::vec![("A1", c.a1), ("A3", c.a3), ("A5", c.a5), ("B5", c.b5)];
    if order >= 8 {
        values.extend([("A7", c.a7), ("B7", c.b7), ("C7", c.c7), ("D7", c.d7)]);
    }
    if order >= 10 {
        let three = T::from_f64(3.0);
        let (g1, g3) = (c.g1, c.g3);
        values.extend([
            ("A9", c.a9),
            ("B9", c.b9),
            ("C9_1", (g1 + g1 - g3) / three),
            ("C9_2", (g1 + g3) / three),
            ("C9_3", (g3 + g3 - g1) / three),
            ("D9_1", c.d91),
            ("D9_2", c.d92),
            ("D9_3", c.d93),
            ("E9", c.e9),
        ]);
    }
    ConditionSet {
        order,
        values,
        kind: ConditionKind::Plain,
    }
}

/// `A1, A3, A5, B5`.
pub fn eval_order6<T: Real>(f: &StageCoefficients<T>) -> ConditionSet<T> {
    set_for(&coords(&f.w, 5), 6)
}

/// Adds the grade-7 slots `A7, B7, C7, D7`.
pub fn eval_order8<T: Real>(f: &StageCoefficients<T>) -> ConditionSet<T> {
    set_for(&coords(&f.w, 7), 8)
}

/// All slots through grade 9.
pub fn eval_order10<T: Real>(f: &StageCoefficients<T>) -> ConditionSet<T> {
    set_for(&coords(&f.w, 9), 10)
}

/// Independent conditions other than `A1` for order `k`, evaluated at the
/// full weight vector `w_0..w_m`. With `w_0` eliminated these are the
/// equations a plain search has to zero.
pub fn reduced_conditions<T: Real>(w: &[T], k: u32) -> Result<Vec<T>> {
    if w.is_empty() {
        return Err(Error::InvalidArgument("empty stage weights"));
    }
    let c = match k {
        2 => return Ok(Vec::new()),
        4 => return Ok(alloc::vec![coords(w, 5).a3]),
        6 => coords(w, 5),
        8 => coords(w, 7),
        10 => coords(w, 9),
        _ => return Err(Error::InvalidArgument("order must be 2, 4, 6, 8 or 10")),
    };
    Ok(set_for(&c, k)
        .values
        .into_iter()
        .filter(|(n, _)| *n != "A1" && *n != "C9_2")
        .map(|(_, v)| v)
        .collect())
}

/// Number of independent conditions besides `A1` at order `k`.
pub fn reduced_count(k: u32) -> Option<usize> {
    match k {
        2 => Some(0),
        4 => Some(1),
        6 => Some(3),
        8 => Some(7),
        10 => Some(15),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy)]
pub enum FormulaRef<'a, T> {
    Plain(&'a StageCoefficients<T>),
    Processed(&'a ProcessedFormula<T>),
}

/// Vector that vanishes exactly when the formula has order `k`.
///
/// Plain formulae of order 2, 4, 6 and 10 use the recursions (`A1 - 1` first,
/// then the independent slots). Order 8 and processed formulae use the
/// word-series residual over all words of length `1..=k`.
pub fn condition_vector<T: Real>(f: FormulaRef<'_, T>, k: u32) -> Result<Vec<T>> {
    if !matches!(k, 2 | 4 | 6 | 8 | 10) {
        return Err(Error::InvalidArgument("order must be 2, 4, 6, 8 or 10"));
    }
    match f {
        FormulaRef::Plain(s) if k != 8 => {
            let mut v = alloc::vec![coords(&s.w, 1).a1 - T::one()];
            v.extend(reduced_conditions(&s.w, k)?);
            Ok(v)
        }
        FormulaRef::Plain(s) => word_residual(&expand(s, T::one(), 2)?, k),
        FormulaRef::Processed(p) => word_residual(&expand_processed(p, T::one(), 2)?, k),
    }
}

fn word_residual<T: Real>(seq: &crate::formulas::ExponentialSequence<T>, k: u32) -> Result<Vec<T>> {
    let mut r = word_series::residual(seq, k as usize)?;
    r.remove(0);
    Ok(r)
}

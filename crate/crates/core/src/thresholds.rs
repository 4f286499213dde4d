//! Crossover thresholds in `T/ε` between two product formulae.
//!
//! With `r` steps of size `t = T/r` and per-step error `f(t)`, the total
//! error is `T f(t)/t`. Two formulae cost the same when `M₁/t₁ = M₂/t₂`,
//! and reach the same error when `f₁(t₁)/t₁ = f₂(t₂)/t₂`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Cost description of one formula: stages `M`, order `k`, constant `c`
/// (χ or ζ, or ξ/ω for the fermionic variant).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FormulaCost {
    pub stages: f64,
    pub order: u32,
    pub constant: f64,
}

impl FormulaCost {
    pub fn new(stages: f64, order: u32, constant: f64) -> Self {
        FormulaCost {
            stages,
            order,
            constant,
        }
    }

    /// The constant that gives `M c^{1/k} = metric`.
    pub fn from_metric(stages: f64, order: u32, metric: f64) -> Self {
        FormulaCost {
            stages,
            order,
            constant: libm::pow(metric / stages, order as f64),
        }
    }

    pub fn metric(&self) -> f64 {
        self.stages * libm::pow(self.constant, 1.0 / self.order as f64)
    }
}

/// Per-step error sampled on increasing `t`, interpolated log-log linearly.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorCurve {
    points: Vec<(f64, f64)>,
}

impl ErrorCurve {
    pub fn new(mut points: Vec<(f64, f64)>) -> Result<Self> {
        points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(core::cmp::Ordering::Equal));
        if points.len() < 2 {
            return Err(Error::InvalidArgument("an error curve needs at least two points"));
        }
        if points.iter().any(|p| !(p.0 > 0.0 && p.1 > 0.0) || !p.0.is_finite() || !p.1.is_finite()) {
            return Err(Error::InvalidArgument("curve points must be positive and finite"));
        }
        if points.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::InvalidArgument("curve abscissae must be distinct"));
        }
        Ok(ErrorCurve { points })
    }

    /// `c t^{k+1}` on the given grid.
    pub fn power_law(constant: f64, order: u32, grid: &[f64]) -> Result<Self> {
        Self::new(grid.iter().map(|&t| (t, constant * libm::pow(t, (order + 1) as f64))).collect())
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn range(&self) -> (f64, f64) {
        (self.points[0].0, self.points[self.points.len() - 1].0)
    }

    /// Interpolated value; `None` outside the sampled range.
    pub fn eval(&self, t: f64) -> Option<f64> {
        let (lo, hi) = self.range();
        if !(t >= lo && t <= hi) {
            return None;
        }
        let i = self.points.partition_point(|p| p.0 < t);
        if i == 0 {
            return Some(self.points[0].1);
        }
        let (a, b) = (self.points[i - 1], self.points[i]);
        let s = libm::log(t / a.0) / libm::log(b.0 / a.0);
        Some(libm::exp(libm::log(a.1) + s * libm::log(b.1 / a.1)))
    }
}

/// `(M₂c₂^{1/k₂} / M₁c₁^{1/k₁})^{1/(1/k₁ - 1/k₂)}`.
pub fn asymptotic_threshold(low: &FormulaCost, high: &FormulaCost) -> Result<f64> {
    if low.order == high.order {
        return Err(Error::InvalidArgument("formulae of equal order have no crossover"));
    }
    if !(low.constant > 0.0 && high.constant > 0.0 && low.stages > 0.0 && high.stages > 0.0) {
        return Err(Error::InvalidArgument("stages and constants must be positive"));
    }
    let e = 1.0 / (1.0 / low.order as f64 - 1.0 / high.order as f64);
    Ok(libm::pow(high.metric() / low.metric(), e))
}

/// A pair of formulae to compare, lower order first, optionally with
/// measured per-step error curves.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdQuery {
    pub low: FormulaCost,
    pub high: FormulaCost,
    pub curves: Option<(ErrorCurve, ErrorCurve)>,
}

impl ThresholdQuery {
    pub fn new(low: FormulaCost, high: FormulaCost) -> Result<Self> {
        if high.order <= low.order {
            return Err(Error::InvalidArgument("the second formula must have the higher order"));
        }
        if !(low.stages > 0.0 && high.stages > 0.0) {
            return Err(Error::InvalidArgument("stage counts must be positive"));
        }
        Ok(ThresholdQuery {
            low,
            high,
            curves: None,
        })
    }

    pub fn with_curves(mut self, low: ErrorCurve, high: ErrorCurve) -> Self {
        self.curves = Some((low, high));
        self
    }

    pub fn asymptotic(&self) -> Result<f64> {
        asymptotic_threshold(&self.low, &self.high)
    }

    pub fn empirical(&self) -> Result<ThresholdReport> {
        let (f1, f2) = self
            .curves
            .as_ref()
            .ok_or(Error::InvalidArgument("empirical threshold needs error curves"))?;
        empirical_threshold(self.low.stages, f1, self.high.stages, f2)
    }
}

/// Result of the non-asymptotic solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThresholdReport {
    /// `T/ε` at the crossover.
    pub ratio: f64,
    pub t1: f64,
    pub t2: f64,
    /// Step counts per unit of simulated time, `1/t₁` and `1/t₂`.
    pub steps_per_time: (f64, f64),
    /// Total exponentials stage count times steps, per unit time (equal at
    /// the crossover).
    pub cost_per_time: (f64, f64),
}

impl ThresholdReport {
    /// Step counts for a given total time.
    pub fn steps(&self, total_time: f64) -> (f64, f64) {
        (total_time / self.t1, total_time / self.t2)
    }
}

/// Relative bisection tolerance in `t₁`.
pub const BISECTION_TOL: f64 = 1e-6;

/// Solve `f₁(t₁) = f₂(t₁M₂/M₁) M₁/M₂` by bisection on `log t₁` and return
/// `T/ε = t₁/f₁(t₁)`.
pub fn empirical_threshold(m1: f64, f1: &ErrorCurve, m2: f64, f2: &ErrorCurve) -> Result<ThresholdReport> {
    if !(m1 > 0.0 && m2 > 0.0) {
        return Err(Error::InvalidArgument("stage counts must be positive"));
    }
    let q = m2 / m1;
    let (a1, b1) = f1.range();
    let (a2, b2) = f2.range();
    let lo = a1.max(a2 / q);
    let hi = b1.min(b2 / q);
    if !(lo < hi) {
        return Err(Error::NoCrossing);
    }
    // g > 0 where the low-order formula has the larger error per unit time
    let g = |t: f64| -> f64 {
        let x = f1.eval(t).expect("inside range");
        let y = f2.eval(t * q).expect("inside range");
        libm::log(x) - libm::log(y / q)
    };
    let (mut l, mut h) = (libm::log(lo), libm::log(hi));
    let (gl, gh) = (g(lo), g(hi));
    if gl == 0.0 {
        h = l;
    } else if gh == 0.0 {
        l = h;
    } else if (gl > 0.0) == (gh > 0.0) {
        return Err(Error::NoCrossing);
    }
    let sign_l = gl > 0.0;
    while h - l > BISECTION_TOL {
        let mid = 0.5 * (l + h);
        if (g(libm::exp(mid)) > 0.0) == sign_l {
            l = mid;
        } else {
            h = mid;
        }
    }
    let t1 = libm::exp(0.5 * (l + h));
    let t2 = t1 * q;
    let f = f1.eval(t1).expect("inside range");
    Ok(ThresholdReport {
        ratio: t1 / f,
        t1,
        t2,
        steps_per_time: (1.0 / t1, 1.0 / t2),
        cost_per_time: (m1 / t1, m2 / t2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs()
    }

    #[test]
    fn asymptotic_examples() {
        let f4 = FormulaCost::from_metric(18.0, 4, 0.58);
        let f6 = FormulaCost::from_metric(20.0, 6, 0.93);
        let t = asymptotic_threshold(&f4, &f6).unwrap();
        assert!(close(t, 290.0, 0.01), "{t}");
        let yp = FormulaCost::from_metric(17.0, 8, 1.41);
        let ss = FormulaCost::from_metric(35.0, 10, 3.22);
        assert!(close(asymptotic_threshold(&yp, &ss).unwrap(), 2.2e14, 0.02));
        let one6 = FormulaCost::new(3.0, 6, 1.0);
        let one8 = FormulaCost::new(3.0, 8, 1.0);
        assert!(close(asymptotic_threshold(&one6, &one8).unwrap(), 1.0, 1e-12));
        assert!(asymptotic_threshold(&one6, &one6).is_err());
        assert!(ThresholdQuery::new(one8, one6).is_err());
    }

    #[test]
    fn monotone_in_constants() {
        let base = asymptotic_threshold(&FormulaCost::new(7.0, 4, 1e-3), &FormulaCost::new(15.0, 8, 1e-6)).unwrap();
        let c2up = asymptotic_threshold(&FormulaCost::new(7.0, 4, 1e-3), &FormulaCost::new(15.0, 8, 2e-6)).unwrap();
        let c1up = asymptotic_threshold(&FormulaCost::new(7.0, 4, 2e-3), &FormulaCost::new(15.0, 8, 1e-6)).unwrap();
        assert!(c2up > base && c1up < base);
    }

    #[test]
    fn power_law_curves_reproduce_asymptotic() {
        let (a, b) = (FormulaCost::new(7.0, 4, 3e-2), FormulaCost::new(17.0, 8, 2e-8));
        let grid: Vec<f64> = (0..200).map(|i| 1e-4 * libm::pow(1.07, i as f64)).collect();
        let f1 = ErrorCurve::power_law(a.constant, a.order, &grid).unwrap();
        let f2 = ErrorCurve::power_law(b.constant, b.order, &grid).unwrap();
        let r = empirical_threshold(a.stages, &f1, b.stages, &f2).unwrap();
        let want = asymptotic_threshold(&a, &b).unwrap();
        assert!(close(r.ratio, want, 1e-4), "{} vs {}", r.ratio, want);
        assert!(close(r.cost_per_time.0, r.cost_per_time.1, 1e-12));
        assert!(close(r.t2, r.t1 * 17.0 / 7.0, 1e-12));
    }

    #[test]
    fn no_overlap_is_an_error() {
        let f1 = ErrorCurve::new(vec![(0.01, 1e-8), (0.1, 1e-3)]).unwrap();
        let f2 = ErrorCurve::new(vec![(1.0, 1e-8), (2.0, 1e-3)]).unwrap();
        assert_eq!(empirical_threshold(1.0, &f1, 1.0, &f2), Err(Error::NoCrossing));
        assert!(ErrorCurve::new(vec![(0.1, 1.0)]).is_err());
        assert!(ErrorCurve::new(vec![(0.1, 1.0), (0.2, -1.0)]).is_err());
    }

    #[test]
    fn interpolation_is_exact_on_power_laws() {
        let c = ErrorCurve::new(vec![(0.1, 1e-5), (0.2, 1e-5 * 32.0)]).unwrap();
        assert!(close(c.eval(0.15).unwrap(), 1e-5 * libm::pow(1.5, 5.0), 1e-12));
        assert_eq!(c.eval(0.3), None);
    }
}

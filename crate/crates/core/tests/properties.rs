use proptest::prelude::*;

use prodform_core::benchmark::{apply_formula, eigenvalue_error, spectral_error, Hamiltonian, RandomPairSpec};
use prodform_core::formulas::{expand, expand_processed, expand_stages, lookup, push_s2, CatalogFormula, ExponentialSequence, StageCoefficients};
use prodform_core::linalg::{CMatrix, Complex};
use prodform_core::order_conditions::eval_order10;
use prodform_core::word_series::{residual_max, WordPoly};

const K: usize = 6;

fn poly(coeffs: &[f64]) -> WordPoly<f64> {
    WordPoly::from_coeffs(K, coeffs.to_vec()).unwrap()
}

fn near(a: &WordPoly<f64>, b: &WordPoly<f64>, tol: f64) -> bool {
    a.coeffs().iter().zip(b.coeffs()).all(|(x, y)| (x - y).abs() <= tol)
}

fn series(len: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, len)
}

fn ops() -> impl Strategy<Value = ExponentialSequence<f64>> {
    prop::collection::vec((0usize..2, -0.5..0.5f64), 1..12)
        .prop_map(|v| ExponentialSequence::from_ops(2, v).unwrap())
}

fn log_series(p: &WordPoly<f64>) -> WordPoly<f64> {
    let mut c = p.coeffs().to_vec();
    c[0] -= 1.0;
    let y = WordPoly::from_coeffs(K, c).unwrap();
    let mut pow = WordPoly::identity(K).unwrap();
    let mut out = vec![0.0; (1 << (K + 1)) - 1];
    for n in 1..=K {
        pow = pow.multiply(&y).unwrap();
        let s = if n % 2 == 1 { 1.0 } else { -1.0 } / n as f64;
        for (o, x) in out.iter_mut().zip(pow.coeffs()) {
            *o += s * x;
        }
    }
    WordPoly::from_coeffs(K, out).unwrap()
}

fn seq_of(label: &str) -> ExponentialSequence<f64> {
    let e = lookup::<f64>(label).unwrap();
    match &e.formula {
        CatalogFormula::Plain(p) => expand(p, 1.0, 2).unwrap(),
        CatalogFormula::Processed(p) => expand_processed(p, 1.0, 2).unwrap(),
        _ => panic!("{label} has no coefficients"),
    }
}

fn kernel_of(label: &str) -> ExponentialSequence<f64> {
    match &lookup::<f64>(label).unwrap().formula {
        CatalogFormula::Processed(p) => expand(&p.kernel, 1.0, 2).unwrap(),
        CatalogFormula::Kernel(k) => expand(k, 1.0, 2).unwrap(),
        _ => panic!("{label} is not processed"),
    }
}

fn distance(a: &CMatrix<f64>, b: &CMatrix<f64>) -> f64 {
    let n = a.dim();
    CMatrix::from_fn(n, |i, j| a[(i, j)] - b[(i, j)]).spectral_norm()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_series_product_is_associative(a in series(127), b in series(127), c in series(127)) {
        let (a, b, c) = (poly(&a), poly(&b), poly(&c));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert!(near(&left, &right, 1e-11));
    }

    #[test]
    fn sequence_times_inverse_is_identity(s in ops()) {
        let p = WordPoly::formula_series(&s, K).unwrap();
        let q = WordPoly::formula_series(&s.inverse(), K).unwrap();
        prop_assert!(near(&p.multiply(&q).unwrap(), &WordPoly::identity(K).unwrap(), 1e-13));
    }

    #[test]
    fn palindromes_have_odd_logarithms(w in prop::collection::vec(-0.7..0.7f64, 1..4)) {
        let mut stages = w.clone();
        stages.extend(w.iter().rev().skip(1));
        let s = expand_stages(&stages, 1.0, 2);
        prop_assert!(s.is_palindrome());
        let l = log_series(&WordPoly::formula_series(&s, K).unwrap());
        for len in (2..=K).step_by(2) {
            prop_assert!(l.max_abs_in(len, len) < 1e-12, "grade {} = {}", len, l.max_abs_in(len, len));
        }
    }

    #[test]
    fn c9_identity(w in prop::collection::vec(-1.0..1.0f64, 4)) {
        let c = eval_order10(&StageCoefficients::from_free(&w, 10, "p"));
        let (c1, c2, c3) = (c.get("C9_1").unwrap(), c.get("C9_2").unwrap(), c.get("C9_3").unwrap());
        prop_assert!((c2 - c1 - c3).abs() < 1e-12 * (1.0 + c2.abs()));
    }

    #[test]
    fn formulas_are_unitary(seed in 0u64..1000, t in 0.01..1.0f64) {
        let (a, b) = RandomPairSpec { dim: 6, count: 1, seed }.pair(0);
        let w = apply_formula(&seq_of("Y6m3a"), &a, &b, t).unwrap();
        let err = distance(&w.adjoint().matmul(&w), &CMatrix::identity(6));
        prop_assert!(err < 1e-12, "{}", err);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn processor_leaves_eigenvalues_alone(seed in 0u64..1000, t in 0.3..1.0f64) {
        let (a, b) = RandomPairSpec { dim: 6, count: 1, seed }.pair(0);
        let full = eigenvalue_error(&seq_of("YP8m8"), &a, &b, t).unwrap();
        let kernel = eigenvalue_error(&kernel_of("YP8m8"), &a, &b, t).unwrap();
        if let (Some(x), Some(y)) = (full, kernel) {
            prop_assert!((x - y).abs() <= 1e-4 * y + 1e-13, "{} vs {}", x, y);
        }
    }

    #[test]
    fn eigenvalue_error_below_spectral(seed in 0u64..1000, t in 0.05..1.0f64) {
        let (a, b) = RandomPairSpec { dim: 6, count: 1, seed }.pair(0);
        for label in ["S4m1", "KL8s15"] {
            let s = seq_of(label);
            let spec = spectral_error(&s, &a, &b, t).unwrap();
            if let Some(e) = eigenvalue_error(&s, &a, &b, t).unwrap() {
                prop_assert!(e <= spec + 1e-12, "{}: {} > {}", label, e, spec);
            }
        }
    }
}

#[test]
fn long_products_split_into_basis_and_phase() {
    let s = seq_of("S4m1");
    let spec = RandomPairSpec { dim: 6, count: 100, seed: 17 };
    let mut checked = 0;
    for i in 0..spec.count {
        let (a, b) = spec.pair(i);
        let h = Hamiltonian::pair(&a, &b).unwrap();
        let t = 0.05 + 0.45 * (i as f64 / spec.count as f64);
        let r = 1 + (i * 37 % 100) as u32;
        let p = h.evolve(&s, t).unwrap();
        let Some(split) = p.eigen_split() else { continue };
        let exact_r: Vec<Complex<f64>> = p.exact.iter().map(|z| z.powu(r)).collect();
        let lhs = distance(&p.w.power(r), &CMatrix::diagonal(&exact_r));
        let rhs = 2.0 * split.basis_error + r as f64 * split.eigen_error;
        assert!(lhs <= rhs + 1e-12, "instance {i}, r = {r}: {lhs} > {rhs}");
        checked += 1;
    }
    assert!(checked >= 95, "only {checked} instances split");
}

#[test]
fn s2_weights_sum_to_one() {
    let mut s = ExponentialSequence::new(2);
    push_s2(&mut s, 0.3);
    assert_eq!(s.term_sums(), vec![0.3, 0.3]);
    assert!(residual_max(&s.scaled(1.0 / 0.3), 2).unwrap() < 1e-15);
}

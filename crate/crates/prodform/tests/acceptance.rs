//! Acceptance run: one `PASS`/`FAIL` line per criterion, details indented
//! below it. Exits 0 unless `ACCEPTANCE_STRICT` is set, in which case any
//! failure exits 1. Numeric arguments run only those criteria:
//! `cargo test --release --test acceptance -- 5 9`.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use prodform_core::benchmark::{
    apply_formula, eigenvalue_error, geometric_grid, measure_fit, ErrorFit, Hamiltonian, Metric, RandomPairSpec,
};
use prodform_core::fermions::{fermionic_constants, sector_basis, FermionSpec, FermionicHamiltonian};
use prodform_core::formulas::{
    catalog, expand, expand_processed, expand_stages, lookup, CatalogFormula, ExponentialSequence, ProcessedFormula,
    StageCoefficients,
};
use prodform_core::linalg::{CMatrix, Complex};
use prodform_core::solver::{search, solve_processor, SearchConfig};
use prodform_core::thresholds::{asymptotic_threshold, empirical_threshold, ErrorCurve, FormulaCost};
use prodform_core::word_series::{residual_max, WordPoly};
use prodform_core::{DoubleDouble, QuadDouble, Real, Tier};

type Qd = QuadDouble;

/// Coefficients kept in quad-double and converted per run.
#[derive(Clone)]
enum Coeffs {
    Plain(StageCoefficients<Qd>),
    Processed(ProcessedFormula<Qd>),
}

impl Coeffs {
    fn of(label: &str) -> Coeffs {
        match lookup::<Qd>(label).unwrap().formula {
            CatalogFormula::Plain(s) | CatalogFormula::Kernel(s) => Coeffs::Plain(s),
            CatalogFormula::Processed(p) => Coeffs::Processed(p),
            CatalogFormula::Unavailable => panic!("{label} has no coefficients"),
        }
    }

    fn sequence<T: Real>(&self) -> ExponentialSequence<T> {
        match self {
            Coeffs::Plain(s) => expand(&s.convert::<T>(), T::one(), 2).unwrap(),
            Coeffs::Processed(p) => expand_processed(&p.convert::<T>(), T::one(), 2).unwrap(),
        }
    }
}

fn fit(c: &Coeffs, tier: Tier, spec: &RandomPairSpec, k: u32, grid: &[f64]) -> ErrorFit {
    match tier {
        Tier::Double => measure_fit(&c.sequence::<f64>(), spec, k, grid),
        Tier::DoubleDouble => measure_fit(&c.sequence::<DoubleDouble>(), spec, k, grid),
        Tier::QuadDouble => measure_fit(&c.sequence::<Qd>(), spec, k, grid),
    }
    .unwrap()
}

/// Within a factor `f` either way.
fn within(x: f64, target: f64, f: f64) -> bool {
    x >= target / f && x <= target * f
}

fn fmt(x: Option<f64>) -> String {
    x.map_or("none".into(), |v| format!("{v:.3e}"))
}

struct Report {
    results: Vec<(u32, bool)>,
}

impl Report {
    fn detail(&self, s: impl AsRef<str>) {
        println!("    {}", s.as_ref());
    }

    fn record(&mut self, n: u32, title: &str, ok: bool, start: Instant) {
        println!(
            "{} criterion {n}: {title} ({:.1} s)",
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        self.results.push((n, ok));
    }
}

/// Solved processor for the large-step kernel, shared by criteria 1, 2 and 6.
fn large_step_processed() -> ProcessedFormula<DoubleDouble> {
    let kernel = lookup::<DoubleDouble>("YL8m8").unwrap().formula.kernel().unwrap().clone();
    solve_processor(&kernel, 8, 10, None, 20, 1, 30)
        .unwrap()
        .processed("YL8m8")
        .unwrap()
}

fn residual_dd(seq: &ExponentialSequence<DoubleDouble>, k: u32) -> f64 {
    residual_max(seq, k as usize).unwrap().to_f64()
}

fn criterion_1(r: &mut Report, yl: &ProcessedFormula<DoubleDouble>) {
    let start = Instant::now();
    let tol = 1e-20;
    let mut ok = true;
    for label in ["KL8s15", "Y8m8", "Y8m10", "Y8m10b", "YP8m8", "Y10m15", "Y10m16", "Y10m18", "Y10m17", "Y10m18b"] {
        let e = lookup::<DoubleDouble>(label).unwrap();
        let seq = match &e.formula {
            CatalogFormula::Plain(s) => expand(s, DoubleDouble::from_f64(1.0), 2).unwrap(),
            CatalogFormula::Processed(p) => expand_processed(p, DoubleDouble::from_f64(1.0), 2).unwrap(),
            _ => unreachable!(),
        };
        let res = residual_dd(&seq, e.order);
        ok &= res < tol;
        r.detail(format!("{label:<8} {:<9} order {:>2}: max |residual| {res:.3e}", e.formula.kind(), e.order));
    }
    let res = residual_dd(&expand_processed(yl, DoubleDouble::from_f64(1.0), 2).unwrap(), 8);
    ok &= res < tol;
    r.detail(format!("YL8m8    kernel + solved processor (G = 10): max |residual| {res:.3e}"));

    // informational: the published kernel of YP8m8 with a re-solved processor
    let yp = lookup::<DoubleDouble>("YP8m8").unwrap();
    if let CatalogFormula::Processed(p) = &yp.formula {
        let start: Vec<f64> = p.gammas.iter().map(|g| g.to_f64()).collect();
        if let Ok(sol) = solve_processor(&p.kernel, 8, p.gammas.len(), Some(&start), 20, 1, 30) {
            let res = residual_dd(&expand_processed(&sol.processed("YP8m8").unwrap(), DoubleDouble::from_f64(1.0), 2).unwrap(), 8);
            r.detail(format!("(YP8m8 kernel with a re-solved processor: {res:.3e})"));
        }
    }
    r.record(1, "catalog residuals below 1e-20 in 30 digits", ok, start);
}

fn criterion_2(r: &mut Report, yl: &ProcessedFormula<DoubleDouble>) {
    let start = Instant::now();
    let spec = RandomPairSpec { dim: 6, count: 100, seed: 0 };
    let grid = geometric_grid(0.02, 0.1, 5);
    let mut ok = true;
    let mut checked = 0;
    for e in catalog::<Qd>() {
        let coeffs = match &e.formula {
            CatalogFormula::Plain(s) => Coeffs::Plain(s.clone()),
            CatalogFormula::Processed(p) => Coeffs::Processed(p.clone()),
            CatalogFormula::Kernel(_) => Coeffs::Processed(yl.convert()),
            CatalogFormula::Unavailable => continue,
        };
        let k = e.order;
        let mut tier = if k <= 4 { Tier::Double } else { Tier::DoubleDouble };
        let mut f = fit(&coeffs, tier, &spec, k, &grid);
        // errors too close to the rounding floor bend the slope: go up a tier
        let low = f.samples.iter().map(|s| s.spectral[0]).fold(f64::MAX, f64::min);
        if low < 100.0 * f.floor && tier != Tier::QuadDouble {
            tier = if tier == Tier::Double { Tier::DoubleDouble } else { Tier::QuadDouble };
            f = fit(&coeffs, tier, &spec, k, &grid);
        }
        let slope = f.spectral.median_slope;
        let pass = slope.is_some_and(|s| s >= k as f64 + 0.8 && s <= k as f64 + 1.2);
        ok &= pass;
        checked += 1;
        r.detail(format!(
            "{:<10} k = {:>2} {:<13} median slope {}{}",
            e.label,
            k,
            tier.to_string(),
            slope.map_or("none".into(), |s| format!("{s:.3}")),
            if pass { "" } else { "  <- outside [k+0.8, k+1.2]" }
        ));
    }
    r.detail(format!("{checked} entries with coefficients"));
    r.record(2, "spectral-error slopes in [k+0.8, k+1.2]", ok, start);
}

fn criterion_3(r: &mut Report) {
    let start = Instant::now();
    let spec = RandomPairSpec { dim: 6, count: 1000, seed: 0 };
    let grid = geometric_grid(0.02, 0.1, 5);
    let mut ok = true;
    for (label, target) in [("S4m1", 4.5e-2), ("Y6m3a", 1.7e-3), ("KL8s15", 5.9e-6), ("Y8m10", 4.9e-8), ("Y10m16", 1.9e-8)] {
        let c = Coeffs::of(label);
        let k = lookup::<f64>(label).unwrap().order;
        let tier = if k <= 4 { Tier::Double } else { Tier::DoubleDouble };
        let chi = fit(&c, tier, &spec, k, &grid).chi();
        let pass = chi.is_some_and(|x| within(x, target, 2.0));
        ok &= pass;
        r.detail(format!("{label:<7} chi {} (published {target:.1e}, ratio {:.2})", fmt(chi), chi.unwrap_or(0.0) / target));
    }
    r.record(3, "spectral constants within a factor 2 (1000 samples)", ok, start);
}

fn criterion_4(r: &mut Report) {
    let start = Instant::now();
    let spec = RandomPairSpec { dim: 6, count: 1000, seed: 0 };
    let grid = geometric_grid(0.02, 0.1, 5);
    let mut ok = true;
    for (label, target, tier) in [
        ("Y8m10b", 1.6e-9, Tier::DoubleDouble),
        ("YP8m8", 2.2e-9, Tier::DoubleDouble),
        ("Y10m17", 1.8e-10, Tier::QuadDouble),
    ] {
        let zeta = fit(&Coeffs::of(label), tier, &spec, lookup::<f64>(label).unwrap().order, &grid).zeta();
        let pass = zeta.is_some_and(|x| within(x, target, 3.0));
        ok &= pass;
        r.detail(format!("{label:<7} zeta {} in {tier} (published {target:.1e}, ratio {:.2})", fmt(zeta), zeta.unwrap_or(0.0) / target));
    }
    r.record(4, "eigenvalue constants within a factor 3", ok, start);
}

/// `x` rounded to `sig` significant figures.
fn round_sig(x: f64, sig: i32) -> f64 {
    let p = 10f64.powi(x.log10().floor() as i32 + 1 - sig);
    (x / p).round() * p
}

fn criterion_5(r: &mut Report) {
    let start = Instant::now();
    let cost = |label: &str, metric: f64| {
        let e = lookup::<f64>(label).unwrap();
        FormulaCost::from_metric(e.published.stages as f64, e.order, metric)
    };
    let f4 = cost("BCE4m9", 0.58);
    let f6 = cost("BCE6m10", 0.93);
    let f8 = cost("YP8m8", 1.41);
    let f10 = cost("SS10s35", 3.22);
    let mut ok = true;
    for (name, lo, hi, quoted, sig) in [
        ("4th -> 6th", &f4, &f6, 290.0, 2),
        ("4th -> 8th", &f4, &f8, 1200.0, 2),
        ("6th -> 8th", &f6, &f8, 22000.0, 2),
        ("8th -> 10th", &f8, &f10, 2.2e14, 2),
    ] {
        let t = asymptotic_threshold(lo, hi).unwrap();
        let pass = (round_sig(t, sig) - quoted).abs() <= 1e-9 * quoted;
        ok &= pass;
        r.detail(format!("{name:<11} {t:.4e} (3 s.f. {:.2e}; quoted {quoted:.1e})", round_sig(t, 3)));
    }
    r.record(5, "asymptotic thresholds from the rounded metrics", ok, start);
}

fn criterion_6(r: &mut Report, yl: &ProcessedFormula<DoubleDouble>) {
    let start = Instant::now();
    let spec = RandomPairSpec { dim: 6, count: 100, seed: 0 };
    let grid = geometric_grid(0.1, 5.0, 30);
    let pp = lookup::<f64>("PPBCM6m6").unwrap();
    let zeta6 = pp.published.zeta.unwrap();
    let m6 = pp.published.stages as f64;
    let low = ErrorCurve::power_law(zeta6, 6, &geometric_grid(0.01, 50.0, 400)).unwrap();
    let curve = |c: &Coeffs| {
        ErrorCurve::new(fit(c, Tier::DoubleDouble, &spec, 8, &grid).curve(Metric::Eigen)).unwrap()
    };
    let m8 = lookup::<f64>("YP8m8").unwrap().published.stages as f64;
    let yp = empirical_threshold(m6, &low, m8, &curve(&Coeffs::of("YP8m8")));
    let yl = empirical_threshold(m6, &low, m8, &curve(&Coeffs::Processed(yl.convert())));
    let asym = asymptotic_threshold(&FormulaCost::new(m6, 6, zeta6), &FormulaCost::new(m8, 8, 2.2e-9)).unwrap();
    let (Ok(yp), Ok(yl)) = (yp, yl) else {
        r.detail("no crossing found");
        r.record(6, "empirical thresholds", false, start);
        return;
    };
    let t1 = asym_step(zeta6, asym);
    r.detail(format!("PPBCM6m6 curve: {zeta6:.1e} t^7, {m6} stages; asymptotic threshold vs YP8m8 {asym:.3e} at step {t1:.2}"));
    r.detail(format!("YP8m8: empirical {:.3e} at t2 = {:.2} (quoted 9.4e5)", yp.ratio, yp.t2));
    r.detail(format!("YL8m8: empirical {:.3e} at t2 = {:.2} (quoted 8.2e4)", yl.ratio, yl.t2));
    let order_ok = yp.ratio < asym;
    r.detail(format!("empirical < asymptotic: {}", if order_ok { "yes" } else { "no" }));
    let drop = yp.ratio / yl.ratio;
    let drop_ok = within(drop, 940_000.0 / 82_000.0, 3.0);
    r.detail(format!("YP8m8 / YL8m8 threshold ratio {drop:.2} (quoted {:.1}, factor 3)", 940_000.0 / 82_000.0));
    r.record(6, "empirical thresholds against the power-law 6th-order curve", order_ok && drop_ok, start);
}

/// Step `t₁` of the lower-order formula at the asymptotic crossover.
fn asym_step(zeta: f64, threshold: f64) -> f64 {
    (1.0 / (zeta * threshold)).powf(1.0 / 6.0)
}

fn criterion_7(r: &mut Report) {
    let start = Instant::now();
    let six = search(&SearchConfig::plain(6, 3, 500, 1)).unwrap();
    r.detail(format!("order 6, m = 3, 500 restarts: {} distinct solutions", six.solutions.len()));
    let mut cfg = SearchConfig::plain(8, 7, 30_000, 1);
    cfg.init_sigma = 2.5;
    cfg.max_iter = 300;
    let eight = search(&cfg).unwrap();
    let kl = lookup::<f64>("KL8s15").unwrap();
    let target = &kl.formula.kernel().unwrap().w;
    let best = eight
        .solutions
        .iter()
        .map(|s| s.w.iter().zip(target).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
        .fold(f64::MAX, f64::min);
    r.detail(format!(
        "order 8, m = 7, 30000 restarts (sigma 2.5): {} distinct solutions, closest to KL8s15 at {best:.1e}",
        eight.solutions.len()
    ));
    let ok = six.solutions.len() == 3 && eight.solutions.len() >= 100 && best < 1e-6;
    r.record(7, "search reproduction", ok, start);
}

fn criterion_8(r: &mut Report) {
    let start = Instant::now();
    let seq = Coeffs::of("YP8m8").sequence::<DoubleDouble>();
    let grid = geometric_grid(0.03, 0.3, 5);
    let omega = |d: usize, eta: usize| {
        fermionic_constants(&seq, &FermionSpec { d, eta, count: 50, seed: 0 }, 8, &grid)
            .unwrap()
            .omega
    };
    let w6 = omega(6, 3);
    let w4 = omega(4, 2);
    let ok6 = w6.is_some_and(|x| within(x, 1.7e-12, 3.0));
    let ok4 = w4.is_some_and(|x| within(x, 2.3e-12, 3.0));
    let agree = matches!((w6, w4), (Some(a), Some(b)) if within(a / b, 1.0, 2.0));
    r.detail(format!("d = 6, eta = 3: omega {} (published 1.7e-12)", fmt(w6)));
    r.detail(format!("d = 4, eta = 2: omega {} (published 2.3e-12)", fmt(w4)));
    r.detail(format!("d4 / d6 agreement within 2: {}", if agree { "yes" } else { "no" }));
    r.record(8, "fermionic eigenvalue constants", ok6 && ok4 && agree, start);
}

// ---------------------------------------------------------------------------
// Property checks

const K: usize = 6;

fn random_poly(rng: &mut ChaCha8Rng) -> WordPoly<f64> {
    WordPoly::from_coeffs(K, (0..(1 << (K + 1)) - 1).map(|_| rng.random_range(-1.0..1.0)).collect()).unwrap()
}

fn max_gap(a: &WordPoly<f64>, b: &WordPoly<f64>) -> f64 {
    a.coeffs().iter().zip(b.coeffs()).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
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

fn distance(a: &CMatrix<f64>, b: &CMatrix<f64>) -> f64 {
    CMatrix::from_fn(a.dim(), |i, j| a[(i, j)] - b[(i, j)]).spectral_norm()
}

fn annihilator(d: usize, p: usize) -> CMatrix<f64> {
    let n = 1usize << d;
    let mut a = CMatrix::zeros(n);
    for m in 0..n {
        if m >> p & 1 == 1 {
            let sign = if (m & ((1 << p) - 1)).count_ones().is_multiple_of(2) { 1.0 } else { -1.0 };
            a[(m ^ (1 << p), m)] = Complex::new(sign, 0.0);
        }
    }
    a
}

/// Largest entry gap between the sector matrices and the Jordan-Wigner
/// Fock-space operators restricted to the sector.
fn fock_gap(h: &FermionicHamiltonian) -> f64 {
    let d = h.d;
    let ann: Vec<CMatrix<f64>> = (0..d).map(|p| annihilator(d, p)).collect();
    let cre: Vec<CMatrix<f64>> = ann.iter().map(CMatrix::adjoint).collect();
    let basis = sector_basis(d, h.eta);
    let (t, v) = h.build_matrices();
    let mut gap = 0.0f64;
    for (i, &bi) in basis.iter().enumerate() {
        for (j, &bj) in basis.iter().enumerate() {
            let (bi, bj) = (bi as usize, bj as usize);
            let (mut ft, mut fv) = (0.0, 0.0);
            for p in 0..d {
                for q in 0..d {
                    let hop = cre[p].matmul(&ann[q]);
                    ft += hop[(bi, bj)].re * h.tau[p * d + q];
                    if bi == bj {
                        fv += ((bi >> p & 1) * (bi >> q & 1)) as f64 * h.nu[p * d + q];
                    }
                }
            }
            gap = gap.max((t[(i, j)].re - ft).abs() + t[(i, j)].im.abs());
            gap = gap.max((v[(i, j)].re - fv).abs() + v[(i, j)].im.abs());
        }
    }
    gap
}

fn criterion_9(r: &mut Report) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut ok = true;

    let assoc = (0..20)
        .map(|_| {
            let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
            max_gap(&a.multiply(&b).unwrap().multiply(&c).unwrap(), &a.multiply(&b.multiply(&c).unwrap()).unwrap())
        })
        .fold(0.0, f64::max);
    ok &= assoc < 1e-11;
    r.detail(format!("word series associativity: {assoc:.1e}"));

    let inverse = (0..20)
        .map(|_| {
            let ops: Vec<(usize, f64)> =
                (0..rng.random_range(1..12)).map(|_| (rng.random_range(0..2), rng.random_range(-0.5..0.5))).collect();
            let s = ExponentialSequence::from_ops(2, ops).unwrap();
            let p = WordPoly::formula_series(&s, K).unwrap();
            let q = WordPoly::formula_series(&s.inverse(), K).unwrap();
            max_gap(&p.multiply(&q).unwrap(), &WordPoly::identity(K).unwrap())
        })
        .fold(0.0, f64::max);
    ok &= inverse < 1e-13;
    r.detail(format!("sequence times inverse: {inverse:.1e}"));

    let even = (0..20)
        .map(|_| {
            let w: Vec<f64> = (0..rng.random_range(1..4)).map(|_| rng.random_range(-0.7..0.7)).collect();
            let mut stages = w.clone();
            stages.extend(w.iter().rev().skip(1));
            let l = log_series(&WordPoly::formula_series(&expand_stages(&stages, 1.0, 2), K).unwrap());
            (2..=K).step_by(2).map(|g| l.max_abs_in(g, g)).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max);
    ok &= even < 1e-12;
    r.detail(format!("palindromes, even grades of the logarithm: {even:.1e}"));

    let y6 = Coeffs::of("Y6m3a").sequence::<f64>();
    let pairs = RandomPairSpec { dim: 6, count: 100, seed: 5 };
    let unitary = (0..20)
        .map(|i| {
            let (a, b) = pairs.pair(i);
            let w = apply_formula(&y6, &a, &b, 0.05 * (i + 1) as f64).unwrap();
            distance(&w.adjoint().matmul(&w), &CMatrix::identity(6))
        })
        .fold(0.0, f64::max);
    ok &= unitary < 1e-12;
    r.detail(format!("unitarity of Y6m3a: {unitary:.1e}"));

    // in double-double so that errors near 1e-13 are resolved
    let yp = Coeffs::of("YP8m8");
    let (full, kernel) = match &yp {
        Coeffs::Processed(p) => (
            yp.sequence::<DoubleDouble>(),
            expand(&p.kernel.convert::<DoubleDouble>(), DoubleDouble::from_f64(1.0), 2).unwrap(),
        ),
        Coeffs::Plain(_) => unreachable!(),
    };
    let similarity = (0..20)
        .filter_map(|i| {
            let (a, b) = pairs.pair(i);
            let (a, b) = (a.convert::<DoubleDouble>(), b.convert::<DoubleDouble>());
            let t = DoubleDouble::from_f64(0.3 + 0.035 * i as f64);
            match (eigenvalue_error(&full, &a, &b, t).unwrap(), eigenvalue_error(&kernel, &a, &b, t).unwrap()) {
                (Some(x), Some(y)) => Some(((x - y).abs() / y).to_f64()),
                _ => None,
            }
        })
        .fold(0.0, f64::max);
    ok &= similarity < 1e-10;
    r.detail(format!("processed vs kernel eigenvalue error, relative: {similarity:.1e}"));

    let s4 = Coeffs::of("S4m1").sequence::<f64>();
    let (mut split, mut bound_ok) = (0, true);
    for i in 0..100 {
        let (a, b) = pairs.pair(i);
        let h = Hamiltonian::pair(&a, &b).unwrap();
        let t = 0.05 + 0.0045 * i as f64;
        let rr = 1 + (i * 37 % 100) as u32;
        let p = h.evolve(&s4, t).unwrap();
        let Some(sp) = p.eigen_split() else { continue };
        let exact: Vec<Complex<f64>> = p.exact.iter().map(|z| z.powu(rr)).collect();
        let lhs = distance(&p.w.power(rr), &CMatrix::diagonal(&exact));
        bound_ok &= lhs <= 2.0 * sp.basis_error + rr as f64 * sp.eigen_error + 1e-12;
        split += 1;
    }
    ok &= bound_ok && split >= 95;
    r.detail(format!("long-product bound: {} on {split} of 100 instances, r <= 100", if bound_ok { "holds" } else { "violated" }));

    let mut fock = 0.0f64;
    for d in 1..=6 {
        for eta in 0..=d {
            let spec = FermionSpec { d, eta, count: 1, seed: 3 };
            fock = fock.max(fock_gap(&spec.instance(0).unwrap()));
        }
    }
    ok &= fock < 1e-14;
    r.detail(format!("sector matrices vs Jordan-Wigner Fock space, d <= 6: {fock:.1e}"));

    r.record(9, "property suites", ok, start);
}

fn main() {
    let total = Instant::now();
    let mut r = Report { results: Vec::new() };
    // numeric arguments select criteria; anything else (test-runner flags) is ignored
    let picked: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let run = |n: u32| picked.is_empty() || picked.contains(&n);
    println!("acceptance run");
    let yl = if [1, 2, 6].into_iter().any(run) { Some(large_step_processed()) } else { None };
    if run(1) {
        criterion_1(&mut r, yl.as_ref().unwrap());
    }
    if run(2) {
        criterion_2(&mut r, yl.as_ref().unwrap());
    }
    if run(3) {
        criterion_3(&mut r);
    }
    if run(4) {
        criterion_4(&mut r);
    }
    if run(5) {
        criterion_5(&mut r);
    }
    if run(6) {
        criterion_6(&mut r, yl.as_ref().unwrap());
    }
    if run(7) {
        criterion_7(&mut r);
    }
    if run(8) {
        criterion_8(&mut r);
    }
    if run(9) {
        criterion_9(&mut r);
    }
    let failed: Vec<u32> = r.results.iter().filter(|x| !x.1).map(|x| x.0).collect();
    println!(
        "acceptance: {} of {} criteria pass ({:.0} s){}",
        r.results.len() - failed.len(),
        r.results.len(),
        total.elapsed().as_secs_f64(),
        if failed.is_empty() { String::new() } else { format!("; failing: {failed:?}") }
    );
    if !failed.is_empty() && std::env::var_os("ACCEPTANCE_STRICT").is_some() {
        std::process::exit(1);
    }
}

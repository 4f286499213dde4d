//! Sector matrices against the full Fock space built from Jordan-Wigner
//! annihilators, and the second-order error bound in the norm factor.

use prodform_core::benchmark::geometric_grid;
use prodform_core::fermions::{fermionic_constants, sector_basis, FermionSpec, FermionicHamiltonian};
use prodform_core::formulas::{push_s2, ExponentialSequence};
use prodform_core::linalg::{CMatrix, Complex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn re(x: f64) -> Complex<f64> {
    Complex::new(x, 0.0)
}

/// `a_p |n> = (-1)^{n_0 + .. + n_{p-1}} |n - e_p>`.
fn annihilator(d: usize, p: usize) -> CMatrix<f64> {
    let n = 1usize << d;
    let mut a = CMatrix::zeros(n);
    for m in 0..n {
        if m >> p & 1 == 1 {
            let parity = (m & ((1 << p) - 1)).count_ones();
            a[(m ^ (1 << p), m)] = re(if parity.is_multiple_of(2) { 1.0 } else { -1.0 });
        }
    }
    a
}

fn fock_hamiltonian(h: &FermionicHamiltonian) -> (CMatrix<f64>, CMatrix<f64>) {
    let d = h.d;
    let n = 1usize << d;
    let ann: Vec<CMatrix<f64>> = (0..d).map(|p| annihilator(d, p)).collect();
    let cre: Vec<CMatrix<f64>> = ann.iter().map(CMatrix::adjoint).collect();
    let num: Vec<CMatrix<f64>> = (0..d).map(|p| cre[p].matmul(&ann[p])).collect();
    let mut t = CMatrix::zeros(n);
    let mut v = CMatrix::zeros(n);
    for p in 0..d {
        for q in 0..d {
            let hop = cre[p].matmul(&ann[q]);
            let nn = num[p].matmul(&num[q]);
            for i in 0..n {
                for j in 0..n {
                    t[(i, j)] += hop[(i, j)] * re(h.tau[p * d + q]);
                    v[(i, j)] += nn[(i, j)] * re(h.nu[p * d + q]);
                }
            }
        }
    }
    (t, v)
}

fn project(full: &CMatrix<f64>, basis: &[u32]) -> CMatrix<f64> {
    CMatrix::from_fn(basis.len(), |i, j| full[(basis[i] as usize, basis[j] as usize)])
}

fn max_diff(a: &CMatrix<f64>, b: &CMatrix<f64>) -> f64 {
    a.data().iter().zip(b.data()).map(|(x, y)| (x - y).l1_norm()).fold(0.0, f64::max)
}

#[test]
fn sector_matrices_match_full_fock_space() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 1..=6 {
        for eta in 0..=d {
            let h = FermionicHamiltonian::random(d, eta, &mut rng).unwrap();
            let (t, v) = h.build_matrices();
            let (ft, fv) = fock_hamiltonian(&h);
            let basis = sector_basis(d, eta);
            assert_eq!(t.dim(), basis.len());
            assert!(max_diff(&t, &project(&ft, &basis)) < 1e-14, "T, d = {d}, eta = {eta}");
            assert!(max_diff(&v, &project(&fv, &basis)) < 1e-14, "V, d = {d}, eta = {eta}");
            // particle number is conserved: nothing leaks out of the sector
            let leak = basis.iter().any(|&m| {
                (0..1usize << d).any(|r| (r as u32).count_ones() as usize != eta && ft[(r, m as usize)].l1_norm() > 0.0)
            });
            assert!(!leak, "d = {d}, eta = {eta}");
        }
    }
}

#[test]
fn second_order_error_is_bounded_by_the_norm_factor() {
    let mut s2 = ExponentialSequence::new(2);
    push_s2(&mut s2, 1.0);
    let grid = geometric_grid(0.01, 0.1, 4);
    let mut xs = Vec::new();
    for (d, eta) in [(4, 2), (6, 2), (6, 3)] {
        let fit = fermionic_constants(&s2, &FermionSpec { d, eta, count: 10, seed: 2 }, 2, &grid).unwrap();
        let slope = fit.fit.spectral.median_slope.unwrap();
        assert!((slope - 3.0).abs() < 0.2, "d = {d}, eta = {eta}: slope {slope}");
        let worst = fit.fit.spectral.per_sample.iter().cloned().fold(0.0, f64::max);
        assert!(worst < 1.0, "d = {d}, eta = {eta}: {worst}");
        xs.push(fit.xi.unwrap());
    }
    let (lo, hi) = xs.iter().fold((f64::MAX, 0.0f64), |(l, h), &x| (l.min(x), h.max(x)));
    assert!(hi / lo < 10.0, "{xs:?}");
}

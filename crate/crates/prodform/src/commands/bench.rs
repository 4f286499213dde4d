use prodform_core::benchmark::{geometric_grid, measure_fit, metric, ErrorFit, Metric, RandomPairSpec, ENSEMBLE};
use prodform_core::fermions::{fermionic_fit, FermionSpec, FermionicFit, FermionicHamiltonian, NormEstimate};
use prodform_core::Real;

use super::in_tier;
use crate::cli::{BenchArgs, CurveMetric, Globals};
use crate::error::{CliError, CliResult};
use crate::formula_file::FormulaFile;
use crate::manifest::{manifest_path, RunManifest};
use crate::tables::{write_curve, write_rows, BenchRow};

struct Measured {
    fit: ErrorFit,
    /// Per sample: time scale and error scale undoing the fermionic normalisation.
    unscale: Option<Vec<(f64, f64)>>,
    norms: Option<Vec<NormEstimate>>,
}

fn geo(xs: impl Iterator<Item = f64>) -> Option<f64> {
    let v: Vec<f64> = xs.collect();
    prodform_core::benchmark::geometric_mean(&v)
}

fn hamiltonians(a: &BenchArgs) -> CliResult<Vec<FermionicHamiltonian>> {
    if let (Some(tp), Some(np)) = (&a.tau, &a.nu) {
        let (d, tau) = crate::tables::read_matrix(tp)?;
        let (dn, nu) = crate::tables::read_matrix(np)?;
        if dn != d || a.d.is_some_and(|x| x != d) {
            return Err(CliError::Usage("tau, nu and --d disagree on the orbital count".into()));
        }
        return Ok(vec![FermionicHamiltonian::new(d, a.eta.unwrap_or(d / 2), tau, nu)?]);
    }
    let d = a.d.unwrap_or(6);
    let spec = FermionSpec {
        d,
        eta: a.eta.unwrap_or(d / 2),
        count: a.samples,
        seed: a.seed,
    };
    (0..a.samples).map(|i| spec.instance(i).map_err(CliError::from)).collect()
}

fn measure<T: Real>(a: &BenchArgs, file: &FormulaFile, grid: &[f64]) -> CliResult<Measured> {
    let seq = file.load::<T>()?.sequence(2)?;
    if a.fermionic {
        let hams = hamiltonians(a)?;
        let FermionicFit { fit, norms, .. } = fermionic_fit(&seq, &hams, file.order, grid)?;
        let unscale = norms.iter().map(|n| (1.0 / n.combined(), 1.0 / n.curve_weight())).collect();
        return Ok(Measured {
            fit,
            unscale: Some(unscale),
            norms: Some(norms),
        });
    }
    let spec = RandomPairSpec {
        dim: a.dim,
        count: a.samples,
        seed: a.seed,
    };
    Ok(Measured {
        fit: measure_fit(&seq, &spec, file.order, grid)?,
        unscale: None,
        norms: None,
    })
}

fn rows(a: &BenchArgs, file: &FormulaFile, tier: &str, stages: usize, m: &Measured) -> Vec<BenchRow> {
    let fit = &m.fit;
    let base = BenchRow {
        formula: file.label.clone(),
        tier: tier.to_string(),
        ..Default::default()
    };
    let mut out = Vec::new();
    if !a.summary_only {
        for (i, s) in fit.samples.iter().enumerate() {
            let (tu, eu) = m.unscale.as_ref().map_or((s.time_unit, 1.0), |u| u[i]);
            let n = m.norms.as_ref().map(|n| n[i]);
            for (j, &x) in fit.t_grid.iter().enumerate() {
                out.push(BenchRow {
                    row: "sample".into(),
                    sample: Some(s.index),
                    t: Some(x * tu),
                    spectral: Some(s.spectral[j] * eu),
                    eigen: s.eigen[j].map(|e| e * eu),
                    basis: s.basis[j].map(|e| e * eu),
                    tau_norm: n.map(|n| n.tau_norm),
                    nu_norm: n.map(|n| n.nu_norm),
                    eta: n.map(|n| n.eta),
                    ..base.clone()
                });
            }
        }
    }
    let (chi, zeta) = (fit.chi(), fit.zeta());
    let k = file.order;
    let norms = m.norms.as_deref();
    out.push(BenchRow {
        row: "summary".into(),
        samples: Some(fit.samples.len()),
        chi,
        zeta,
        spectral_slope: fit.spectral.median_slope,
        eigen_slope: fit.eigen.median_slope,
        spectral_slope_failures: Some(fit.spectral.slope_failures),
        eigen_slope_failures: Some(fit.eigen.slope_failures),
        m_chi: chi.map(|c| metric(stages as f64, c, k)),
        m_zeta: zeta.map(|c| metric(stages as f64, c, k)),
        nu_exponent: fit.nu_exponent,
        tau_norm: norms.and_then(|n| geo(n.iter().map(|x| x.tau_norm))),
        nu_norm: norms.and_then(|n| geo(n.iter().map(|x| x.nu_norm))),
        eta: norms.map(|n| n[0].eta),
        ..base
    });
    out
}

pub fn run(mut a: BenchArgs, g: Globals) -> CliResult<()> {
    let file = FormulaFile::resolve(&a.formula)?;
    let (lo, hi) = if a.fermionic { (0.03, 0.3) } else { (0.02, 0.1) };
    a.t_min = Some(a.t_min.unwrap_or(lo));
    a.t_max = Some(a.t_max.unwrap_or(hi));
    if a.fermionic {
        if a.tau.is_none() {
            a.d = Some(a.d.unwrap_or(6));
        }
        if let Some(d) = a.d {
            a.eta = Some(a.eta.unwrap_or(d / 2));
        }
    }
    let t_min = a.t_min.unwrap_or(lo);
    let t_max = a.t_max.unwrap_or(hi);
    if !(t_min > 0.0 && t_max > t_min) || a.points < 2 {
        return Err(CliError::Usage("need 0 < t-min < t-max and at least two points".into()));
    }
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let grid = geometric_grid(t_min, t_max, a.points);
    let stages = file.load::<f64>()?.stages();

    let mut manifest = RunManifest::new("bench", g.tier, g.jobs, &a)?;
    manifest.seeds.push(a.seed);
    manifest.inputs.push(a.formula.clone());
    if a.fermionic {
        manifest.notes.push(
            "fermionic: tau, nu uniform on [-1, 1] symmetrised; V includes p = q; basis by increasing occupation mask; \
             t grid in s = t (|tau|_1 + |nu|_1,[eta]); chi/zeta columns hold xi/omega"
                .into(),
        );
    } else {
        manifest.notes.push(format!("ensemble: {ENSEMBLE}"));
    }

    let measured = in_tier!(g.tier, measure(&a, &file, &grid))?;
    for (name, m) in [("spectral", Metric::Spectral), ("eigenvalue", Metric::Eigen)] {
        if let Err(e) = measured.fit.check(m) {
            eprintln!("warning: {name} slope gate: {e}");
        }
    }
    let table = rows(&a, &file, &g.tier.to_string(), stages, &measured);
    match &a.out {
        Some(p) => {
            let f = std::fs::File::create(p).map_err(|e| CliError::io(p, e))?;
            write_rows(f, &table)?;
            manifest.outputs.push(p.display().to_string());
        }
        None => write_rows(std::io::stdout().lock(), &table)?,
    }
    if let Some(p) = &a.curve_out {
        let m = match a.curve_metric {
            CurveMetric::Spectral => Metric::Spectral,
            CurveMetric::Eigen => Metric::Eigen,
        };
        write_curve(p, &measured.fit.curve(m))?;
        manifest.outputs.push(p.display().to_string());
    }
    match &a.out {
        Some(p) => manifest.write(&manifest_path(p))?,
        None => eprint!("{}", manifest.to_toml()),
    }
    let s = table.last().expect("summary row");
    if s.chi.is_none() && s.zeta.is_none() {
        return Err(CliError::Numerical("every sample is below the rounding floor; raise --digits or t".into()));
    }
    Ok(())
}

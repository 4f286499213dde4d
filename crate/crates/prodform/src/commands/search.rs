use std::path::Path;

use prodform_core::order_conditions::reduced_count;
use prodform_core::solver::{default_sigma, polish, refine, search, Problem, SearchConfig, SearchMode, Solution};
use prodform_core::Real;

use super::in_tier;
use crate::cli::{Globals, SearchArgs};
use crate::error::{CliError, CliResult};
use crate::formula_file::FormulaFile;
use crate::manifest::RunManifest;

fn config(a: &SearchArgs) -> SearchConfig {
    let mut c = if a.processor_len > 0 {
        SearchConfig::joint(a.order, a.m, a.processor_len, a.restarts, a.seed)
    } else {
        SearchConfig::plain(a.order, a.m, a.restarts, a.seed)
    };
    c.init_sigma = a.sigma.unwrap_or(default_sigma(a.order));
    c.sigma_cycle = a.sigma_cycle.clone();
    c.max_iter = a.max_iter;
    c.tol = a.tol;
    c.dedup_radius = a.dedup;
    c
}

fn problem<T: Real>(a: &SearchArgs) -> Problem<T> {
    if a.processor_len > 0 {
        Problem::Joint {
            order: a.order,
            m: a.m,
            processor_len: a.processor_len,
            fixed_kernel: None,
        }
    } else {
        Problem::Plain { order: a.order, m: a.m }
    }
}

/// Refine in f64, then polish and write in `T`.
fn finish<T: Real>(a: &SearchArgs, sols: &[Solution<f64>], digits: u32, dir: &Path) -> CliResult<Vec<String>> {
    let p64 = problem::<f64>(a);
    let pt = problem::<T>(a);
    let mut written = Vec::new();
    for (i, s) in sols.iter().enumerate() {
        let s = if a.refine { refine(s, &p64) } else { s.clone() };
        let s: Solution<T> = if digits > 15 { polish(&s.convert(), &pt, digits)? } else { s.convert() };
        let label = format!("o{}m{}-{:03}", a.order, a.m, i);
        println!(
            "{label}  residual {:.2e}  next-order residual {:.3e}  w = [{}]",
            s.residual_norm.to_f64(),
            s.next_order_residual_norm.to_f64(),
            s.w.iter().map(|x| format!("{:.12}", x.to_f64())).collect::<Vec<_>>().join(", ")
        );
        let path = dir.join(format!("{label}.toml"));
        FormulaFile::from_solution(&s, &label, "search", T::DIGITS as usize + 2).write(&path)?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

pub fn run(mut a: SearchArgs, g: Globals) -> CliResult<()> {
    a.sigma = Some(a.sigma.unwrap_or(default_sigma(a.order)));
    let cfg = config(&a);
    let mut manifest = RunManifest::new("search", g.tier, g.jobs, &a)?;
    manifest.seeds.push(a.seed);
    manifest.notes.push(format!(
        "mode {:?}; initial weights normal(0, sigma) per restart, stream = restart index",
        cfg.mode
    ));
    std::fs::create_dir_all(&a.out).map_err(|e| CliError::io(&a.out, e))?;
    let mpath = a.out.join("manifest.toml");

    let count = reduced_count(a.order).ok_or_else(|| CliError::Usage("order must be 2, 4, 6, 8 or 10".into()))?;
    if cfg.mode == SearchMode::Plain && a.m < count {
        manifest.notes.push(format!("infeasible: {count} conditions, {} unknowns", a.m));
        manifest.write(&mpath)?;
        return Err(CliError::Empty(format!(
            "order {} needs {count} independent conditions but m = {} gives only {} unknowns",
            a.order, a.m, a.m
        )));
    }

    let out = search(&cfg)?;
    eprintln!(
        "{} restarts, {} converged, {} duplicates, {} distinct",
        out.restarts,
        out.converged,
        out.duplicates,
        out.solutions.len()
    );
    let written = in_tier!(g.tier, finish(&a, &out.solutions, g.tier.digits() - 2, &a.out))?;
    manifest.outputs = written;
    manifest.write(&mpath)?;
    if out.solutions.is_empty() {
        return Err(CliError::Empty(format!("no solution in {} restarts", out.restarts)));
    }
    Ok(())
}

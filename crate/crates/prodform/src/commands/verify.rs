use prodform_core::formulas::{expand, expand_processed, ProcessedFormula, StageCoefficients};
use prodform_core::order_conditions::{condition_vector, FormulaRef};
use prodform_core::solver::solve_processor;
use prodform_core::word_series::residual_by_length;
use prodform_core::{Real, Tier};

use super::in_tier;
use crate::cli::{Globals, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::formula_file::{FormulaFile, Loaded};
use crate::manifest::{manifest_path, RunManifest};

pub fn default_tolerance(tier: Tier) -> f64 {
    match tier {
        Tier::Double => 1e-12,
        Tier::DoubleDouble => 1e-20,
        Tier::QuadDouble => 1e-40,
    }
}

fn print_lengths<T: Real>(by_len: &[T]) -> f64 {
    println!("  length  max |residual|");
    let mut worst = 0.0f64;
    for (i, r) in by_len.iter().enumerate() {
        let r = r.to_f64();
        println!("  {:>6}  {:.3e}", i + 1, r);
        worst = worst.max(r);
    }
    worst
}

fn processed_residual<T: Real>(p: &ProcessedFormula<T>, k: u32) -> CliResult<f64> {
    let by_len = residual_by_length(&expand_processed(p, T::one(), 2)?, k as usize)?;
    Ok(print_lengths(&by_len))
}

fn plain_residual<T: Real>(f: &StageCoefficients<T>, k: u32) -> CliResult<f64> {
    let worst = print_lengths(&residual_by_length(&expand(f, T::one(), 2)?, k as usize)?);
    if matches!(k, 2 | 4 | 6 | 10) {
        let v = condition_vector(FormulaRef::Plain(f), k)?;
        let m = v.iter().fold(0.0f64, |m, x| m.max(x.to_f64().abs()));
        println!("  recursion conditions: max |c| = {m:.3e}");
        return Ok(worst.max(m));
    }
    Ok(worst)
}

fn verdict(what: &str, worst: f64, tol: f64) -> bool {
    let ok = worst <= tol;
    println!("{what}: {} (max {worst:.3e}, tolerance {tol:.0e})", if ok { "PASS" } else { "FAIL" });
    ok
}

fn check<T: Real>(a: &VerifyArgs, file: &FormulaFile, tol: f64, digits: u32, m: &mut RunManifest) -> CliResult<bool> {
    let k = a.order.unwrap_or(file.order);
    let f = file.load::<T>()?;
    println!("{} ({}, order {}) checked at order {k} in {}", file.label, format!("{:?}", file.kind).to_lowercase(), file.order, T::NAME);
    if !a.conjugated {
        return Ok(match &f {
            Loaded::Plain(s) | Loaded::Kernel(s) => verdict("formula", plain_residual(s, k)?, tol),
            Loaded::Processed(p) => verdict("processed formula", processed_residual(p, k)?, tol),
        });
    }
    let kernel = f.kernel().clone();
    let given = match &f {
        Loaded::Processed(p) => {
            println!("given processor:");
            let given = processed_residual(p, k)?;
            if verdict("given processor", given, tol) {
                return Ok(true);
            }
            Some(p.gammas.iter().map(|g| g.to_f64()).collect::<Vec<_>>())
        }
        Loaded::Plain(s) => {
            println!("plain formula, trivial processor:");
            return Ok(verdict("formula", plain_residual(s, k)?, tol));
        }
        Loaded::Kernel(_) => None,
    };
    let g = a.processor_len.unwrap_or(given.as_ref().map_or(10, Vec::len));
    println!(
        "solving for a processor of length {g} ({} restarts{})",
        a.restarts,
        if given.is_some() { ", started from the given one" } else { "" }
    );
    let sol = solve_processor(&kernel, k, g, given.as_deref(), a.restarts, a.seed, digits)?;
    let p = sol
        .processed(&file.label)
        .ok_or_else(|| CliError::Numerical("solver returned no processor".into()))?;
    let ok = verdict("solved processor", processed_residual(&p, k)?, tol);
    if let Some(out) = &a.out {
        let mut ff = FormulaFile::from_solution(&sol, &file.label, "kernel from input, processor solved", T::DIGITS as usize + 2);
        ff.order = k;
        ff.write(out)?;
        m.outputs.push(out.display().to_string());
    }
    Ok(ok)
}

pub fn run(mut a: VerifyArgs, g: Globals) -> CliResult<()> {
    let file = FormulaFile::resolve(&a.formula)?;
    let tol = a.tolerance.unwrap_or(default_tolerance(g.tier));
    a.tolerance = Some(tol);
    a.order = Some(a.order.unwrap_or(file.order));
    let mut m = RunManifest::new("verify", g.tier, g.jobs, &a)?;
    m.seeds.push(a.seed);
    m.inputs.push(a.formula.clone());
    let digits = g.tier.digits() - 2;
    let ok = in_tier!(g.tier, check(&a, &file, tol, digits, &mut m))?;
    if let Some(out) = &a.out {
        m.write(&manifest_path(out))?;
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} does not reach order {}", file.label, a.order.unwrap_or(file.order))))
    }
}

use prodform_core::fermions::NormEstimate;
use prodform_core::thresholds::{asymptotic_threshold, empirical_threshold, FormulaCost};

use crate::cli::{Globals, ThresholdArgs};
use crate::error::{CliError, CliResult};
use crate::manifest::{manifest_path, RunManifest};
use crate::tables::read_curve;

fn cost(v: &[f64], as_metric: bool, flag: &str) -> CliResult<FormulaCost> {
    let [m, k, c] = v else {
        return Err(CliError::Usage(format!("--{flag} takes M,k,c")));
    };
    if k.fract() != 0.0 || *k < 1.0 {
        return Err(CliError::Usage(format!("--{flag}: order must be a positive integer")));
    }
    let k = *k as u32;
    Ok(if as_metric {
        FormulaCost::from_metric(*m, k, *c)
    } else {
        FormulaCost::new(*m, k, *c)
    })
}

fn norms(a: &ThresholdArgs) -> CliResult<Option<NormEstimate>> {
    match a.norms.as_deref() {
        None => Ok(None),
        Some([t, n, e]) if *e >= 1.0 && e.fract() == 0.0 => Ok(Some(NormEstimate::new(*t, *n, *e as usize))),
        Some(_) => Err(CliError::Usage("--norms takes tau,nu,eta with integer eta".into())),
    }
}

#[derive(serde::Serialize)]
struct Row {
    mode: &'static str,
    threshold: f64,
    t_over_eps: Option<f64>,
    t1: Option<f64>,
    t2: Option<f64>,
    r1: Option<f64>,
    r2: Option<f64>,
}

pub fn run(a: ThresholdArgs, g: Globals) -> CliResult<()> {
    let low = a.low.as_deref().map(|v| cost(v, a.metric, "low")).transpose()?;
    let high = a.high.as_deref().map(|v| cost(v, a.metric, "high")).transpose()?;
    let norms = norms(&a)?;
    let mut manifest = RunManifest::new("threshold", g.tier, g.jobs, &a)?;
    let row = match &a.curves {
        Some(paths) => {
            let (f1, f2) = (read_curve(&paths[0])?, read_curve(&paths[1])?);
            manifest.inputs.extend(paths.iter().map(|p| p.display().to_string()));
            let (m1, m2) = match (a.stages.as_deref(), &low, &high) {
                (Some([m1, m2]), _, _) => (*m1, *m2),
                (Some(_), _, _) => return Err(CliError::Usage("--stages takes M1,M2".into())),
                (None, Some(l), Some(h)) => (l.stages, h.stages),
                _ => return Err(CliError::Usage("--curves needs --stages or --low/--high".into())),
            };
            let r = empirical_threshold(m1, &f1, m2, &f2)?;
            let (r1, r2) = r.steps(a.time);
            println!("t1 = {:.6e}\nt2 = {:.6e}\nr1 = {r1:.6e}\nr2 = {r2:.6e}", r.t1, r.t2);
            Row {
                mode: "empirical",
                threshold: r.ratio,
                t_over_eps: None,
                t1: Some(r.t1),
                t2: Some(r.t2),
                r1: Some(r1),
                r2: Some(r2),
            }
        }
        None => {
            let (Some(l), Some(h)) = (low, high) else {
                return Err(CliError::Usage("give --low and --high, or --curves".into()));
            };
            if h.order <= l.order {
                return Err(CliError::Usage("--high must have the higher order".into()));
            }
            Row {
                mode: "asymptotic",
                threshold: asymptotic_threshold(&l, &h)?,
                t_over_eps: None,
                t1: None,
                t2: None,
                r1: None,
                r2: None,
            }
        }
    };
    let row = Row {
        t_over_eps: norms.map(|n| row.threshold / n.lhs_factor()),
        ..row
    };
    println!("threshold = {:.6e}", row.threshold);
    if let Some(x) = row.t_over_eps {
        println!("T/eps for the given norms = {x:.6e}");
    }
    if let Some(p) = &a.out {
        let mut w = csv::Writer::from_path(p)?;
        w.serialize(&row)?;
        w.flush().map_err(|e| CliError::io(p, e))?;
        manifest.outputs.push(p.display().to_string());
        manifest.write(&manifest_path(p))?;
    }
    Ok(())
}

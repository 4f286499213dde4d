//! CSV schemas: benchmark rows, error curves and `(τ, ν)` matrices.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use prodform_core::thresholds::ErrorCurve;

use crate::error::{CliError, CliResult};

/// One row of `bench` output. `row` is `sample` for a single `(sample, t)`
/// measurement and `summary` for the per-formula aggregate; fields that do
/// not apply are empty. In fermionic runs `chi` and `zeta` hold `ξ` and `ω`.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub row: String,
    pub formula: String,
    pub tier: String,
    pub sample: Option<usize>,
    pub t: Option<f64>,
    pub spectral: Option<f64>,
    pub eigen: Option<f64>,
    pub basis: Option<f64>,
    pub samples: Option<usize>,
    pub chi: Option<f64>,
    pub zeta: Option<f64>,
    pub spectral_slope: Option<f64>,
    pub eigen_slope: Option<f64>,
    pub spectral_slope_failures: Option<usize>,
    pub eigen_slope_failures: Option<usize>,
    pub m_chi: Option<f64>,
    pub m_zeta: Option<f64>,
    pub nu_exponent: Option<f64>,
    pub tau_norm: Option<f64>,
    pub nu_norm: Option<f64>,
    pub eta: Option<usize>,
}

pub fn write_rows<W: Write>(out: W, rows: &[BenchRow]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| CliError::Usage(e.to_string()))
}

pub fn read_rows(path: &Path) -> CliResult<Vec<BenchRow>> {
    let mut r = csv::Reader::from_path(path)?;
    r.deserialize().map(|x| x.map_err(CliError::from)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
struct CurvePoint {
    t: f64,
    error: f64,
}

/// Two columns `t,error`.
pub fn write_curve(path: &Path, points: &[(f64, f64)]) -> CliResult<()> {
    let mut w = csv::Writer::from_path(path)?;
    for &(t, error) in points {
        w.serialize(CurvePoint { t, error })?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn read_curve(path: &Path) -> CliResult<ErrorCurve> {
    let mut r = csv::Reader::from_path(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let pts: Vec<(f64, f64)> = r
        .deserialize::<CurvePoint>()
        .map(|p| p.map(|p| (p.t, p.error)))
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    ErrorCurve::new(pts).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// A square matrix, one row per line, no header. Returns `(n, row-major entries)`.
pub fn read_matrix(path: &Path) -> CliResult<(usize, Vec<f64>)> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        let row = rec
            .iter()
            .map(|s| s.parse::<f64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Usage(format!("{}: expected a square matrix", path.display())));
    }
    Ok((n, rows.concat()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_round_trip() {
        let rows = vec![
            BenchRow {
                row: "sample".into(),
                formula: "S4m1".into(),
                tier: "f64".into(),
                sample: Some(3),
                t: Some(0.02),
                spectral: Some(1.5e-9),
                eigen: None,
                ..Default::default()
            },
            BenchRow {
                row: "summary".into(),
                formula: "S4m1".into(),
                chi: Some(4.6e-2),
                ..Default::default()
            },
        ];
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("b.csv");
        write_rows(std::fs::File::create(&p).unwrap(), &rows).unwrap();
        assert_eq!(read_rows(&p).unwrap(), rows);
    }

    #[test]
    fn curves_and_matrices() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("c.csv");
        write_curve(&p, &[(0.1, 1e-9), (0.2, 3e-8)]).unwrap();
        let c = read_curve(&p).unwrap();
        assert_eq!(c.points(), &[(0.1, 1e-9), (0.2, 3e-8)]);
        let m = dir.path().join("m.csv");
        std::fs::write(&m, "1, 3\n3, 4\n").unwrap();
        assert_eq!(read_matrix(&m).unwrap(), (2, vec![1.0, 3.0, 3.0, 4.0]));
        std::fs::write(&m, "1, 3\n3\n").unwrap();
        assert!(read_matrix(&m).is_err());
    }
}

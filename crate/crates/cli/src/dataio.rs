//! Dense numeric CSV IO: datasets are feature columns followed by one
//! target column, header optional, plus a JSON sidecar pinning the generator
//! spec and seed.

use std::path::Path;

use serde::Serialize;

use crate::csvio::fmt_sig;
use crate::error::CliError;
use robmax_core::linalg::Matrix;
use robmax_core::rng::RNG_ALGORITHM;
use robmax_core::synth::{Dataset, SynthSpec, TaskKind};

/// Loads a dense CSV whose last column is the target. The first line is
/// treated as a header when any of its fields fails to parse as a number.
pub fn load_dense_csv(path: &Path) -> Result<(Matrix, Vec<f64>), CliError> {
    let text = std::fs::read_to_string(path)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = line.split(',').map(|f| f.trim().parse()).collect();
        match parsed {
            Ok(fields) => {
                if fields.len() < 2 {
                    return Err(CliError::config(format!(
                        "{}: line {} needs at least one feature and a target",
                        path.display(),
                        lineno + 1
                    )));
                }
                if let Some(first) = rows.first() {
                    if fields.len() != first.len() {
                        return Err(CliError::config(format!(
                            "{}: line {} has {} fields, expected {}",
                            path.display(),
                            lineno + 1,
                            fields.len(),
                            first.len()
                        )));
                    }
                }
                rows.push(fields);
            }
            Err(_) if lineno == 0 => continue, // header
            Err(e) => {
                return Err(CliError::config(format!(
                    "{}: line {}: {e}",
                    path.display(),
                    lineno + 1
                )));
            }
        }
    }
    if rows.is_empty() {
        return Err(CliError::config(format!(
            "{}: no data rows",
            path.display()
        )));
    }
    let d = rows[0].len() - 1;
    let mut y = Vec::with_capacity(rows.len());
    let mut x = Matrix::zeros(rows.len(), d);
    for (i, row) in rows.iter().enumerate() {
        x.row_mut(i).copy_from_slice(&row[..d]);
        y.push(row[d]);
    }
    Ok((x, y))
}

#[derive(Serialize)]
struct Sidecar<'a> {
    n_train: usize,
    n_test: usize,
    d: usize,
    ar_alpha_sq: f64,
    sparsity: usize,
    noise_var: f64,
    task: &'a str,
    seed: u64,
    negate_logit: bool,
    rng: &'a str,
}

/// Writes `train.csv` (and `test.csv` when present) as feature columns plus
/// target, with a `dataset.json` sidecar carrying the generator spec.
pub fn write_dataset(dir: &Path, spec: &SynthSpec, data: &Dataset) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    write_xy(&dir.join("train.csv"), &data.x_train, &data.y_train)?;
    if data.x_test.rows() > 0 {
        write_xy(&dir.join("test.csv"), &data.x_test, &data.y_test)?;
    }
    let sidecar = Sidecar {
        n_train: spec.n_train,
        n_test: spec.n_test,
        d: spec.d,
        ar_alpha_sq: spec.ar_alpha_sq,
        sparsity: spec.sparsity,
        noise_var: spec.noise_var,
        task: match spec.task {
            TaskKind::Linear => "linear",
            TaskKind::Logistic => "logistic",
            TaskKind::Gp => "gp",
        },
        seed: spec.seed,
        negate_logit: spec.negate_logit,
        rng: RNG_ALGORITHM,
    };
    std::fs::write(
        dir.join("dataset.json"),
        serde_json::to_string_pretty(&sidecar)?,
    )?;
    Ok(())
}

fn write_xy(path: &Path, x: &Matrix, y: &[f64]) -> Result<(), CliError> {
    let mut out = String::new();
    for (i, &target) in y.iter().enumerate() {
        let mut fields: Vec<String> = x.row(i).iter().map(|&v| fmt_sig(v)).collect();
        fields.push(fmt_sig(target));
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    std::fs::write(path, out)?;
    Ok(())
}

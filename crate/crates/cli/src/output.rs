//! Writes a finished run to disk: `results.csv` (deterministic),
//! `timings.csv` (wall-clock, excluded from reproducibility guarantees),
//! `manifest.json` (config echo, seeds, versions — re-runnable via
//! `run --config manifest.json`), and per-figure plot CSVs.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::config::ExperimentConfig;
use crate::csvio::{fmt_opt, fmt_sig};
use crate::error::CliError;
use crate::plotdata::emit_plot_data;
use crate::runner::{ResultRow, RunOutput, SkipRecord};

#[derive(Serialize)]
struct Manifest<'a> {
    config: &'a ExperimentConfig,
    rng: &'a str,
    versions: Versions,
    rows: usize,
    skips: &'a [SkipRecord],
}

#[derive(Serialize)]
struct Versions {
    robmax_core: &'static str,
    robmax_cli: &'static str,
}

pub fn results_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from(
        "solver,k,tau,repetition,robust_value,clean_value,test_mse,test_r2,test_accuracy,oracle_evals\n",
    );
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.solver,
            r.k,
            r.tau,
            r.repetition,
            fmt_sig(r.robust_value),
            fmt_sig(r.clean_value),
            fmt_opt(r.test_mse),
            fmt_opt(r.test_r2),
            fmt_opt(r.test_accuracy),
            r.oracle_evals,
        ));
    }
    out
}

pub fn timings_csv(rows: &[ResultRow]) -> String {
    let mut out = String::from("solver,k,tau,repetition,wall_time_s\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.solver,
            r.k,
            r.tau,
            r.repetition,
            fmt_sig(r.wall_time_s)
        ));
    }
    out
}

pub fn manifest_json(out: &RunOutput) -> Result<String, CliError> {
    let manifest = Manifest {
        config: &out.config,
        rng: robmax_core::rng::RNG_ALGORITHM,
        versions: Versions {
            robmax_core: env!("CARGO_PKG_VERSION"),
            robmax_cli: env!("CARGO_PKG_VERSION"),
        },
        rows: out.rows.len(),
        skips: &out.skips,
    };
    Ok(serde_json::to_string_pretty(&manifest)?)
}

/// Writes every output file; returns the paths written.
pub fn write_outputs(out: &RunOutput, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut emit = |name: &str, content: String| -> Result<(), CliError> {
        let path = dir.join(name);
        std::fs::write(&path, content)?;
        written.push(path);
        Ok(())
    };
    emit("results.csv", results_csv(&out.rows))?;
    emit("timings.csv", timings_csv(&out.rows))?;
    emit("manifest.json", manifest_json(out)?)?;
    for plot in emit_plot_data(&out.rows) {
        emit(&plot.name, plot.content)?;
    }
    Ok(written)
}

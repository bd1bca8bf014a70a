//! `robmax` — experiment harness for deletion-robust subset selection.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use robmax_cli::config::ExperimentConfig;
use robmax_cli::csvio::fmt_sig;
use robmax_cli::objective::BuiltObjective;
use robmax_cli::{certify, dataio, output, runner, CliError};
use robmax_core::bounds::guarantee_surface;
use robmax_core::ratios::{estimate_ratios, RatioEstimates};
use robmax_core::set::ItemSet;
use robmax_core::synth;

#[derive(Parser)]
#[command(
    name = "robmax",
    about = "Deletion-robust subset selection: run experiments, certify bounds, estimate set-function ratios",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for repetitions (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment config (or a previously emitted manifest).
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Override the config's seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's output directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify the finite-budget robust bound on a grid of small instances.
    Certify {
        /// Grid config (JSON); defaults to the built-in grid.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Where to write certification.json (default: stdout summary only).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively estimate the seven ratio parameters of a configured
    /// objective (ground set of at most 12 items).
    Ratios {
        #[arg(long)]
        config: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a synthetic dataset (CSV + JSON sidecar) from a config.
    GenData {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Tabulate the asymptotic guarantee over a gamma × theta grid.
    Surface {
        /// Grid points per axis.
        #[arg(long, default_value_t = 51)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), CliError> {
    let threads = cli
        .threads
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    match cli.command {
        Command::Run { config, seed, out } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            if let Some(out) = &out {
                cfg.output_dir = out.display().to_string();
            }
            let result = runner::run_experiment(&cfg, threads)?;
            let dir = PathBuf::from(&cfg.output_dir);
            let written = output::write_outputs(&result, &dir)?;
            println!(
                "wrote {} rows ({} skipped cells) to {}",
                result.rows.len(),
                result.skips.len(),
                dir.display()
            );
            for path in written {
                println!("  {}", path.display());
            }
            Ok(())
        }
        Command::Certify { config, seed, out } => {
            let mut cfg = match config {
                Some(path) => serde_json::from_str(&std::fs::read_to_string(path)?)
                    .map_err(|e| CliError::config(format!("{e}")))?,
                None => certify::CertifyConfig::default(),
            };
            if let Some(seed) = seed {
                cfg.seed = seed;
            }
            let report = certify::certify_bounds(&cfg)?;
            println!(
                "certified {} instances: {} violations, min margin {}, median margin {}",
                report.total,
                report.violations,
                fmt_sig(report.min_margin),
                fmt_sig(report.median_margin)
            );
            if let Some(path) = out {
                if let Some(parent) = path.parent() {
                    if !parent.as_os_str().is_empty() {
                        std::fs::create_dir_all(parent)?;
                    }
                }
                std::fs::write(&path, report.to_json()?)?;
                println!("report written to {}", path.display());
            }
            if report.violations > 0 {
                return Err(CliError::Certification(report.violation_summary()));
            }
            Ok(())
        }
        Command::Ratios { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let objective = BuiltObjective::build(&cfg, 0)?;
            let estimates = match estimate_ratios(objective.set_function()) {
                Err(robmax_core::Error::InstanceTooLarge { size, limit, .. }) => {
                    return Err(CliError::config(format!(
                        "ratio enumeration needs a ground set of at most {limit} items, got {size}"
                    )));
                }
                other => other?,
            };
            let json = serde_json::to_string_pretty(&RatioReport::from(&estimates))?;
            match out {
                Some(path) => std::fs::write(path, json)?,
                None => println!("{json}"),
            }
            Ok(())
        }
        Command::GenData { config, out } => {
            let cfg = ExperimentConfig::load(&config)?;
            let synth_cfg = cfg
                .data
                .synth
                .as_ref()
                .ok_or_else(|| CliError::config("data.synth: gen-data needs a synthetic spec"))?;
            let spec = synth_cfg.to_spec(cfg.task_kind(), cfg.seed);
            let data = synth::generate(&spec)?;
            dataio::write_dataset(&out, &spec, &data)?;
            println!(
                "wrote {} train rows and {} test rows to {}",
                data.x_train.rows(),
                data.x_test.rows(),
                out.display()
            );
            Ok(())
        }
        Command::Surface { steps, out } => {
            if steps < 2 {
                return Err(CliError::config("surface: need at least 2 grid steps"));
            }
            let axis: Vec<f64> = (0..steps)
                .map(|i| i as f64 / (steps - 1) as f64)
                .collect();
            let mut csv = String::from("gamma,theta,factor\n");
            for (g, t, factor) in guarantee_surface(&axis, &axis) {
                csv.push_str(&format!("{},{},{}\n", fmt_sig(g), fmt_sig(t), fmt_sig(factor)));
            }
            match out {
                Some(path) => {
                    std::fs::write(&path, csv)?;
                    println!("surface written to {}", path.display());
                }
                None => print!("{csv}"),
            }
            Ok(())
        }
    }
}

/// JSON-friendly view of the ratio estimates.
#[derive(Serialize)]
struct RatioReport {
    gamma: f64,
    gamma_check: f64,
    alpha: f64,
    alpha_check: f64,
    nu: f64,
    nu_check: f64,
    theta: f64,
    n_pairs_checked: u64,
    witnesses: WitnessReport,
}

#[derive(Serialize)]
struct WitnessReport {
    gamma: Option<PairJson>,
    gamma_check: Option<PairJson>,
    alpha: Option<TripleJson>,
    alpha_check: Option<TripleJson>,
    nu: Option<Vec<usize>>,
    nu_check: Option<Vec<usize>>,
    theta: Option<PairJson>,
}

#[derive(Serialize)]
struct PairJson {
    context: Vec<usize>,
    subject: Vec<usize>,
}

#[derive(Serialize)]
struct TripleJson {
    context: Vec<usize>,
    subject: Vec<usize>,
    item: usize,
}

fn pair(p: &Option<(ItemSet, ItemSet)>) -> Option<PairJson> {
    p.as_ref().map(|(a, b)| PairJson {
        context: a.sorted_members(),
        subject: b.sorted_members(),
    })
}

fn triple(p: &Option<(ItemSet, ItemSet, usize)>) -> Option<TripleJson> {
    p.as_ref().map(|(a, b, i)| TripleJson {
        context: a.sorted_members(),
        subject: b.sorted_members(),
        item: *i,
    })
}

impl From<&RatioEstimates> for RatioReport {
    fn from(r: &RatioEstimates) -> Self {
        Self {
            gamma: r.gamma,
            gamma_check: r.gamma_check,
            alpha: r.alpha,
            alpha_check: r.alpha_check,
            nu: r.nu,
            nu_check: r.nu_check,
            theta: r.theta,
            n_pairs_checked: r.n_pairs_checked,
            witnesses: WitnessReport {
                gamma: pair(&r.witnesses.gamma),
                gamma_check: pair(&r.witnesses.gamma_check),
                alpha: triple(&r.witnesses.alpha),
                alpha_check: triple(&r.witnesses.alpha_check),
                nu: r.witnesses.nu.as_ref().map(ItemSet::sorted_members),
                nu_check: r.witnesses.nu_check.as_ref().map(ItemSet::sorted_members),
                theta: pair(&r.witnesses.theta),
            },
        }
    }
}

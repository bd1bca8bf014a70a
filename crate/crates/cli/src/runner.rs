//! Runs one experiment configuration: for every (solver, k, τ, repetition)
//! cell, build a solution, attack it with the adversary ensemble, and record
//! clean value, robust value, oracle cost and held-out metrics.
//!
//! Repetitions fan out across a worker pool; each cell is a pure function of
//! the config and its derived sub-seed, and rows are merged in sorted order,
//! so results are byte-identical regardless of thread count.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::Serialize;

use robmax_core::adversary::{evaluate_robust, EnsembleConfig};
use robmax_core::linalg::Matrix;
use robmax_core::set::ItemSet;
use robmax_core::solvers::{
    greedy, oblivious, oblivious_greedy, omp, random_greedy, stochastic_greedy, Solution,
    SolverParams,
};
use robmax_core::support::{DesignProblem, LossKind};

use crate::config::{ExperimentConfig, SolverKind};
use crate::error::CliError;
use crate::objective::BuiltObjective;

/// One evaluated cell.
#[derive(Debug, Clone, Serialize)]
pub struct ResultRow {
    pub solver: String,
    pub k: usize,
    pub tau: usize,
    pub repetition: usize,
    pub robust_value: f64,
    pub clean_value: f64,
    pub test_mse: Option<f64>,
    pub test_r2: Option<f64>,
    pub test_accuracy: Option<f64>,
    pub oracle_evals: u64,
    /// Written to `timings.csv`, never to `results.csv`, which must be
    /// byte-reproducible.
    pub wall_time_s: f64,
}

/// A cell that produced no row, with the reason.
#[derive(Debug, Clone, Serialize)]
pub struct SkipRecord {
    pub solver: String,
    pub k: usize,
    pub tau: usize,
    pub repetition: usize,
    pub reason: String,
}

#[derive(Debug)]
pub struct RunOutput {
    pub config: ExperimentConfig,
    pub rows: Vec<ResultRow>,
    pub skips: Vec<SkipRecord>,
}

/// Stable per-cell seed derivation (splitmix64 over tagged components).
fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

pub fn derive_seed(base: u64, tags: &[u64]) -> u64 {
    let mut h = splitmix(base);
    for &t in tags {
        h = splitmix(h ^ t);
    }
    h
}

const SEED_TAG_SOLVER: u64 = 1;
const SEED_TAG_ADVERSARY: u64 = 2;

pub fn run_experiment(cfg: &ExperimentConfig, threads: usize) -> Result<RunOutput, CliError> {
    cfg.validate()?;
    let reps = cfg.repetitions;
    let next = AtomicUsize::new(0);
    type RepResult = (usize, Result<(Vec<ResultRow>, Vec<SkipRecord>), CliError>);
    let collected: Mutex<Vec<RepResult>> = Mutex::new(Vec::with_capacity(reps));
    let workers = threads.max(1).min(reps);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let rep = next.fetch_add(1, Ordering::SeqCst);
                if rep >= reps {
                    break;
                }
                let out = run_repetition(cfg, rep);
                collected
                    .lock()
                    .expect("worker panicked while holding results")
                    .push((rep, out));
            });
        }
    });
    let mut rows = Vec::new();
    let mut skips = Vec::new();
    let mut per_rep = collected.into_inner().expect("workers finished");
    per_rep.sort_by_key(|(rep, _)| *rep);
    for (_, result) in per_rep {
        let (mut r, mut s) = result?;
        rows.append(&mut r);
        skips.append(&mut s);
    }
    rows.sort_by(|a, b| {
        (&a.solver, a.k, a.tau, a.repetition).cmp(&(&b.solver, b.k, b.tau, b.repetition))
    });
    skips.sort_by(|a, b| {
        (&a.solver, a.k, a.tau, a.repetition).cmp(&(&b.solver, b.k, b.tau, b.repetition))
    });
    // every cell either produced a row or a skip record
    let cells: usize = cfg
        .k_grid
        .iter()
        .map(|&k| cfg.tau.resolve(k).len())
        .sum::<usize>()
        * cfg.solvers.len()
        * reps;
    assert_eq!(
        rows.len() + skips.len(),
        cells,
        "cell accounting out of balance"
    );
    Ok(RunOutput {
        config: cfg.clone(),
        rows,
        skips,
    })
}

fn run_repetition(
    cfg: &ExperimentConfig,
    rep: usize,
) -> Result<(Vec<ResultRow>, Vec<SkipRecord>), CliError> {
    let objective = BuiltObjective::build(cfg, rep)?;
    let f = objective.set_function();
    let n = f.ground().size();
    let mut rows = Vec::new();
    let mut skips = Vec::new();
    // greedy-family solutions do not depend on tau; solve once per (solver, k)
    let mut cache: HashMap<(usize, usize), Solution> = HashMap::new();
    for (si, solver) in cfg.solvers.iter().enumerate() {
        for &k in &cfg.k_grid {
            for tau in cfg.tau.resolve(k) {
                let skip = |reason: String, skips: &mut Vec<SkipRecord>| {
                    skips.push(SkipRecord {
                        solver: solver.name(),
                        k,
                        tau,
                        repetition: rep,
                        reason,
                    });
                };
                if k > n {
                    skip(format!("budget k={k} exceeds ground set size n={n}"), &mut skips);
                    continue;
                }
                if tau >= k {
                    skip(format!("tau={tau} must stay below k={k}"), &mut skips);
                    continue;
                }
                let started = Instant::now();
                let solver_seed = derive_seed(
                    cfg.seed,
                    &[SEED_TAG_SOLVER, rep as u64, si as u64, k as u64],
                );
                let solution = match solver.kind {
                    SolverKind::ObliviousGreedy => {
                        let params = SolverParams {
                            k,
                            tau,
                            beta: solver.beta_for(k),
                            epsilon: solver.epsilon_or_default(),
                            seed: solver_seed,
                        };
                        if params.oblivious_size() > k {
                            skip(
                                format!(
                                    "oblivious block ceil(beta*tau)={} exceeds k={k}",
                                    params.oblivious_size()
                                ),
                                &mut skips,
                            );
                            continue;
                        }
                        oblivious_greedy(&f, &params)?
                    }
                    kind => match cache.entry((si, k)) {
                        std::collections::hash_map::Entry::Occupied(e) => e.get().clone(),
                        std::collections::hash_map::Entry::Vacant(slot) => {
                            let sol = match kind {
                                SolverKind::Greedy => greedy(&f, k)?,
                                SolverKind::Oblivious => oblivious(&f, k)?,
                                SolverKind::StochasticGreedy => {
                                    stochastic_greedy(&f, k, solver.epsilon_or_default(), solver_seed)?
                                }
                                SolverKind::RandomGreedy => random_greedy(&f, k, solver_seed)?,
                                SolverKind::Omp => {
                                    let problem = objective.support_problem().ok_or(
                                        robmax_core::Error::UnsupportedOracle {
                                            op: "gradient access for omp",
                                        },
                                    )?;
                                    omp(problem, k)?
                                }
                                SolverKind::ObliviousGreedy => unreachable!(),
                            };
                            slot.insert(sol).clone()
                        }
                    },
                };
                let ensemble = EnsembleConfig {
                    use_exact: cfg.adversaries.use_exact,
                    random_runs: cfg.adversaries.random_runs,
                    epsilon: cfg.adversaries.epsilon,
                    seed: derive_seed(
                        cfg.seed,
                        &[
                            SEED_TAG_ADVERSARY,
                            rep as u64,
                            si as u64,
                            k as u64,
                            tau as u64,
                        ],
                    ),
                };
                let report = evaluate_robust(&f, &solution.selected, tau, &ensemble)?;
                let witness_removed = report
                    .outcomes
                    .iter()
                    .find(|o| o.name == report.ensemble_witness)
                    .map(|o| o.removed.clone())
                    .unwrap_or_default();
                let surviving = solution.selected.difference(&witness_removed);
                let (test_mse, test_r2, test_accuracy) = match &objective {
                    BuiltObjective::Support {
                        problem,
                        x_test,
                        y_test,
                    } => support_metrics(problem, x_test, y_test, &surviving)?,
                    _ => (None, None, None),
                };
                rows.push(ResultRow {
                    solver: solver.name(),
                    k,
                    tau,
                    repetition: rep,
                    robust_value: report.ensemble_min,
                    clean_value: solution.value,
                    test_mse,
                    test_r2,
                    test_accuracy,
                    oracle_evals: solution.evals,
                    wall_time_s: started.elapsed().as_secs_f64(),
                });
            }
        }
    }
    Ok((rows, skips))
}

/// `(test_mse, test_r2, test_accuracy)` columns of a row.
type TestMetrics = (Option<f64>, Option<f64>, Option<f64>);

/// Held-out metrics of the model refit on the post-deletion surviving
/// feature set: MSE and R² for regression, 0-1 accuracy for classification.
fn support_metrics(
    problem: &DesignProblem,
    x_test: &Matrix,
    y_test: &[f64],
    surviving: &ItemSet,
) -> Result<TestMetrics, CliError> {
    if x_test.rows() == 0 {
        return Ok((None, None, None));
    }
    let coefs = problem.restricted_maximizer(surviving)?;
    let scores = x_test.matvec(&coefs);
    let n = y_test.len() as f64;
    match problem.loss_kind() {
        LossKind::LeastSquares => {
            let mse = y_test
                .iter()
                .zip(scores.iter())
                .map(|(&y, &s)| (y - s) * (y - s))
                .sum::<f64>()
                / n;
            let mean = y_test.iter().sum::<f64>() / n;
            let ss_tot = y_test.iter().map(|&y| (y - mean) * (y - mean)).sum::<f64>();
            let r2 = if ss_tot > 0.0 {
                Some(1.0 - mse * n / ss_tot)
            } else {
                None
            };
            Ok((Some(mse), r2, None))
        }
        LossKind::Logistic => {
            let correct = y_test
                .iter()
                .zip(scores.iter())
                .filter(|(&y, &s)| (s > 0.0) == (y == 1.0))
                .count();
            Ok((None, None, Some(correct as f64 / n)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{
        AdversaryConfig, DataConfig, ObjectiveKind, SolverConfig, SynthConfig, TauConfig,
    };

    fn solver(kind: SolverKind) -> SolverConfig {
        SolverConfig {
            kind,
            beta: None,
            beta_log_k: false,
            epsilon: None,
            label: None,
        }
    }

    fn toy_config() -> ExperimentConfig {
        ExperimentConfig {
            objective: ObjectiveKind::Toy,
            data: DataConfig {
                synth: Some(SynthConfig {
                    n_train: 1,
                    n_test: 0,
                    d: 10,
                    ar_alpha_sq: 0.5,
                    sparsity: 0,
                    noise_var: None,
                    seed: None,
                    negate_logit: false,
                }),
                csv: None,
            },
            solvers: vec![
                solver(SolverKind::Greedy),
                solver(SolverKind::Oblivious),
                solver(SolverKind::ObliviousGreedy),
            ],
            k_grid: vec![3],
            tau: TauConfig::counts(vec![1]),
            adversaries: AdversaryConfig {
                use_exact: true,
                ..AdversaryConfig::default()
            },
            repetitions: 2,
            seed: 11,
            output_dir: "out".into(),
        }
    }

    #[test]
    fn modular_objective_collapses_all_solvers() {
        // on a modular toy objective the three solvers pick the same top-k
        // set, so clean and robust values coincide across solvers
        let out = run_experiment(&toy_config(), 1).unwrap();
        assert_eq!(out.rows.len(), 6);
        assert!(out.skips.is_empty());
        for rep in 0..2 {
            let vals: Vec<(f64, f64)> = out
                .rows
                .iter()
                .filter(|r| r.repetition == rep)
                .map(|r| (r.clean_value, r.robust_value))
                .collect();
            for w in vals.windows(2) {
                assert!((w[0].0 - w[1].0).abs() < 1e-12);
                assert!((w[0].1 - w[1].1).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn robust_never_exceeds_clean() {
        let out = run_experiment(&toy_config(), 1).unwrap();
        for r in &out.rows {
            assert!(r.robust_value <= r.clean_value + 1e-9);
        }
    }

    #[test]
    fn rerun_is_identical_and_thread_count_invariant() {
        let a = run_experiment(&toy_config(), 1).unwrap();
        let b = run_experiment(&toy_config(), 2).unwrap();
        assert_eq!(a.rows.len(), b.rows.len());
        for (x, y) in a.rows.iter().zip(b.rows.iter()) {
            assert_eq!(x.solver, y.solver);
            assert_eq!(
                (x.k, x.tau, x.repetition, x.oracle_evals),
                (y.k, y.tau, y.repetition, y.oracle_evals)
            );
            assert_eq!(x.robust_value.to_bits(), y.robust_value.to_bits());
            assert_eq!(x.clean_value.to_bits(), y.clean_value.to_bits());
        }
    }

    #[test]
    fn infeasible_cells_are_skipped_with_reasons() {
        let mut cfg = toy_config();
        cfg.solvers = vec![SolverConfig {
            kind: SolverKind::ObliviousGreedy,
            beta: Some(4.0), // ceil(4*1) = 4 > k = 3
            beta_log_k: false,
            epsilon: None,
            label: None,
        }];
        cfg.repetitions = 1;
        let out = run_experiment(&cfg, 1).unwrap();
        assert!(out.rows.is_empty());
        assert_eq!(out.skips.len(), 1);
        assert!(out.skips[0].reason.contains("oblivious block"));
        // accounting: cells = rows + skips
        assert_eq!(out.rows.len() + out.skips.len(), 1);
    }

    #[test]
    fn support_rows_carry_test_metrics() {
        let mut cfg = toy_config();
        cfg.objective = ObjectiveKind::SupportLinear;
        cfg.data.synth = Some(SynthConfig {
            n_train: 30,
            n_test: 15,
            d: 10,
            ar_alpha_sq: 0.5,
            sparsity: 4,
            noise_var: None,
            seed: None,
            negate_logit: false,
        });
        cfg.repetitions = 1;
        let out = run_experiment(&cfg, 1).unwrap();
        for r in &out.rows {
            assert!(r.test_mse.is_some());
            assert!(r.test_r2.is_some());
            assert!(r.test_accuracy.is_none());
        }
    }
}

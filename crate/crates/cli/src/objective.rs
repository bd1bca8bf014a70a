//! Builds the objective for one repetition of an experiment: synthetic or
//! CSV-backed data, the set-function oracle over it, and whatever held-out
//! rows exist for test metrics.

use robmax_core::gp::{GpProblem, KernelSpec, VarianceReductionOracle};
use robmax_core::linalg::Matrix;
use robmax_core::oracle::SetFunction;
use robmax_core::rng::{self, streams};
use robmax_core::set::ItemSet;
use robmax_core::support::{DesignProblem, LossKind};
use robmax_core::synth::{self, TaskKind};
use robmax_core::toy::ModularOracle;

use crate::config::{ExperimentConfig, ObjectiveKind};
use crate::dataio;
use crate::error::CliError;

/// Default ridge weights: unregularized least squares, lightly regularized
/// logistic so the likelihood is strongly concave and the oracle
/// well-defined.
pub const LINEAR_RIDGE: f64 = 0.0;
pub const LOGISTIC_RIDGE: f64 = 1e-6;

pub enum BuiltObjective {
    Toy(ModularOracle),
    Support {
        problem: DesignProblem,
        x_test: Matrix,
        y_test: Vec<f64>,
    },
    Gp(VarianceReductionOracle),
}

impl BuiltObjective {
    /// Builds the objective for repetition `rep`. Synthetic data is
    /// regenerated per repetition with seed `base + rep`; CSV data is fixed
    /// across repetitions.
    pub fn build(cfg: &ExperimentConfig, rep: usize) -> Result<Self, CliError> {
        let data_seed = cfg
            .data
            .synth
            .as_ref()
            .and_then(|s| s.seed)
            .unwrap_or(cfg.seed)
            .wrapping_add(rep as u64);
        match cfg.objective {
            ObjectiveKind::Toy => {
                let n = match &cfg.data.synth {
                    Some(s) => s.d,
                    None => {
                        return Err(CliError::config(
                            "data.synth: the toy objective needs `d` for its ground size",
                        ))
                    }
                };
                let mut r = rng::stream_rng(data_seed, streams::WEIGHTS);
                let weights: Vec<f64> = (0..n).map(|_| rng::uniform(&mut r, 0.5, 1.5)).collect();
                Ok(BuiltObjective::Toy(ModularOracle::new(weights)?))
            }
            ObjectiveKind::SupportLinear | ObjectiveKind::SupportLogistic => {
                let loss = match cfg.objective {
                    ObjectiveKind::SupportLinear => LossKind::LeastSquares,
                    _ => LossKind::Logistic,
                };
                let ridge = match loss {
                    LossKind::LeastSquares => LINEAR_RIDGE,
                    LossKind::Logistic => LOGISTIC_RIDGE,
                };
                let (x_train, y_train, x_test, y_test) = match (&cfg.data.synth, &cfg.data.csv) {
                    (Some(synth), None) => {
                        let mut spec = synth.to_spec(cfg.task_kind(), cfg.seed);
                        spec.seed = data_seed;
                        let data = synth::generate(&spec)?;
                        (data.x_train, data.y_train, data.x_test, data.y_test)
                    }
                    (None, Some(path)) => {
                        let (x, y) = dataio::load_dense_csv(std::path::Path::new(path))?;
                        let cols = x.cols();
                        (x, y, Matrix::zeros(0, cols), Vec::new())
                    }
                    _ => unreachable!("config validation enforces exactly one source"),
                };
                let problem = DesignProblem::new(x_train, y_train, loss, ridge)?;
                Ok(BuiltObjective::Support {
                    problem,
                    x_test,
                    y_test,
                })
            }
            ObjectiveKind::GpVarianceReduction => {
                let synth = cfg
                    .data
                    .synth
                    .as_ref()
                    .expect("config validation requires synthetic data for GP");
                let mut spec = synth.to_spec(TaskKind::Gp, cfg.seed);
                spec.seed = data_seed;
                spec.validate()?;
                let points =
                    synth::autoregressive_matrix(spec.n_train, spec.d, spec.ar_alpha_sq, spec.seed)?;
                // random half/half split into targets and candidates
                let mut split_rng = rng::stream_rng(spec.seed, streams::SPLIT);
                let n = points.rows();
                let shuffled = rng::sample_distinct(&mut split_rng, n, n);
                let half = n / 2;
                let targets: ItemSet = shuffled[..half].iter().copied().collect();
                let candidates: ItemSet = shuffled[half..].iter().copied().collect();
                let problem = GpProblem::new(
                    points,
                    KernelSpec::Matern32 {
                        lengthscale: 1.0,
                        output_variance: 1.0,
                    },
                    spec.noise_var,
                    targets,
                    candidates,
                )?;
                Ok(BuiltObjective::Gp(VarianceReductionOracle::new(problem)))
            }
        }
    }

    pub fn set_function(&self) -> &dyn SetFunction {
        match self {
            BuiltObjective::Toy(f) => f,
            BuiltObjective::Support { problem, .. } => problem,
            BuiltObjective::Gp(f) => f,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.set_function().ground().size()
    }

    pub fn support_problem(&self) -> Option<&DesignProblem> {
        match self {
            BuiltObjective::Support { problem, .. } => Some(problem),
            _ => None,
        }
    }
}

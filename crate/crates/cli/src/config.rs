//! Experiment configuration: a single JSON file, human-editable, with
//! unknown keys rejected everywhere. The full schema is documented in the
//! README; `validate` reports the offending field by name.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::CliError;
use robmax_core::synth::{SynthSpec, TaskKind};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub objective: ObjectiveKind,
    pub data: DataConfig,
    pub solvers: Vec<SolverConfig>,
    pub k_grid: Vec<usize>,
    pub tau: TauConfig,
    #[serde(default)]
    pub adversaries: AdversaryConfig,
    pub repetitions: usize,
    pub seed: u64,
    pub output_dir: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObjectiveKind {
    SupportLinear,
    SupportLogistic,
    GpVarianceReduction,
    Toy,
}

#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct DataConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub synth: Option<SynthConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub csv: Option<String>,
}

/// Synthetic-data knobs; the task kind is implied by the objective.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SynthConfig {
    pub n_train: usize,
    #[serde(default)]
    pub n_test: usize,
    pub d: usize,
    pub ar_alpha_sq: f64,
    #[serde(default)]
    pub sparsity: usize,
    /// Defaults per task: 5.0 for linear targets, 1.0 for GP observation
    /// noise, unused for logistic labels.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noise_var: Option<f64>,
    /// Dataset seed; derived from the experiment seed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Flip the sign inside the logistic label rule.
    #[serde(default)]
    pub negate_logit: bool,
}

impl SynthConfig {
    pub fn to_spec(&self, task: TaskKind, fallback_seed: u64) -> SynthSpec {
        let noise_default = match task {
            TaskKind::Linear => 5.0,
            TaskKind::Logistic => 0.0,
            TaskKind::Gp => 1.0,
        };
        SynthSpec {
            n_train: self.n_train,
            n_test: self.n_test,
            d: self.d,
            ar_alpha_sq: self.ar_alpha_sq,
            sparsity: self.sparsity,
            noise_var: self.noise_var.unwrap_or(noise_default),
            task,
            seed: self.seed.unwrap_or(fallback_seed),
            negate_logit: self.negate_logit,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolverConfig {
    pub kind: SolverKind,
    /// Oblivious block scale; defaults to 1 (best at desk-scale budgets).
    /// Ignored by solvers without an oblivious block.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    /// Use `β = ln k` per cell instead of a fixed value.
    #[serde(default)]
    pub beta_log_k: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    /// Column label override for result rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SolverKind {
    Greedy,
    Oblivious,
    ObliviousGreedy,
    StochasticGreedy,
    RandomGreedy,
    Omp,
}

impl SolverKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolverKind::Greedy => "greedy",
            SolverKind::Oblivious => "oblivious",
            SolverKind::ObliviousGreedy => "oblivious_greedy",
            SolverKind::StochasticGreedy => "stochastic_greedy",
            SolverKind::RandomGreedy => "random_greedy",
            SolverKind::Omp => "omp",
        }
    }
}

impl SolverConfig {
    pub fn name(&self) -> String {
        if let Some(label) = &self.label {
            return label.clone();
        }
        self.kind.as_str().to_string()
    }

    pub fn beta_for(&self, k: usize) -> f64 {
        if self.beta_log_k {
            (k as f64).ln().max(1.0)
        } else {
            self.beta.unwrap_or(1.0)
        }
    }

    pub fn epsilon_or_default(&self) -> f64 {
        self.epsilon.unwrap_or(0.01)
    }
}

/// Deletion budgets: absolute counts, or fractions of each budget `k`
/// (rounded to the nearest count). Exactly one must be given.
#[derive(Debug, Clone, Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct TauConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fractions_of_k: Option<Vec<f64>>,
}

impl TauConfig {
    pub fn counts(counts: Vec<usize>) -> Self {
        Self {
            counts: Some(counts),
            fractions_of_k: None,
        }
    }

    pub fn fractions(fractions: Vec<f64>) -> Self {
        Self {
            counts: None,
            fractions_of_k: Some(fractions),
        }
    }

    /// Deletion budgets for one `k`, duplicates removed in order.
    pub fn resolve(&self, k: usize) -> Vec<usize> {
        let raw: Vec<usize> = match (&self.counts, &self.fractions_of_k) {
            (Some(c), _) => c.clone(),
            (None, Some(f)) => f.iter().map(|&x| (x * k as f64).round() as usize).collect(),
            (None, None) => Vec::new(),
        };
        let mut seen = Vec::new();
        for t in raw {
            if !seen.contains(&t) {
                seen.push(t);
            }
        }
        seen
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdversaryConfig {
    /// Run the exact brute-force adversary when the enumeration guard
    /// allows it.
    #[serde(default)]
    pub use_exact: bool,
    #[serde(default = "default_random_runs")]
    pub random_runs: u32,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
}

fn default_random_runs() -> u32 {
    3
}

fn default_epsilon() -> f64 {
    0.01
}

impl Default for AdversaryConfig {
    fn default() -> Self {
        Self {
            use_exact: false,
            random_runs: default_random_runs(),
            epsilon: default_epsilon(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        // manifests wrap the config under a "config" key; accept both
        let config_value = match value.get("config") {
            Some(inner) => inner.clone(),
            None => value,
        };
        let cfg: ExperimentConfig = serde_json::from_value(config_value)
            .map_err(|e| CliError::config(format!("{e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.repetitions == 0 {
            return Err(CliError::config("repetitions: must be at least 1"));
        }
        if self.k_grid.is_empty() || self.k_grid.contains(&0) {
            return Err(CliError::config("k_grid: must list positive budgets"));
        }
        if self.solvers.is_empty() {
            return Err(CliError::config("solvers: must list at least one solver"));
        }
        let mut names: Vec<String> = self.solvers.iter().map(SolverConfig::name).collect();
        names.sort();
        names.dedup();
        if names.len() != self.solvers.len() {
            return Err(CliError::config(
                "solvers: names collide; set `label` to distinguish repeated kinds",
            ));
        }
        for s in &self.solvers {
            if let Some(eps) = s.epsilon {
                if !(eps > 0.0 && eps < 1.0) {
                    return Err(CliError::config("solvers.epsilon: must lie in (0, 1)"));
                }
            }
            if let Some(beta) = s.beta {
                if beta <= 0.0 || !beta.is_finite() {
                    return Err(CliError::config("solvers.beta: must be positive and finite"));
                }
            }
            if s.kind == SolverKind::Omp
                && !matches!(
                    self.objective,
                    ObjectiveKind::SupportLinear | ObjectiveKind::SupportLogistic
                )
            {
                return Err(CliError::config(
                    "solvers.kind: omp needs a gradient objective (support_linear or support_logistic)",
                ));
            }
        }
        match (&self.tau.counts, &self.tau.fractions_of_k) {
            (Some(_), Some(_)) | (None, None) => {
                return Err(CliError::config(
                    "tau: give exactly one of `counts` or `fractions_of_k`",
                ));
            }
            (Some(counts), None) => {
                let min_k = *self.k_grid.iter().min().expect("k_grid non-empty");
                if counts.iter().any(|&t| t >= min_k) {
                    return Err(CliError::config(
                        "tau.counts: every deletion budget must stay below min(k_grid)",
                    ));
                }
            }
            (None, Some(fractions)) => {
                if fractions.iter().any(|&f| !(0.0..1.0).contains(&f)) {
                    return Err(CliError::config(
                        "tau.fractions_of_k: fractions must lie in [0, 1)",
                    ));
                }
            }
        }
        if !(self.adversaries.epsilon > 0.0 && self.adversaries.epsilon < 1.0) {
            return Err(CliError::config("adversaries.epsilon: must lie in (0, 1)"));
        }
        match (&self.data.synth, &self.data.csv) {
            (None, None) => {
                return Err(CliError::config("data: give `synth` or `csv`"));
            }
            (Some(_), Some(_)) => {
                return Err(CliError::config("data: give only one of `synth` or `csv`"));
            }
            (Some(synth), None) => {
                let task = self.task_kind();
                synth
                    .to_spec(task, self.seed)
                    .validate()
                    .map_err(|e| CliError::config(format!("data.synth: {e}")))?;
            }
            (None, Some(_)) => {
                if matches!(self.objective, ObjectiveKind::GpVarianceReduction) {
                    return Err(CliError::config(
                        "data.csv: the GP objective needs synthetic point data",
                    ));
                }
            }
        }
        if self.output_dir.is_empty() {
            return Err(CliError::config("output_dir: must be non-empty"));
        }
        Ok(())
    }

    pub fn task_kind(&self) -> TaskKind {
        match self.objective {
            ObjectiveKind::SupportLinear | ObjectiveKind::Toy => TaskKind::Linear,
            ObjectiveKind::SupportLogistic => TaskKind::Logistic,
            ObjectiveKind::GpVarianceReduction => TaskKind::Gp,
        }
    }
}

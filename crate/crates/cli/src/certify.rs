//! End-to-end certification of the finite-budget approximation bound on
//! small random instances.
//!
//! For each instance: exhaustively compute the seven ratio parameters of a
//! random monotone oracle, run the two-phase solver with `β > 1`, hit its
//! selection with the exact brute-force adversary, brute-force the optimum
//! `(k−τ)`-set over the items the adversary left available, evaluate the
//! curvature-form finite-k bound, and check
//! `robust_value ≥ bound` with the margin recorded. Any violated instance is
//! a certification failure listing both sides.

use serde::{Deserialize, Serialize};

use robmax_core::adversary::brute_force_min;
use robmax_core::bounds::{approximation_bound, BoundForm, BoundInputs};
use robmax_core::exhaustive::max_value_subset;
use robmax_core::oracle::SetFunction;
use robmax_core::ratios::estimate_ratios;
use robmax_core::set::ItemIndex;
use robmax_core::solvers::{oblivious_greedy, SolverParams};
use robmax_core::toy::random_monotone;

use crate::error::CliError;
use crate::runner::derive_seed;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertifyConfig {
    #[serde(default = "default_n_values")]
    pub n_values: Vec<usize>,
    #[serde(default = "default_k_values")]
    pub k_values: Vec<usize>,
    #[serde(default = "default_tau_values")]
    pub tau_values: Vec<usize>,
    #[serde(default = "default_beta_values")]
    pub beta_values: Vec<f64>,
    #[serde(default = "default_seeds_per_combo")]
    pub seeds_per_combo: usize,
    #[serde(default)]
    pub seed: u64,
}

fn default_n_values() -> Vec<usize> {
    vec![6, 7, 8]
}

fn default_k_values() -> Vec<usize> {
    vec![3, 4, 5]
}

fn default_tau_values() -> Vec<usize> {
    vec![1, 2]
}

fn default_beta_values() -> Vec<f64> {
    vec![1.5, 2.0]
}

fn default_seeds_per_combo() -> usize {
    8
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            n_values: default_n_values(),
            k_values: default_k_values(),
            tau_values: default_tau_values(),
            beta_values: default_beta_values(),
            seeds_per_combo: default_seeds_per_combo(),
            seed: 0,
        }
    }
}

/// One certified instance: the grid point, the brute-forced quantities, and
/// both sides of the inequality.
#[derive(Debug, Clone, Serialize)]
pub struct CertInstance {
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    pub beta: f64,
    pub seed: u64,
    pub gamma: f64,
    pub theta: f64,
    pub nu: f64,
    pub nu_check: f64,
    pub alpha_check: f64,
    pub opt_value: f64,
    pub bound: f64,
    pub robust_value: f64,
    pub margin: f64,
    pub violated: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertReport {
    pub total: usize,
    pub violations: usize,
    pub min_margin: f64,
    pub median_margin: f64,
    pub instances: Vec<CertInstance>,
}

const MARGIN_TOL: f64 = 1e-9;

pub fn certify_bounds(cfg: &CertifyConfig) -> Result<CertReport, CliError> {
    let mut instances = Vec::new();
    for &n in &cfg.n_values {
        for &k in &cfg.k_values {
            if k > n {
                continue;
            }
            for &tau in &cfg.tau_values {
                if tau >= k {
                    continue;
                }
                for &beta in &cfg.beta_values {
                    if (beta * tau as f64).ceil() as usize > k {
                        continue;
                    }
                    for s in 0..cfg.seeds_per_combo {
                        let seed = derive_seed(
                            cfg.seed,
                            &[n as u64, k as u64, tau as u64, beta.to_bits(), s as u64],
                        );
                        instances.push(certify_instance(n, k, tau, beta, seed)?);
                    }
                }
            }
        }
    }
    if instances.is_empty() {
        return Err(CliError::config(
            "certification grid is empty; no feasible (n, k, tau, beta) combination",
        ));
    }
    let violations = instances.iter().filter(|i| i.violated).count();
    let mut margins: Vec<f64> = instances.iter().map(|i| i.margin).collect();
    margins.sort_by(f64::total_cmp);
    let report = CertReport {
        total: instances.len(),
        violations,
        min_margin: margins[0],
        median_margin: margins[margins.len() / 2],
        instances,
    };
    Ok(report)
}

fn certify_instance(
    n: usize,
    k: usize,
    tau: usize,
    beta: f64,
    seed: u64,
) -> Result<CertInstance, CliError> {
    let f = random_monotone(n, seed)?;
    let ratios = estimate_ratios(&f)?;
    let params = SolverParams::new(k, tau).with_beta(beta);
    let solution = oblivious_greedy(&f, &params)?;
    let (removed, _) = brute_force_min(&f, &solution.selected, tau)?;
    let robust_value = f.eval(&solution.selected.difference(&removed))?;
    let available: Vec<ItemIndex> = (0..n).filter(|&i| !removed.contains(i)).collect();
    let (_, opt_value) = max_value_subset(&f, &available, k - tau)?;
    let inputs = BoundInputs {
        k,
        tau,
        beta,
        gamma: ratios.gamma,
        theta: ratios.theta,
        nu: ratios.nu,
        nu_check: ratios.nu_check,
        alpha_check: ratios.alpha_check,
        form: BoundForm::CurvatureFiniteK,
    };
    let bound = approximation_bound(&inputs, opt_value)?;
    let margin = robust_value - bound;
    Ok(CertInstance {
        n,
        k,
        tau,
        beta,
        seed,
        gamma: ratios.gamma,
        theta: ratios.theta,
        nu: ratios.nu,
        nu_check: ratios.nu_check,
        alpha_check: ratios.alpha_check,
        opt_value,
        bound,
        robust_value,
        margin,
        violated: margin < -MARGIN_TOL,
    })
}

impl CertReport {
    pub fn to_json(&self) -> Result<String, CliError> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Human summary of violated instances, for the failure message.
    pub fn violation_summary(&self) -> String {
        self.instances
            .iter()
            .filter(|i| i.violated)
            .map(|i| {
                format!(
                    "n={} k={} tau={} beta={} seed={}: robust {} < bound {} (gamma={} theta={} nu_check={} alpha_check={})",
                    i.n, i.k, i.tau, i.beta, i.seed, i.robust_value, i.bound,
                    i.gamma, i.theta, i.nu_check, i.alpha_check
                )
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

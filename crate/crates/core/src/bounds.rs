//! Closed-form approximation guarantees for the two-phase robust solver.
//!
//! Given the ratio parameters of the objective (see [`crate::ratios`]) and
//! the solver configuration `(k, τ, β)`, these formulas lower-bound the
//! post-deletion value `f(S \ E*)` achieved by
//! [`crate::solvers::oblivious_greedy`] as a fraction of
//! `f(OPT_{(k−τ, V∖E*)})`, the best `(k−τ)`-set avoiding the adversary's
//! removal.
//!
//! All four forms share the greedy term
//! `G = 1 − exp(−γ·(k−⌈βτ⌉)/(k−τ))` and a pivot
//! `P = q/(1+q)`, and differ in which parameters feed `q`:
//!
//! * curvature form: `q = (β−1)·ν̌·(1−α̌)`, factor `θ·P·G/(1+P·G)`;
//! * subadditive form: `q = (β−1)·ν̌·ν`, factor `θ²·P·G/(1+θ·P·G)`.
//!
//! The asymptotic variants are the `k → ∞`, `β ≥ log k`, `τ = o(k/β)`
//! limits of the same expressions (`P → 1`, exponent `→ γ`):
//! `θ·(1−e^{−γ})/(2−e^{−γ})` and `θ²·(1−e^{−γ})/(1+θ·(1−e^{−γ}))`. For a
//! submodular objective (`γ = θ = 1`) the curvature form gives ≈ 0.387.
//!
//! `β ≤ 1` makes `q ≤ 0`; the factor is then clamped to zero rather than
//! treated as an error (the finite-`k` guarantee simply says nothing there).

use alloc::vec::Vec;

use crate::error::Error;

/// Which guarantee expression to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundForm {
    /// Finite-budget bound driven by `ν̌` and the inverse curvature `α̌`.
    CurvatureFiniteK,
    /// Finite-budget bound driven by `ν̌·ν` with the `θ²` front factor.
    SubadditiveFiniteK,
    /// Large-budget limit of the curvature form.
    CurvatureAsymptotic,
    /// Large-budget limit of the subadditive form.
    SubadditiveAsymptotic,
}

/// Inputs to [`approximation_bound`].
#[derive(Clone, Copy, Debug)]
pub struct BoundInputs {
    pub k: usize,
    pub tau: usize,
    pub beta: f64,
    pub gamma: f64,
    pub theta: f64,
    pub nu: f64,
    pub nu_check: f64,
    pub alpha_check: f64,
    pub form: BoundForm,
}

impl BoundInputs {
    /// Deletion fraction `c = τ/k`.
    pub fn c(&self) -> f64 {
        self.tau as f64 / self.k as f64
    }

    fn oblivious_size(&self) -> usize {
        libm::ceil(self.beta * self.tau as f64) as usize
    }

    pub fn validate(&self) -> Result<(), Error> {
        for r in [self.gamma, self.theta, self.nu, self.nu_check, self.alpha_check] {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::InvalidParameter {
                    what: "ratio parameters must lie in [0, 1]",
                });
            }
        }
        match self.form {
            BoundForm::CurvatureFiniteK | BoundForm::SubadditiveFiniteK => {
                if self.k == 0 || self.tau >= self.k {
                    return Err(Error::InvalidParameter {
                        what: "finite-k bound needs 0 <= tau < k",
                    });
                }
                if !(self.beta > 0.0) || !self.beta.is_finite() {
                    return Err(Error::InvalidParameter {
                        what: "beta must be positive and finite",
                    });
                }
                let s0 = self.oblivious_size();
                if s0 > self.k {
                    return Err(Error::ObliviousBudget { s0, k: self.k });
                }
            }
            _ => {}
        }
        Ok(())
    }
}

fn pivot(q: f64) -> f64 {
    let q = q.max(0.0);
    q / (1.0 + q)
}

/// The guarantee as a multiplier in `[0, 1]`.
pub fn approximation_factor(inputs: &BoundInputs) -> Result<f64, Error> {
    inputs.validate()?;
    let factor = match inputs.form {
        BoundForm::CurvatureFiniteK | BoundForm::SubadditiveFiniteK => {
            let exponent = inputs.gamma * (inputs.k - inputs.oblivious_size()) as f64
                / (inputs.k - inputs.tau) as f64;
            let g = 1.0 - libm::exp(-exponent);
            match inputs.form {
                BoundForm::CurvatureFiniteK => {
                    let p = pivot((inputs.beta - 1.0) * inputs.nu_check * (1.0 - inputs.alpha_check));
                    inputs.theta * p * g / (1.0 + p * g)
                }
                _ => {
                    let p = pivot((inputs.beta - 1.0) * inputs.nu_check * inputs.nu);
                    inputs.theta * inputs.theta * p * g / (1.0 + inputs.theta * p * g)
                }
            }
        }
        BoundForm::CurvatureAsymptotic => asymptotic_factor(inputs.gamma, inputs.theta),
        BoundForm::SubadditiveAsymptotic => {
            let g = 1.0 - libm::exp(-inputs.gamma);
            inputs.theta * inputs.theta * g / (1.0 + inputs.theta * g)
        }
    };
    Ok(factor)
}

/// Evaluates the guarantee against a supplied optimum value: the robust
/// value of the two-phase solver is at least the returned number.
pub fn approximation_bound(inputs: &BoundInputs, opt_value: f64) -> Result<f64, Error> {
    Ok(approximation_factor(inputs)? * opt_value)
}

/// The large-budget guarantee `θ·(1−e^{−γ})/(2−e^{−γ})`.
pub fn asymptotic_factor(gamma: f64, theta: f64) -> f64 {
    let g = 1.0 - libm::exp(-gamma);
    theta * g / (1.0 + g)
}

/// Tabulates [`asymptotic_factor`] over a `γ × θ` grid, as
/// `(γ, θ, factor)` rows in row-major order (γ outer).
pub fn guarantee_surface(gammas: &[f64], thetas: &[f64]) -> Vec<(f64, f64, f64)> {
    let mut rows = Vec::with_capacity(gammas.len() * thetas.len());
    for &g in gammas {
        for &t in thetas {
            rows.push((g, t, asymptotic_factor(g, t)));
        }
    }
    rows
}

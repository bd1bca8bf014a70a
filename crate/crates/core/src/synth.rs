//! Seeded generators for the synthetic benchmark families: autoregressive
//! design matrices, sparse ground-truth weights with their regression or
//! classification targets, and Gaussian-process function draws.
//!
//! Every generator is a pure function of its arguments and a seed; draws for
//! the design, the weights and the noise come from separately named RNG
//! streams (see [`crate::rng::streams`]), so regenerating one part never
//! shifts another.

use alloc::vec::Vec;

use crate::error::Error;
use crate::gp::KernelSpec;
use crate::linalg::{self, Matrix};
use crate::rng::{self, streams};

/// Which experiment family a [`SynthSpec`] feeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TaskKind {
    Linear,
    Logistic,
    Gp,
}

/// A complete description of one synthetic dataset.
#[derive(Clone, Debug)]
pub struct SynthSpec {
    pub n_train: usize,
    pub n_test: usize,
    pub d: usize,
    /// Innovation variance `α²` of the per-row autoregression
    /// `X_{t+1} = √(1−α²)·X_t + α·ε_t`.
    pub ar_alpha_sq: f64,
    /// Number of non-zero ground-truth weights.
    pub sparsity: usize,
    /// Target noise variance (linear), or observation noise (GP).
    pub noise_var: f64,
    pub task: TaskKind,
    pub seed: u64,
    /// Use `−x·ω` instead of `+x·ω` inside the logistic label rule.
    pub negate_logit: bool,
}

impl SynthSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.n_train == 0 || self.d == 0 {
            return Err(Error::InvalidParameter {
                what: "need at least one training row and one feature",
            });
        }
        if !(self.ar_alpha_sq > 0.0 && self.ar_alpha_sq <= 1.0) {
            return Err(Error::InvalidParameter {
                what: "ar_alpha_sq must lie in (0, 1]",
            });
        }
        if self.sparsity > self.d {
            return Err(Error::InvalidParameter {
                what: "sparsity cannot exceed the feature count",
            });
        }
        if !(self.noise_var >= 0.0) || !self.noise_var.is_finite() {
            return Err(Error::InvalidParameter {
                what: "noise variance must be finite and non-negative",
            });
        }
        Ok(())
    }

    /// Full-size linear-regression benchmark: 800×1000 training design,
    /// 2400 test rows, 100-sparse weights, `α² = 0.5`, noise variance 5.
    pub fn paper_linear(seed: u64) -> Self {
        Self {
            n_train: 800,
            n_test: 2400,
            d: 1000,
            ar_alpha_sq: 0.5,
            sparsity: 100,
            noise_var: 5.0,
            task: TaskKind::Linear,
            seed,
            negate_logit: false,
        }
    }

    /// Full-size logistic benchmark: 600 train / 1800 test rows over 200
    /// features, 100-sparse weights, `α² = 0.09`.
    pub fn paper_logistic(seed: u64) -> Self {
        Self {
            n_train: 600,
            n_test: 1800,
            d: 200,
            ar_alpha_sq: 0.09,
            sparsity: 100,
            noise_var: 0.0,
            task: TaskKind::Logistic,
            seed,
            negate_logit: false,
        }
    }

    /// Full-size GP benchmark: a 600×20 autoregressive design with unit
    /// Matérn-3/2 kernel and unit observation noise.
    pub fn paper_gp(seed: u64) -> Self {
        Self {
            n_train: 600,
            n_test: 0,
            d: 20,
            ar_alpha_sq: 0.01,
            sparsity: 0,
            noise_var: 1.0,
            task: TaskKind::Gp,
            seed,
            negate_logit: false,
        }
    }

    /// Desk-scale linear benchmark (minutes, not hours): 200×100 design,
    /// 50-sparse, 600 test rows.
    pub fn desk_linear(seed: u64) -> Self {
        Self {
            n_train: 200,
            n_test: 600,
            d: 100,
            ar_alpha_sq: 0.5,
            sparsity: 50,
            noise_var: 5.0,
            task: TaskKind::Linear,
            seed,
            negate_logit: false,
        }
    }

    /// Desk-scale logistic benchmark: 150×50 design, 25-sparse.
    pub fn desk_logistic(seed: u64) -> Self {
        Self {
            n_train: 150,
            n_test: 450,
            d: 50,
            ar_alpha_sq: 0.09,
            sparsity: 25,
            noise_var: 0.0,
            task: TaskKind::Logistic,
            seed,
            negate_logit: false,
        }
    }

    /// Desk-scale GP benchmark: 100×5 design.
    pub fn desk_gp(seed: u64) -> Self {
        Self {
            n_train: 100,
            n_test: 0,
            d: 5,
            ar_alpha_sq: 0.01,
            sparsity: 0,
            noise_var: 1.0,
            task: TaskKind::Gp,
            seed,
            negate_logit: false,
        }
    }
}

/// One generated dataset: disjoint train/test rows, targets, and the
/// ground-truth weights (empty for GP tasks).
#[derive(Clone, Debug)]
pub struct Dataset {
    pub x_train: Matrix,
    pub y_train: Vec<f64>,
    pub x_test: Matrix,
    pub y_test: Vec<f64>,
    pub weights: Vec<f64>,
}

/// A GP draw at the design points, before and after observation noise.
#[derive(Clone, Debug)]
pub struct GpSample {
    pub latent: Vec<f64>,
    pub observed: Vec<f64>,
}

/// Rows follow `X_{i,1} ~ N(0,1)`, `X_{i,t+1} = √(1−α²)·X_{i,t} + α·ε_{i,t}`
/// with standard normal innovations. Unit-variance initialization keeps the
/// process stationary: the per-entry variance is `(1−α²)·1 + α²·1 = 1` at
/// every `t`.
pub fn autoregressive_matrix(
    rows: usize,
    cols: usize,
    alpha_sq: f64,
    seed: u64,
) -> Result<Matrix, Error> {
    if !(alpha_sq > 0.0 && alpha_sq <= 1.0) {
        return Err(Error::InvalidParameter {
            what: "ar_alpha_sq must lie in (0, 1]",
        });
    }
    let mut rng = rng::stream_rng(seed, streams::DESIGN);
    let alpha = libm::sqrt(alpha_sq);
    let carry = libm::sqrt(1.0 - alpha_sq);
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        let row = m.row_mut(i);
        let mut x = rng::normal(&mut rng);
        row[0] = x;
        for slot in row.iter_mut().skip(1) {
            x = carry * x + alpha * rng::normal(&mut rng);
            *slot = x;
        }
    }
    Ok(m)
}

/// Sparse regression weights: `sparsity` random coordinates get
/// `(−1)^{Bern(1/2)}·(5·√(ln d / scale_rows) + δ)` with standard normal `δ`,
/// the rest stay zero.
pub fn linear_weights(
    d: usize,
    sparsity: usize,
    scale_rows: usize,
    seed: u64,
) -> Result<Vec<f64>, Error> {
    if sparsity > d || scale_rows == 0 {
        return Err(Error::InvalidParameter {
            what: "sparsity must not exceed d and scale_rows must be positive",
        });
    }
    let mut rng = rng::stream_rng(seed, streams::WEIGHTS);
    let amplitude = 5.0 * libm::sqrt(libm::log(d as f64) / scale_rows as f64);
    let mut omega = alloc::vec![0.0f64; d];
    for idx in rng::sample_distinct(&mut rng, sparsity, d) {
        let sign = if rng::bernoulli(&mut rng) { -1.0 } else { 1.0 };
        omega[idx] = sign * (amplitude + rng::normal(&mut rng));
    }
    Ok(omega)
}

/// Sparse classification weights: `(−1)^{Bern(1/2)}·δ` with
/// `δ ~ Unif([−1, 1])` on `sparsity` random coordinates.
pub fn logistic_weights(d: usize, sparsity: usize, seed: u64) -> Result<Vec<f64>, Error> {
    if sparsity > d {
        return Err(Error::InvalidParameter {
            what: "sparsity must not exceed d",
        });
    }
    let mut rng = rng::stream_rng(seed, streams::WEIGHTS);
    let mut omega = alloc::vec![0.0f64; d];
    for idx in rng::sample_distinct(&mut rng, sparsity, d) {
        let sign = if rng::bernoulli(&mut rng) { -1.0 } else { 1.0 };
        omega[idx] = sign * rng::uniform(&mut rng, -1.0, 1.0);
    }
    Ok(omega)
}

/// `y = X·ω + z` with `z ~ N(0, noise_var)`.
pub fn linear_targets(x: &Matrix, omega: &[f64], noise_var: f64, seed: u64) -> Vec<f64> {
    let mut rng = rng::stream_rng(seed, streams::NOISE);
    let sd = libm::sqrt(noise_var);
    x.matvec(omega)
        .into_iter()
        .map(|v| v + sd * rng::normal(&mut rng))
        .collect()
}

/// Deterministic labels: row `i` gets 1 iff `1/(1+exp(x_i·ω)) > 0.5`
/// (note the positive sign inside the exponential; `negate` flips it).
pub fn logistic_labels(x: &Matrix, omega: &[f64], negate: bool) -> Vec<f64> {
    x.matvec(omega)
        .into_iter()
        .map(|t| {
            let t = if negate { -t } else { t };
            if 1.0 / (1.0 + libm::exp(t)) > 0.5 {
                1.0
            } else {
                0.0
            }
        })
        .collect()
}

/// Weights-and-targets bundle for a given design.
pub fn sparse_linear_target(
    x: &Matrix,
    sparsity: usize,
    noise_var: f64,
    seed: u64,
) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let omega = linear_weights(x.cols(), sparsity, x.rows(), seed)?;
    let y = linear_targets(x, &omega, noise_var, seed);
    Ok((omega, y))
}

/// Weights-and-labels bundle for a given design.
pub fn sparse_logistic_target(
    x: &Matrix,
    sparsity: usize,
    negate: bool,
    seed: u64,
) -> Result<(Vec<f64>, Vec<f64>), Error> {
    let omega = logistic_weights(x.cols(), sparsity, seed)?;
    let labels = logistic_labels(x, &omega, negate);
    Ok((omega, labels))
}

/// Jitter added to the Gram diagonal before the sampling factorization.
const GP_JITTER: f64 = 1e-10;

/// Draws one function from `GP(0, k)` at the given points and corrupts it
/// with `N(0, noise_var)` observation noise.
pub fn gp_sample(
    points: &Matrix,
    kernel: &KernelSpec,
    noise_var: f64,
    seed: u64,
) -> Result<GpSample, Error> {
    use crate::gp::GpProblem;
    use crate::set::ItemSet;
    let n = points.rows();
    // validate kernel parameters through the problem constructor
    let probe = GpProblem::new(
        points.clone(),
        kernel.clone(),
        1.0,
        ItemSet::singleton(0),
        ItemSet::new(),
    )?;
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = probe.kernel_value(i, j);
        }
        gram[(i, i)] += GP_JITTER;
    }
    let l = linalg::cholesky(&gram, 1e-300)?;
    let mut latent_rng = rng::stream_rng(seed, streams::GP_LATENT);
    let z: Vec<f64> = (0..n).map(|_| rng::normal(&mut latent_rng)).collect();
    let latent = l.matvec(&z);
    let mut noise_rng = rng::stream_rng(seed, streams::NOISE);
    let sd = libm::sqrt(noise_var);
    let observed = latent
        .iter()
        .map(|&v| v + sd * rng::normal(&mut noise_rng))
        .collect();
    Ok(GpSample { latent, observed })
}

/// Generates a full dataset from a spec: one combined autoregressive design
/// split into disjoint train/test rows, with task-appropriate targets. The
/// linear weight amplitude is scaled by the training row count.
pub fn generate(spec: &SynthSpec) -> Result<Dataset, Error> {
    spec.validate()?;
    let total = spec.n_train + spec.n_test;
    let combined = autoregressive_matrix(total, spec.d, spec.ar_alpha_sq, spec.seed)?;
    let (weights, targets) = match spec.task {
        TaskKind::Linear => {
            let omega = linear_weights(spec.d, spec.sparsity, spec.n_train, spec.seed)?;
            let y = linear_targets(&combined, &omega, spec.noise_var, spec.seed);
            (omega, y)
        }
        TaskKind::Logistic => {
            let omega = logistic_weights(spec.d, spec.sparsity, spec.seed)?;
            let labels = logistic_labels(&combined, &omega, spec.negate_logit);
            (omega, labels)
        }
        TaskKind::Gp => {
            let kernel = KernelSpec::Matern32 {
                lengthscale: 1.0,
                output_variance: 1.0,
            };
            let sample = gp_sample(&combined, &kernel, spec.noise_var, spec.seed)?;
            (Vec::new(), sample.observed)
        }
    };
    let (x_train, x_test) = split_rows(&combined, spec.n_train);
    let y_train = targets[..spec.n_train].to_vec();
    let y_test = targets[spec.n_train..].to_vec();
    Ok(Dataset {
        x_train,
        y_train,
        x_test,
        y_test,
        weights,
    })
}

fn split_rows(m: &Matrix, at: usize) -> (Matrix, Matrix) {
    let cols = m.cols();
    let mut top = Matrix::zeros(at, cols);
    for i in 0..at {
        top.row_mut(i).copy_from_slice(m.row(i));
    }
    let mut bottom = Matrix::zeros(m.rows() - at, cols);
    for i in at..m.rows() {
        bottom.row_mut(i - at).copy_from_slice(m.row(i));
    }
    (top, bottom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ar_unit_alpha_is_iid_normal() {
        // α² = 1 degenerates the recursion to fresh draws; adjacent columns
        // should be uncorrelated.
        let m = autoregressive_matrix(4000, 2, 1.0, 7).unwrap();
        let mut dot = 0.0;
        let (mut v0, mut v1) = (0.0, 0.0);
        for i in 0..m.rows() {
            let r = m.row(i);
            dot += r[0] * r[1];
            v0 += r[0] * r[0];
            v1 += r[1] * r[1];
        }
        let corr = dot / libm::sqrt(v0 * v1);
        assert!(corr.abs() < 0.05, "corr {corr}");
    }

    #[test]
    fn ar_process_is_stationary_with_unit_variance() {
        let m = autoregressive_matrix(5000, 10, 0.3, 3).unwrap();
        for t in 0..10 {
            let mut var = 0.0;
            for i in 0..m.rows() {
                let v = m.row(i)[t];
                var += v * v;
            }
            var /= m.rows() as f64;
            assert!((var - 1.0).abs() < 0.06, "column {t} variance {var}");
        }
        // and columns are genuinely correlated for α² < 1
        let mut dot = 0.0;
        for i in 0..m.rows() {
            dot += m.row(i)[0] * m.row(i)[1];
        }
        assert!(dot / m.rows() as f64 > 0.5);
    }

    #[test]
    fn ar_is_seed_deterministic_and_validates() {
        let a = autoregressive_matrix(5, 4, 0.5, 9).unwrap();
        let b = autoregressive_matrix(5, 4, 0.5, 9).unwrap();
        assert_eq!(a, b);
        let c = autoregressive_matrix(5, 4, 0.5, 10).unwrap();
        assert_ne!(a, c);
        assert!(autoregressive_matrix(5, 4, 0.0, 1).is_err());
        assert!(autoregressive_matrix(5, 4, 1.5, 1).is_err());
    }

    #[test]
    fn linear_target_support_and_zero_sparsity() {
        let x = autoregressive_matrix(50, 20, 0.5, 1).unwrap();
        let (omega, _y) = sparse_linear_target(&x, 7, 5.0, 2).unwrap();
        assert_eq!(omega.iter().filter(|w| **w != 0.0).count(), 7);
        let (omega, y) = sparse_linear_target(&x, 0, 5.0, 2).unwrap();
        assert!(omega.iter().all(|&w| w == 0.0));
        // pure noise: should not be identically zero
        assert!(y.iter().any(|&v| v != 0.0));
        let (_, y2) = sparse_linear_target(&x, 0, 5.0, 2).unwrap();
        assert_eq!(y, y2);
    }

    #[test]
    fn zero_weights_give_all_zero_labels() {
        // sigmoid(0) = 0.5 is not strictly above 0.5
        let x = autoregressive_matrix(20, 5, 0.5, 4).unwrap();
        let labels = logistic_labels(&x, &[0.0; 5], false);
        assert!(labels.iter().all(|&l| l == 0.0));
    }

    #[test]
    fn logistic_labels_match_hand_evaluation() {
        // single feature, ω = 0.5: scores 1.0 and -1.5;
        // 1/(1+e^{1.0}) ≈ 0.269 -> 0, 1/(1+e^{-1.5}) ≈ 0.818 -> 1
        let x = Matrix::from_rows(vec![vec![2.0], vec![-3.0]]).unwrap();
        let labels = logistic_labels(&x, &[0.5], false);
        assert_eq!(labels, vec![0.0, 1.0]);
        let flipped = logistic_labels(&x, &[0.5], true);
        assert_eq!(flipped, vec![1.0, 0.0]);
    }

    #[test]
    fn gp_sample_is_deterministic_and_validates_kernel() {
        let pts = autoregressive_matrix(6, 2, 0.5, 5).unwrap();
        let kernel = KernelSpec::Matern32 {
            lengthscale: 1.0,
            output_variance: 1.0,
        };
        let a = gp_sample(&pts, &kernel, 1.0, 11).unwrap();
        let b = gp_sample(&pts, &kernel, 1.0, 11).unwrap();
        assert_eq!(a.latent, b.latent);
        assert_eq!(a.observed, b.observed);
        let bad = KernelSpec::Matern32 {
            lengthscale: 0.0,
            output_variance: 1.0,
        };
        assert!(gp_sample(&pts, &bad, 1.0, 11).is_err());
    }

    #[test]
    fn gp_sample_covariance_matches_gram() {
        // three fixed points; Monte-Carlo covariance of the latent draw
        // against the analytic kernel values, 5% relative
        let pts = Matrix::from_rows(vec![vec![0.0], vec![0.7], vec![2.0]]).unwrap();
        let kernel = KernelSpec::SquaredExponential {
            lengthscale: 1.0,
            output_variance: 1.0,
        };
        let runs = 5000;
        let mut acc = [[0.0f64; 3]; 3];
        for seed in 0..runs {
            let s = gp_sample(&pts, &kernel, 0.0, seed).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    acc[i][j] += s.latent[i] * s.latent[j];
                }
            }
        }
        let probe = crate::gp::GpProblem::new(
            pts,
            kernel,
            1.0,
            crate::set::ItemSet::singleton(0),
            crate::set::ItemSet::new(),
        )
        .unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let sample = acc[i][j] / runs as f64;
                let truth = probe.kernel_value(i, j);
                // Var(z_i z_j) = k_ii k_jj + k_ij² for a Gaussian draw; allow
                // 4 Monte-Carlo sigmas or 5% relative, whichever is looser.
                let mc_sigma = libm::sqrt(
                    (probe.kernel_value(i, i) * probe.kernel_value(j, j) + truth * truth)
                        / runs as f64,
                );
                let tol = (0.05 * truth.abs()).max(4.0 * mc_sigma);
                assert!(
                    (sample - truth).abs() <= tol,
                    "cov[{i}][{j}] = {sample} vs {truth}"
                );
            }
        }
    }

    #[test]
    fn generate_splits_rows_disjointly() {
        let spec = SynthSpec {
            n_train: 30,
            n_test: 10,
            d: 8,
            ar_alpha_sq: 0.5,
            sparsity: 3,
            noise_var: 1.0,
            task: TaskKind::Linear,
            seed: 6,
            negate_logit: false,
        };
        let data = generate(&spec).unwrap();
        assert_eq!(data.x_train.rows(), 30);
        assert_eq!(data.x_test.rows(), 10);
        assert_eq!(data.y_train.len(), 30);
        assert_eq!(data.y_test.len(), 10);
        assert_eq!(data.weights.len(), 8);
        // identical seed regenerates identically
        let again = generate(&spec).unwrap();
        assert_eq!(data.y_train, again.y_train);
        assert_eq!(data.x_test, again.x_test);
    }

    #[test]
    fn presets_carry_the_documented_sizes() {
        let p = SynthSpec::paper_linear(0);
        assert_eq!((p.n_train, p.n_test, p.d, p.sparsity), (800, 2400, 1000, 100));
        assert_eq!(p.ar_alpha_sq, 0.5);
        assert_eq!(p.noise_var, 5.0);
        let p = SynthSpec::paper_logistic(0);
        assert_eq!((p.n_train, p.n_test, p.d), (600, 1800, 200));
        assert_eq!(p.ar_alpha_sq, 0.09);
        let p = SynthSpec::paper_gp(0);
        assert_eq!((p.n_train, p.d), (600, 20));
        let d = SynthSpec::desk_linear(0);
        assert_eq!((d.n_train, d.d, d.sparsity), (200, 100, 50));
    }
}

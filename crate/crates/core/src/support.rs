//! Sparse support selection as a set function over feature columns.
//!
//! For a design matrix `X` (rows = samples) and a concave utility `l`, the
//! objective of a column set `S` is
//!
//! ```text
//!     f(S) = max_{supp(x) ⊆ S} l(x) − l(0),
//! ```
//!
//! i.e. the best utility achievable using only the features in `S`,
//! normalized so `f(∅) = 0`. Two utilities are supported:
//!
//! * least squares: `l(x) = −½‖y − Xx‖² − (λ/2)‖x‖²`, maximized in closed
//!   form by the normal equations on the columns of `S` (minimum-norm via
//!   SVD when `λ = 0` and the restricted Gram is rank-deficient);
//! * ridge-regularized logistic log-likelihood, maximized by damped Newton
//!   on the coordinates of `S`.
//!
//! When `l` is `L`-smooth and `m`-strongly concave, `m/L` lower-bounds the
//! submodularity and supermodularity ratios of `f`;
//! [`DesignProblem::regularity_constants`] computes those constants from the
//! spectrum of `XᵀX` so the bound machinery can consume them.

use alloc::vec::Vec;

use crate::error::Error;
use crate::linalg::{self, Matrix};
use crate::oracle::{GradientSetFunction, SetFunction};
use crate::set::{GroundSet, ItemSet};

/// Which concave utility backs the support objective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LossKind {
    LeastSquares,
    Logistic,
}

/// Inner-solver settings for the logistic path.
const NEWTON_MAX_ITERS: usize = 100;
const NEWTON_GRAD_TOL: f64 = 1e-8;
const NEWTON_MAX_BACKTRACKS: usize = 50;

/// Singular values at or below this fraction of the largest are treated as
/// zero when `λ = 0` and the restricted design is rank-deficient.
const SV_REL_TOL: f64 = 1e-10;

/// Strong-concavity and smoothness constants of the utility.
#[derive(Clone, Copy, Debug)]
pub struct RegularityConstants {
    pub strong_concavity: f64,
    pub smoothness: f64,
}

impl RegularityConstants {
    /// `m/L`, the lower bound this objective family guarantees for its
    /// submodularity and supermodularity ratios.
    pub fn ratio_lb(&self) -> f64 {
        self.strong_concavity / self.smoothness
    }
}

/// A feature-selection instance: dense design, targets, utility kind and
/// ridge weight. Immutable once built; evaluation is pure.
#[derive(Clone, Debug)]
pub struct DesignProblem {
    x: Matrix,
    /// Transposed design, so each feature column is contiguous.
    xt: Matrix,
    /// `XᵀX`, gathered per evaluation instead of re-assembled.
    gram: Matrix,
    xty: Vec<f64>,
    y: Vec<f64>,
    loss: LossKind,
    ridge: f64,
}

impl DesignProblem {
    pub fn new(x: Matrix, y: Vec<f64>, loss: LossKind, ridge: f64) -> Result<Self, Error> {
        if y.len() != x.rows() {
            return Err(Error::InvalidParameter {
                what: "target length must equal the number of design rows",
            });
        }
        if !(ridge >= 0.0) || !ridge.is_finite() {
            return Err(Error::InvalidParameter {
                what: "ridge weight must be finite and non-negative",
            });
        }
        if loss == LossKind::Logistic && y.iter().any(|&t| t != 0.0 && t != 1.0) {
            return Err(Error::InvalidParameter {
                what: "logistic targets must be 0 or 1",
            });
        }
        let xt = x.transpose();
        let gram = x.gram();
        let xty = xt.matvec(&y);
        Ok(Self {
            x,
            xt,
            gram,
            xty,
            y,
            loss,
            ridge,
        })
    }

    pub fn least_squares(x: Matrix, y: Vec<f64>, ridge: f64) -> Result<Self, Error> {
        Self::new(x, y, LossKind::LeastSquares, ridge)
    }

    pub fn logistic(x: Matrix, y: Vec<f64>, ridge: f64) -> Result<Self, Error> {
        Self::new(x, y, LossKind::Logistic, ridge)
    }

    pub fn design(&self) -> &Matrix {
        &self.x
    }

    pub fn targets(&self) -> &[f64] {
        &self.y
    }

    pub fn loss_kind(&self) -> LossKind {
        self.loss
    }

    pub fn ridge(&self) -> f64 {
        self.ridge
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.x.rows(), self.x.cols())
    }

    /// `f(S) = max_{supp(x) ⊆ S} l(x) − l(0)`.
    pub fn support_value(&self, s: &ItemSet) -> Result<f64, Error> {
        self.ground().check_set(s)?;
        if s.is_empty() {
            return Ok(0.0);
        }
        let fit = self.fit_restricted(s)?;
        Ok(fit.value)
    }

    /// `∇l` at the restricted maximizer, full feature length. First-order
    /// optimality makes the coordinates inside `S` vanish up to the inner
    /// solver's tolerance.
    pub fn support_gradient(&self, s: &ItemSet) -> Result<Vec<f64>, Error> {
        self.ground().check_set(s)?;
        let fit = self.fit_restricted(s)?;
        let resid = self.residual_weights(&fit);
        // Xᵀ resid − λ x
        let d = self.x.cols();
        let mut g = Vec::with_capacity(d);
        for j in 0..d {
            g.push(linalg::dot(self.xt.row(j), &resid));
        }
        for (pos, &j) in fit.members.iter().enumerate() {
            g[j] -= self.ridge * fit.coefs[pos];
        }
        Ok(g)
    }

    /// The restricted maximizer `x^(S)` as a full-length vector.
    pub fn restricted_maximizer(&self, s: &ItemSet) -> Result<Vec<f64>, Error> {
        self.ground().check_set(s)?;
        let fit = self.fit_restricted(s)?;
        let mut x = alloc::vec![0.0; self.x.cols()];
        for (pos, &j) in fit.members.iter().enumerate() {
            x[j] = fit.coefs[pos];
        }
        Ok(x)
    }

    /// `l(x) − l(0)` at an arbitrary point; the reference the gradient is
    /// finite-difference-checked against.
    pub fn utility_gain(&self, x: &[f64]) -> f64 {
        assert_eq!(x.len(), self.x.cols());
        let scores = self.x.matvec(x);
        let reg = 0.5 * self.ridge * linalg::dot(x, x);
        match self.loss {
            LossKind::LeastSquares => {
                let mut sq = 0.0;
                let mut ysq = 0.0;
                for (i, &t) in scores.iter().enumerate() {
                    let r = self.y[i] - t;
                    sq += r * r;
                    ysq += self.y[i] * self.y[i];
                }
                0.5 * (ysq - sq) - reg
            }
            LossKind::Logistic => {
                let mut ll = 0.0;
                for (i, &t) in scores.iter().enumerate() {
                    ll += self.y[i] * t - softplus(t);
                }
                // l(0) = -n ln 2
                ll + self.y.len() as f64 * core::f64::consts::LN_2 - reg
            }
        }
    }

    /// `(m, L)` of the utility: least squares has Hessian `−(XᵀX + λI)`
    /// exactly; logistic has `m = λ` and `L = λ + ¼·λ_max(XᵀX)`.
    pub fn regularity_constants(&self) -> Result<RegularityConstants, Error> {
        let (eigs, _) = linalg::sym_eigen(&self.gram);
        let eig_min = eigs[0];
        let eig_max = eigs[eigs.len() - 1];
        let (m, l) = match self.loss {
            LossKind::LeastSquares => (self.ridge + eig_min, self.ridge + eig_max),
            LossKind::Logistic => (self.ridge, self.ridge + 0.25 * eig_max),
        };
        if m <= 1e-10 * l.max(1.0) {
            return Err(Error::NotStronglyConcave { m });
        }
        Ok(RegularityConstants {
            strong_concavity: m,
            smoothness: l,
        })
    }

    /// Per-row weights `(y − Xx)` (least squares) or `(y − σ(Xx))`
    /// (logistic) at the fitted point.
    fn residual_weights(&self, fit: &RestrictedFit) -> Vec<f64> {
        let scores = self.scores(fit);
        match self.loss {
            LossKind::LeastSquares => self
                .y
                .iter()
                .zip(scores.iter())
                .map(|(&t, &s)| t - s)
                .collect(),
            LossKind::Logistic => self
                .y
                .iter()
                .zip(scores.iter())
                .map(|(&t, &s)| t - sigmoid(s))
                .collect(),
        }
    }

    /// `X x` for a fit, using only the fitted columns.
    fn scores(&self, fit: &RestrictedFit) -> Vec<f64> {
        let mut scores = alloc::vec![0.0; self.x.rows()];
        for (pos, &j) in fit.members.iter().enumerate() {
            let c = fit.coefs[pos];
            for (s, &v) in scores.iter_mut().zip(self.xt.row(j).iter()) {
                *s += c * v;
            }
        }
        scores
    }

    fn fit_restricted(&self, s: &ItemSet) -> Result<RestrictedFit, Error> {
        let members = s.sorted_members();
        match self.loss {
            LossKind::LeastSquares => self.fit_least_squares(members),
            LossKind::Logistic => self.fit_logistic(members),
        }
    }

    fn gathered_gram(&self, members: &[usize], diag_add: f64) -> Matrix {
        let p = members.len();
        let mut g = Matrix::zeros(p, p);
        for (a, &ja) in members.iter().enumerate() {
            let grow = self.gram.row(ja);
            for (b, &jb) in members.iter().enumerate() {
                g[(a, b)] = grow[jb];
            }
            g[(a, a)] += diag_add;
        }
        g
    }

    fn fit_least_squares(&self, members: Vec<usize>) -> Result<RestrictedFit, Error> {
        if members.is_empty() {
            return Ok(RestrictedFit {
                members,
                coefs: Vec::new(),
                value: 0.0,
            });
        }
        let g = self.gathered_gram(&members, self.ridge);
        let b: Vec<f64> = members.iter().map(|&j| self.xty[j]).collect();
        let coefs = if self.ridge > 0.0 {
            linalg::chol_solve(&linalg::cholesky(&g, 1e-13)?, &b)
        } else {
            match linalg::cholesky(&g, 1e-12) {
                Ok(l) => linalg::chol_solve(&l, &b),
                // rank-deficient unregularized design: minimum-norm solution
                Err(_) => {
                    let mut cols = Matrix::zeros(self.x.rows(), members.len());
                    for (pos, &j) in members.iter().enumerate() {
                        for (r, &v) in self.xt.row(j).iter().enumerate() {
                            cols[(r, pos)] = v;
                        }
                    }
                    linalg::svd(&cols).min_norm_solve(&self.y, SV_REL_TOL)
                }
            }
        };
        // l(x) - l(0) = bᵀx - ½ xᵀ(G + λI)x, exact at the computed point
        let gx = g.matvec(&coefs);
        let value = linalg::dot(&b, &coefs) - 0.5 * linalg::dot(&coefs, &gx);
        Ok(RestrictedFit {
            members,
            coefs,
            value: value.max(0.0),
        })
    }

    fn fit_logistic(&self, members: Vec<usize>) -> Result<RestrictedFit, Error> {
        let p = members.len();
        let n = self.x.rows();
        if p == 0 {
            return Ok(RestrictedFit {
                members,
                coefs: Vec::new(),
                value: 0.0,
            });
        }
        let cols: Vec<&[f64]> = members.iter().map(|&j| self.xt.row(j)).collect();
        let mut w = alloc::vec![0.0f64; p];
        let mut scores = alloc::vec![0.0f64; n];
        let ll = |scores: &[f64], w: &[f64]| -> f64 {
            let mut v = 0.0;
            for (i, &t) in scores.iter().enumerate() {
                v += self.y[i] * t - softplus(t);
            }
            v - 0.5 * self.ridge * linalg::dot(w, w)
        };
        let mut ll_cur = ll(&scores, &w);
        let mut grad_norm = f64::INFINITY;
        for _ in 0..NEWTON_MAX_ITERS {
            let probs: Vec<f64> = scores.iter().map(|&t| sigmoid(t)).collect();
            let mut grad = alloc::vec![0.0f64; p];
            for (a, col) in cols.iter().enumerate() {
                let mut g = 0.0;
                for i in 0..n {
                    g += col[i] * (self.y[i] - probs[i]);
                }
                grad[a] = g - self.ridge * w[a];
            }
            grad_norm = linalg::norm2(&grad);
            if grad_norm <= NEWTON_GRAD_TOL {
                break;
            }
            let mut h = Matrix::zeros(p, p);
            for i in 0..n {
                let wi = probs[i] * (1.0 - probs[i]);
                if wi == 0.0 {
                    continue;
                }
                for a in 0..p {
                    let ca = cols[a][i] * wi;
                    for b in a..p {
                        h[(a, b)] += ca * cols[b][i];
                    }
                }
            }
            for a in 0..p {
                h[(a, a)] += self.ridge;
                for b in 0..a {
                    h[(a, b)] = h[(b, a)];
                }
            }
            let dir = linalg::chol_solve(&linalg::cholesky(&h, 1e-13)?, &grad);
            // damped step: halve until the likelihood improves
            let mut step = 1.0;
            let mut accepted = false;
            for _ in 0..NEWTON_MAX_BACKTRACKS {
                let w_try: Vec<f64> = w
                    .iter()
                    .zip(dir.iter())
                    .map(|(&wi, &di)| wi + step * di)
                    .collect();
                let mut scores_try = alloc::vec![0.0f64; n];
                for (a, col) in cols.iter().enumerate() {
                    let c = w_try[a];
                    for (sc, &v) in scores_try.iter_mut().zip(col.iter()) {
                        *sc += c * v;
                    }
                }
                let ll_try = ll(&scores_try, &w_try);
                if ll_try > ll_cur {
                    w = w_try;
                    scores = scores_try;
                    ll_cur = ll_try;
                    accepted = true;
                    break;
                }
                step *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        if grad_norm > NEWTON_GRAD_TOL {
            return Err(Error::NonConvergence { grad_norm });
        }
        let value = ll_cur + n as f64 * core::f64::consts::LN_2;
        Ok(RestrictedFit {
            members,
            coefs: w,
            value: value.max(0.0),
        })
    }
}

struct RestrictedFit {
    members: Vec<usize>,
    coefs: Vec<f64>,
    value: f64,
}

impl SetFunction for DesignProblem {
    fn ground(&self) -> GroundSet {
        GroundSet::new(self.x.cols()).expect("design has at least one column")
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        self.support_value(s)
    }
}

impl GradientSetFunction for DesignProblem {
    fn gradient(&self, s: &ItemSet) -> Result<Vec<f64>, Error> {
        self.support_gradient(s)
    }
}

fn sigmoid(t: f64) -> f64 {
    if t >= 0.0 {
        1.0 / (1.0 + libm::exp(-t))
    } else {
        let e = libm::exp(t);
        e / (1.0 + e)
    }
}

/// `ln(1 + e^t)` without overflow.
fn softplus(t: f64) -> f64 {
    if t > 30.0 {
        t
    } else if t < -30.0 {
        libm::exp(t)
    } else {
        libm::log1p(libm::exp(t))
    }
}

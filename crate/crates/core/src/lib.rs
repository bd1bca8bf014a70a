//! Deletion-robust maximization of monotone set functions.
//!
//! This crate selects a set `S` of at most `k` items maximizing a monotone,
//! normalized set function `f: 2^V -> R+` when an adversary may afterwards
//! delete up to `tau` of the selected items. The quantity being protected is
//! the robust value
//!
//! ```text
//!     min_{E ⊆ S, |E| ≤ τ} f(S \ E),
//! ```
//!
//! i.e. what survives the worst deletion of `τ` items.
//!
//! The main solver is a two-phase selection: a first block of `⌈βτ⌉` items
//! picked purely by singleton value (each item valuable on its own, so the
//! block degrades gracefully under deletions), followed by plain greedy on
//! the remaining items. Baselines (greedy, oblivious, stochastic greedy,
//! random greedy, orthogonal matching pursuit) share the same oracle
//! contract.
//!
//! The function `f` is never assumed submodular. Instead its deviation from
//! sub/supermodularity is measured by seven scalar parameters (submodularity
//! and supermodularity ratios, generalized curvature and inverse curvature,
//! sub/superadditivity ratios, and the bipartite subadditivity ratio), which
//! [`ratios`] computes exactly on small ground sets by exhaustive
//! enumeration, and from which [`bounds`] evaluates closed-form
//! approximation guarantees. The [`adversary`] module provides an exact
//! brute-force deletion adversary plus four heuristics, so the guarantees can
//! be certified end to end on small instances.
//!
//! Two concrete objective families are included: sparse support selection
//! for least-squares and logistic likelihoods ([`support`]) and batch
//! variance reduction for Gaussian-process regression ([`gp`]), together
//! with seeded generators for synthetic benchmark data ([`synth`]).
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion CLI
//! crate.

#![no_std]
#![warn(missing_debug_implementations)]
// `!(x > 0.0)` rejects NaN where `x <= 0.0` would accept it.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Indexed loops are the clearest form for the dense numeric kernels here.
#![allow(clippy::needless_range_loop)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod adversary;
pub mod bounds;
mod error;
pub mod exhaustive;
pub mod gp;
pub mod linalg;
pub mod oracle;
pub mod ratios;
pub mod rng;
pub mod set;
pub mod solvers;
pub mod support;
pub mod synth;
pub mod toy;

pub use error::Error;
pub use oracle::{marginal_gain, EvalCounter, GradientSetFunction, SetFunction};
pub use set::{GroundSet, ItemIndex, ItemSet};
pub use solvers::{Solution, SolverParams};

/// Default floating tolerance for equality-of-reals assertions on
/// well-conditioned paths. Ill-conditioned linear-algebra paths override
/// per module.
pub const FLOAT_TOL: f64 = 1e-9;

//! Exhaustive computation of the seven scalar parameters that locate a
//! monotone set function between the submodular and supermodular extremes,
//! on ground sets small enough to enumerate.
//!
//! With `f({i}|S) = f(S ∪ {i}) − f(S)`, the parameters are the extremal
//! ratios over their quantifier domains:
//!
//! * submodularity ratio `γ`: largest scalar with
//!   `Σ_{i∈Ω} f({i}|S) ≥ γ·f(Ω|S)` for all disjoint `S, Ω ⊆ V`;
//! * supermodularity ratio `γ̌`: largest scalar with
//!   `f(Ω|S) ≥ γ̌·Σ_{i∈Ω} f({i}|S)` for all disjoint `S, Ω`;
//! * generalized curvature `α`: smallest scalar with
//!   `f({i}|S∖{i} ∪ Ω) ≥ (1−α)·f({i}|S∖{i})` for all `S, Ω ⊆ V`,
//!   `i ∈ S∖Ω`;
//! * inverse generalized curvature `α̌`: smallest scalar with
//!   `f({i}|S∖{i}) ≥ (1−α̌)·f({i}|S∖{i} ∪ Ω)` over the same domain;
//! * subadditivity ratio `ν`: largest scalar with
//!   `Σ_{i∈S} f({i}) ≥ ν·f(S)` for all `S`;
//! * superadditivity ratio `ν̌`: largest scalar with
//!   `f(S) ≥ ν̌·Σ_{i∈S} f({i})` for all `S`;
//! * bipartite subadditivity ratio `θ`: largest scalar with
//!   `f(A) + f(B) ≥ θ·f(S)` for every bipartition `A ∪ B = S`,
//!   `A ∩ B = ∅`.
//!
//! `f` is submodular iff `γ = 1` iff `α̌ = 0`, supermodular iff `γ̌ = 1`
//! iff `α = 0`, and modular iff both hold. For any `f` the chains
//! `ν ≥ γ ≥ 1−α̌`, `ν̌ ≥ γ̌ ≥ 1−α` and `θ ≥ ν̌·ν` hold; the test suite
//! asserts them on every estimate.
//!
//! Zero-denominator convention: a quantified constraint whose denominator is
//! zero (or negative, which only floating noise can produce here) is
//! vacuously satisfied and skipped. If every constraint of a parameter is
//! vacuous the parameter defaults to its extreme: 1 for the largest-scalar
//! definitions, 0 for the smallest-scalar ones. All results are clamped to
//! `[0, 1]`.

use crate::error::Error;
use crate::oracle::{SetFunction, TabulatedOracle};
use crate::set::{ItemIndex, ItemSet};

/// Largest ground set accepted by [`estimate_ratios`]; the curvature scans
/// grow as `n·3^(n-1)`.
pub const RATIO_ENUMERATION_LIMIT: usize = 12;

/// Extremal argument sets. `gamma`/`gamma_check` record `(S, Ω)`;
/// `alpha`/`alpha_check` record `(S, Ω, i)`; `nu`/`nu_check` record `S`;
/// `theta` records the bipartition `(A, B)`.
#[derive(Clone, Debug, Default)]
pub struct RatioWitnesses {
    pub gamma: Option<(ItemSet, ItemSet)>,
    pub gamma_check: Option<(ItemSet, ItemSet)>,
    pub alpha: Option<(ItemSet, ItemSet, ItemIndex)>,
    pub alpha_check: Option<(ItemSet, ItemSet, ItemIndex)>,
    pub nu: Option<ItemSet>,
    pub nu_check: Option<ItemSet>,
    pub theta: Option<(ItemSet, ItemSet)>,
}

/// The seven exhaustively computed parameters with their witnesses.
#[derive(Clone, Debug)]
pub struct RatioEstimates {
    pub gamma: f64,
    pub gamma_check: f64,
    pub alpha: f64,
    pub alpha_check: f64,
    pub nu: f64,
    pub nu_check: f64,
    pub theta: f64,
    pub witnesses: RatioWitnesses,
    /// Non-vacuous constraints examined across all seven scans.
    pub n_pairs_checked: u64,
}

struct Extremum {
    value: f64,
    witness_a: u64,
    witness_b: u64,
    item: usize,
    seen: bool,
}

impl Extremum {
    fn new() -> Self {
        Self {
            value: 0.0,
            witness_a: 0,
            witness_b: 0,
            item: 0,
            seen: false,
        }
    }

    fn update_min(&mut self, v: f64, a: u64, b: u64, item: usize) {
        if !self.seen || v < self.value {
            self.value = v;
            self.witness_a = a;
            self.witness_b = b;
            self.item = item;
            self.seen = true;
        }
    }

    /// Final value for a largest-scalar parameter (default 1, clamped).
    fn largest_scalar(&self) -> f64 {
        if self.seen {
            self.value.clamp(0.0, 1.0)
        } else {
            1.0
        }
    }

    /// Final value for a smallest-scalar parameter `1 - min_ratio`
    /// (default 0, clamped).
    fn smallest_scalar(&self) -> f64 {
        if self.seen {
            (1.0 - self.value).clamp(0.0, 1.0)
        } else {
            0.0
        }
    }

    fn pair_witness(&self) -> Option<(ItemSet, ItemSet)> {
        self.seen.then(|| {
            (
                ItemSet::from_mask(self.witness_a),
                ItemSet::from_mask(self.witness_b),
            )
        })
    }

    fn item_witness(&self) -> Option<(ItemSet, ItemSet, ItemIndex)> {
        self.seen.then(|| {
            (
                ItemSet::from_mask(self.witness_a),
                ItemSet::from_mask(self.witness_b),
                self.item,
            )
        })
    }

    fn set_witness(&self) -> Option<ItemSet> {
        self.seen.then(|| ItemSet::from_mask(self.witness_a))
    }
}

/// Exhaustively computes all seven parameters of `f`.
///
/// The oracle is tabulated once (`2^n` evaluations) and every quantifier
/// domain is then scanned over bitmasks. Requires `n ≤ 12` and a normalized
/// oracle.
pub fn estimate_ratios<F: SetFunction + ?Sized>(f: &F) -> Result<RatioEstimates, Error> {
    let n = f.ground().size();
    if n > RATIO_ENUMERATION_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "ratio enumeration",
            size: n as u128,
            limit: RATIO_ENUMERATION_LIMIT as u128,
        });
    }
    let table = TabulatedOracle::from_fn(f)?;
    let v = table.values();
    let full: u64 = (1 << n) - 1;
    let mut pairs: u64 = 0;

    // gamma / gamma_check: disjoint (S, Ω), Ω non-empty.
    let mut gamma = Extremum::new();
    let mut gamma_check = Extremum::new();
    for s in 0..=full {
        let vs = v[s as usize];
        let comp = full & !s;
        let mut om = comp;
        while om != 0 {
            let joint = v[(s | om) as usize] - vs;
            let mut singles = 0.0;
            let mut bits = om;
            while bits != 0 {
                let i = bits.trailing_zeros() as u64;
                singles += v[(s | (1 << i)) as usize] - vs;
                bits &= bits - 1;
            }
            if joint > 0.0 {
                pairs += 1;
                gamma.update_min(singles / joint, s, om, 0);
            }
            if singles > 0.0 {
                pairs += 1;
                gamma_check.update_min(joint / singles, s, om, 0);
            }
            om = (om - 1) & comp;
        }
    }

    // alpha / alpha_check: i ∈ S, Ω ∌ i. The constraint only depends on
    // S∖{i} and (S∖{i}) ∪ Ω, so scan pairs s' ⊆ u of subsets of V∖{i}.
    let mut alpha = Extremum::new();
    let mut alpha_check = Extremum::new();
    for i in 0..n as u64 {
        let bit = 1u64 << i;
        let rest = full & !bit;
        let mut sp = rest;
        loop {
            let gain_small = v[(sp | bit) as usize] - v[sp as usize];
            let extra = rest & !sp;
            let mut w = extra;
            loop {
                let u = sp | w;
                let gain_large = v[(u | bit) as usize] - v[u as usize];
                if gain_small > 0.0 {
                    pairs += 1;
                    alpha.update_min(gain_large / gain_small, sp | bit, w, i as usize);
                }
                if gain_large > 0.0 {
                    pairs += 1;
                    alpha_check.update_min(gain_small / gain_large, sp | bit, w, i as usize);
                }
                if w == 0 {
                    break;
                }
                w = (w - 1) & extra;
            }
            if sp == 0 {
                break;
            }
            sp = (sp - 1) & rest;
        }
    }

    // nu / nu_check: every non-empty S.
    let mut nu = Extremum::new();
    let mut nu_check = Extremum::new();
    for s in 1..=full {
        let fs = v[s as usize];
        let mut singles = 0.0;
        let mut bits = s;
        while bits != 0 {
            let i = bits.trailing_zeros() as u64;
            singles += v[(1u64 << i) as usize];
            bits &= bits - 1;
        }
        if fs > 0.0 {
            pairs += 1;
            nu.update_min(singles / fs, s, 0, 0);
        }
        if singles > 0.0 {
            pairs += 1;
            nu_check.update_min(fs / singles, s, 0, 0);
        }
    }

    // theta: every bipartition A ∪ B = S, A ∩ B = ∅.
    let mut theta = Extremum::new();
    for s in 1..=full {
        let fs = v[s as usize];
        if fs <= 0.0 {
            continue;
        }
        let mut a = s;
        loop {
            let b = s & !a;
            pairs += 1;
            theta.update_min((v[a as usize] + v[b as usize]) / fs, a, b, 0);
            if a == 0 {
                break;
            }
            a = (a - 1) & s;
        }
    }

    Ok(RatioEstimates {
        gamma: gamma.largest_scalar(),
        gamma_check: gamma_check.largest_scalar(),
        alpha: alpha.smallest_scalar(),
        alpha_check: alpha_check.smallest_scalar(),
        nu: nu.largest_scalar(),
        nu_check: nu_check.largest_scalar(),
        theta: theta.largest_scalar(),
        witnesses: RatioWitnesses {
            gamma: gamma.pair_witness(),
            gamma_check: gamma_check.pair_witness(),
            alpha: alpha.item_witness(),
            alpha_check: alpha_check.item_witness(),
            nu: nu.set_witness(),
            nu_check: nu_check.set_witness(),
            theta: theta.pair_witness(),
        },
        n_pairs_checked: pairs,
    })
}

impl RatioEstimates {
    /// `ν ≥ γ ≥ 1−α̌` and `ν̌ ≥ γ̌ ≥ 1−α`, within `tol`.
    pub fn chain_holds(&self, tol: f64) -> bool {
        self.nu >= self.gamma - tol
            && self.gamma >= 1.0 - self.alpha_check - tol
            && self.nu_check >= self.gamma_check - tol
            && self.gamma_check >= 1.0 - self.alpha - tol
    }

    /// `θ ≥ ν̌·ν`, within `tol`.
    pub fn bipartite_floor_holds(&self, tol: f64) -> bool {
        self.theta >= self.nu_check * self.nu - tol
    }
}

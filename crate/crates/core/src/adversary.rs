//! Deletion adversaries: given a selected set `S` and a budget `τ`, find
//! `E ⊆ S`, `|E| ≤ τ` making `f(S \ E)` as small as possible.
//!
//! `f(S \ E)` is submodular in `E` even when `f` is not, and minimizing it
//! under a cardinality constraint is hard, so besides the exact brute-force
//! minimizer (feasible only for small `|S|`) four heuristics are provided:
//! greedy removal, greedy construction of a high-value `E`, and randomized
//! variants of greedy removal. [`evaluate_robust`] runs an ensemble of them
//! and reports the worst (minimum) residual found.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exhaustive::{choose, for_each_combination};
use crate::oracle::SetFunction;
use crate::rng::{self, streams};
use crate::set::{ItemIndex, ItemSet};

/// Enumeration guards for the exact adversary.
pub const EXACT_SIZE_LIMIT: usize = 25;
pub const EXACT_COMBINATION_LIMIT: u128 = 2_000_000;

/// Result of one adversary run against a fixed set.
#[derive(Clone, Debug)]
pub struct AdversaryOutcome {
    pub name: String,
    /// The removal set, `removed ⊆ S`, `|removed| ≤ τ`.
    pub removed: ItemSet,
    /// `f(S \ removed)`, recomputed after the search rather than trusted
    /// from it.
    pub residual: f64,
}

/// Ensemble evaluation: all adversary outcomes, which ones were skipped and
/// why, and the worst residual found.
#[derive(Clone, Debug)]
pub struct AdversaryReport {
    pub outcomes: Vec<AdversaryOutcome>,
    pub skipped: Vec<(String, String)>,
    pub ensemble_min: f64,
    pub ensemble_witness: String,
}

/// Ensemble configuration. Defaults: both greedy heuristics, three seeded
/// runs of each randomized heuristic, and the exact adversary whenever the
/// enumeration guard allows it.
#[derive(Clone, Copy, Debug)]
pub struct EnsembleConfig {
    pub use_exact: bool,
    pub random_runs: u32,
    pub epsilon: f64,
    pub seed: u64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        Self {
            use_exact: true,
            random_runs: 3,
            epsilon: 0.01,
            seed: 0,
        }
    }
}

fn residual_of<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    removed: &ItemSet,
) -> Result<f64, Error> {
    f.eval(&s.difference(removed))
}

/// Sampled monotonicity probe on subsets of `s`: random nested pairs
/// `X ⊆ Y ⊆ S` must not see `f` decrease by more than the tolerance.
fn looks_monotone_on<F: SetFunction + ?Sized>(f: &F, s: &ItemSet) -> Result<bool, Error> {
    let members = s.sorted_members();
    let mut rng = rng::stream_rng(0x6d6f6e6f, streams::ADVERSARY);
    for _ in 0..32 {
        let mut x = ItemSet::new();
        let mut y = ItemSet::new();
        for &i in &members {
            match rng::gen_index(&mut rng, 3) {
                0 => {
                    x.insert(i);
                    y.insert(i);
                }
                1 => {
                    y.insert(i);
                }
                _ => {}
            }
        }
        if f.eval(&y)? - f.eval(&x)? < -1e-9 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact minimizer of `f(S \ E)` over all `E ⊆ S` with `|E| ≤ τ`.
///
/// For monotone `f` the optimum removes exactly `min(τ, |S|)` items, so
/// after a sampled monotonicity probe only that size is enumerated; if the
/// probe fails every size is enumerated. Ties go to the lexicographically
/// smallest removal set.
pub fn brute_force_min<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
) -> Result<(ItemSet, f64), Error> {
    let m = tau.min(s.len());
    if s.len() > EXACT_SIZE_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "exact adversary set size",
            size: s.len() as u128,
            limit: EXACT_SIZE_LIMIT as u128,
        });
    }
    let combos = choose(s.len(), m);
    if combos > EXACT_COMBINATION_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "exact adversary combinations",
            size: combos,
            limit: EXACT_COMBINATION_LIMIT,
        });
    }
    let members = s.sorted_members();
    let sizes: Vec<usize> = if looks_monotone_on(f, s)? {
        alloc::vec![m]
    } else {
        (0..=m).collect()
    };
    let mut best: Option<(Vec<ItemIndex>, f64)> = None;
    let mut err: Option<Error> = None;
    for size in sizes {
        for_each_combination(&members, size, |combo| {
            if err.is_some() {
                return;
            }
            let removed = ItemSet::from_slice(combo).expect("combinations are duplicate-free");
            match residual_of(f, s, &removed) {
                Ok(res) => {
                    let better = match &best {
                        None => true,
                        Some((bc, bres)) => {
                            res < *bres || (res == *bres && combo < bc.as_slice())
                        }
                    };
                    if better {
                        best = Some((combo.to_vec(), res));
                    }
                }
                Err(e) => err = Some(e),
            }
        });
    }
    if let Some(e) = err {
        return Err(e);
    }
    let (combo, res) = best.expect("at least one removal size is enumerated");
    Ok((ItemSet::from_slice(&combo).expect("duplicate-free"), res))
}

/// Greedy removal: `min(τ, |S|)` rounds, each deleting the element whose
/// removal lowers `f(S \ E)` the most.
pub fn greedy_min<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
) -> Result<(ItemSet, f64), Error> {
    let rounds = tau.min(s.len());
    let mut surviving = s.sorted_members();
    let mut removed = ItemSet::new();
    for _ in 0..rounds {
        let mut best: Option<(usize, f64)> = None;
        for pos in 0..surviving.len() {
            let mut trial: Vec<ItemIndex> = surviving.clone();
            trial.remove(pos);
            let v = f.eval(&ItemSet::from_slice(&trial).expect("distinct"))?;
            if best.is_none_or(|(_, bv)| v < bv) {
                best = Some((pos, v));
            }
        }
        let (pos, _) = best.expect("rounds <= |surviving|");
        removed.insert(surviving.remove(pos));
    }
    let res = residual_of(f, s, &removed)?;
    Ok((removed, res))
}

/// Greedy construction: grow `E` by maximizing `f(E)` for `min(τ, |S|)`
/// steps, then report `f(S \ E)`.
pub fn greedy_max<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
) -> Result<(ItemSet, f64), Error> {
    let rounds = tau.min(s.len());
    let members = s.sorted_members();
    let mut removed = ItemSet::new();
    for _ in 0..rounds {
        let mut best: Option<(ItemIndex, f64)> = None;
        for &e in &members {
            if removed.contains(e) {
                continue;
            }
            let v = f.eval(&removed.with(e))?;
            if best.is_none_or(|(_, bv)| v > bv) {
                best = Some((e, v));
            }
        }
        let (e, _) = best.expect("rounds <= |S|");
        removed.insert(e);
    }
    let res = residual_of(f, s, &removed)?;
    Ok((removed, res))
}

/// Randomized greedy removal: each round ranks removals by how low they
/// drive the residual and picks uniformly among the top `τ`.
pub fn random_greedy_min<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
    seed: u64,
) -> Result<(ItemSet, f64), Error> {
    let rounds = tau.min(s.len());
    let mut rng = rng::stream_rng(seed, streams::ADVERSARY);
    let mut surviving = s.sorted_members();
    let mut removed = ItemSet::new();
    for _ in 0..rounds {
        let mut ranked: Vec<(usize, f64)> = Vec::with_capacity(surviving.len());
        for (pos, _) in surviving.iter().enumerate() {
            let mut trial = surviving.clone();
            trial.remove(pos);
            let v = f.eval(&ItemSet::from_slice(&trial).expect("distinct"))?;
            ranked.push((pos, v));
        }
        // lowest residual first; ties to the lowest index
        ranked.sort_by(|a, b| {
            a.1.total_cmp(&b.1)
                .then(surviving[a.0].cmp(&surviving[b.0]))
        });
        let pool = tau.max(1).min(ranked.len());
        let (pos, _) = ranked[rng::gen_index(&mut rng, pool)];
        removed.insert(surviving.remove(pos));
    }
    let res = residual_of(f, s, &removed)?;
    Ok((removed, res))
}

/// Subsampled greedy removal: each round draws `⌈(|S|/τ)·ln(1/ε)⌉`
/// candidates from the surviving items and removes the best-decreasing one.
pub fn stochastic_greedy_min<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
    epsilon: f64,
    seed: u64,
) -> Result<(ItemSet, f64), Error> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidParameter {
            what: "epsilon must lie in (0, 1)",
        });
    }
    let rounds = tau.min(s.len());
    let mut rng = rng::stream_rng(seed, streams::ADVERSARY);
    let mut surviving = s.sorted_members();
    let mut removed = ItemSet::new();
    let nominal = if tau == 0 {
        0
    } else {
        libm::ceil(s.len() as f64 / tau as f64 * libm::log(1.0 / epsilon)) as usize
    };
    for _ in 0..rounds {
        let m = nominal.max(1).min(surviving.len());
        let mut sample_pos = rng::sample_distinct(&mut rng, m, surviving.len());
        sample_pos.sort_unstable();
        let mut best: Option<(usize, f64)> = None;
        for &pos in &sample_pos {
            let mut trial = surviving.clone();
            trial.remove(pos);
            let v = f.eval(&ItemSet::from_slice(&trial).expect("distinct"))?;
            if best.is_none_or(|(_, bv)| v < bv) {
                best = Some((pos, v));
            }
        }
        let (pos, _) = best.expect("sample is non-empty");
        removed.insert(surviving.remove(pos));
    }
    let res = residual_of(f, s, &removed)?;
    Ok((removed, res))
}

/// Runs the adversary ensemble against `s` and reports every outcome plus
/// the ensemble minimum. Adversaries that cannot run (the exact one on too
/// large an instance) are recorded as skipped with a reason.
pub fn evaluate_robust<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    tau: usize,
    config: &EnsembleConfig,
) -> Result<AdversaryReport, Error> {
    let mut outcomes: Vec<AdversaryOutcome> = Vec::new();
    let mut skipped: Vec<(String, String)> = Vec::new();
    let mut push = |name: String, removed: ItemSet, residual: f64| {
        outcomes.push(AdversaryOutcome {
            name,
            removed,
            residual,
        });
    };
    if config.use_exact {
        match brute_force_min(f, s, tau) {
            Ok((removed, _)) => {
                let res = residual_of(f, s, &removed)?;
                push(String::from("exact"), removed, res);
            }
            Err(Error::InstanceTooLarge { .. }) => {
                skipped.push((
                    String::from("exact"),
                    String::from("enumeration guard exceeded"),
                ));
            }
            Err(e) => return Err(e),
        }
    } else {
        skipped.push((String::from("exact"), String::from("disabled")));
    }
    {
        let (removed, _) = greedy_min(f, s, tau)?;
        let res = residual_of(f, s, &removed)?;
        push(String::from("greedy_min"), removed, res);
    }
    {
        let (removed, _) = greedy_max(f, s, tau)?;
        let res = residual_of(f, s, &removed)?;
        push(String::from("greedy_max"), removed, res);
    }
    for run in 0..config.random_runs {
        let seed = config.seed.wrapping_add(run as u64);
        let (removed, _) = random_greedy_min(f, s, tau, seed)?;
        let res = residual_of(f, s, &removed)?;
        push(format!("random_greedy_min[{run}]"), removed, res);
        let (removed, _) = stochastic_greedy_min(f, s, tau, config.epsilon, seed)?;
        let res = residual_of(f, s, &removed)?;
        push(format!("stochastic_greedy_min[{run}]"), removed, res);
    }
    let mut min = f64::INFINITY;
    let mut witness = String::new();
    for o in &outcomes {
        if o.residual < min {
            min = o.residual;
            witness = o.name.clone();
        }
    }
    Ok(AdversaryReport {
        outcomes,
        skipped,
        ensemble_min: min,
        ensemble_witness: witness,
    })
}

//! The set-function oracle contract and evaluation plumbing.
//!
//! Every solver, adversary and estimator in this crate talks to an objective
//! through [`SetFunction`]. Implementations must be normalized
//! (`f(∅) = 0`), deterministic (repeated evaluation of the same set returns
//! bit-identical values) and, on every instance this crate constructs,
//! monotone. Monotonicity is a caller obligation — it is property-tested by
//! sampling, not enforced per call.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::sync::atomic::{AtomicU64, Ordering};

use crate::error::Error;
use crate::set::{GroundSet, ItemIndex, ItemSet};

/// A deterministic map `ItemSet -> R+` over a fixed ground set.
pub trait SetFunction {
    fn ground(&self) -> GroundSet;

    /// Evaluates `f(s)`. `s` must index into [`SetFunction::ground`].
    fn eval(&self, s: &ItemSet) -> Result<f64, Error>;
}

impl<F: SetFunction + ?Sized> SetFunction for &F {
    fn ground(&self) -> GroundSet {
        (**self).ground()
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        (**self).eval(s)
    }
}

/// A set function backed by a differentiable inner problem: evaluating a set
/// means maximizing a smooth concave utility restricted to that support, and
/// the utility's gradient at the restricted maximizer is available. Needed by
/// matching-pursuit style solvers.
pub trait GradientSetFunction: SetFunction {
    /// Gradient of the inner utility at the restricted maximizer for
    /// support `s`; full ground-set length. Coordinates inside `s` are zero
    /// up to the inner solver's tolerance.
    fn gradient(&self, s: &ItemSet) -> Result<Vec<f64>, Error>;
}

impl<F: GradientSetFunction + ?Sized> GradientSetFunction for &F {
    fn gradient(&self, s: &ItemSet) -> Result<Vec<f64>, Error> {
        (**self).gradient(s)
    }
}

/// The marginal gain `f({item} | base) = f(base ∪ {item}) - f(base)`.
///
/// Returns 0 when `item ∈ base`.
pub fn marginal_gain<F: SetFunction + ?Sized>(
    f: &F,
    item: ItemIndex,
    base: &ItemSet,
) -> Result<f64, Error> {
    f.ground().check_item(item)?;
    if base.contains(item) {
        return Ok(0.0);
    }
    Ok(f.eval(&base.with(item))? - f.eval(base)?)
}

/// Counts oracle evaluations. Never decreases; safe to share across workers.
#[derive(Debug, Default)]
pub struct EvalCounter(AtomicU64);

impl EvalCounter {
    pub fn new() -> Self {
        Self(AtomicU64::new(0))
    }

    pub fn count(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    fn bump(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }
}

/// Evaluates `f(s)` and increments `counter` by exactly one.
pub fn eval_counted<F: SetFunction + ?Sized>(
    f: &F,
    s: &ItemSet,
    counter: &EvalCounter,
) -> Result<f64, Error> {
    counter.bump();
    f.eval(s)
}

/// An oracle wrapper that charges every evaluation to an [`EvalCounter`].
#[derive(Debug)]
pub struct Counted<'a, F: ?Sized> {
    f: &'a F,
    counter: &'a EvalCounter,
}

impl<'a, F: SetFunction + ?Sized> Counted<'a, F> {
    pub fn new(f: &'a F, counter: &'a EvalCounter) -> Self {
        Self { f, counter }
    }
}

impl<F: SetFunction + ?Sized> SetFunction for Counted<'_, F> {
    fn ground(&self) -> GroundSet {
        self.f.ground()
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        eval_counted(self.f, s, self.counter)
    }
}

/// Opt-in memoizer keyed by the canonical sorted member list.
///
/// Worth wrapping around expensive oracles that get asked about the same set
/// repeatedly (exhaustive ratio estimation does; solvers mostly do not).
/// Not `Sync` — confine each instance to one worker.
#[derive(Debug)]
pub struct Memoized<F> {
    inner: F,
    cache: RefCell<BTreeMap<Vec<ItemIndex>, f64>>,
}

impl<F: SetFunction> Memoized<F> {
    pub fn new(inner: F) -> Self {
        Self {
            inner,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn into_inner(self) -> F {
        self.inner
    }
}

impl<F: SetFunction> SetFunction for Memoized<F> {
    fn ground(&self) -> GroundSet {
        self.inner.ground()
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        let key = s.sorted_members();
        if let Some(&v) = self.cache.borrow().get(&key) {
            return Ok(v);
        }
        let v = self.inner.eval(s)?;
        self.cache.borrow_mut().insert(key, v);
        Ok(v)
    }
}

/// Limit on `n` for dense `2^n` tabulation (8 MiB of values).
pub const TABULATION_LIMIT: usize = 20;

/// A set function stored as a dense table over all `2^n` subsets.
#[derive(Clone, Debug)]
pub struct TabulatedOracle {
    ground: GroundSet,
    values: Vec<f64>,
}

impl TabulatedOracle {
    /// Tabulates `f` over every subset of its ground set.
    pub fn from_fn<F: SetFunction + ?Sized>(f: &F) -> Result<Self, Error> {
        let n = f.ground().size();
        if n > TABULATION_LIMIT {
            return Err(Error::InstanceTooLarge {
                what: "subset tabulation",
                size: n as u128,
                limit: TABULATION_LIMIT as u128,
            });
        }
        let mut values = Vec::with_capacity(1 << n);
        for mask in 0..(1u64 << n) {
            values.push(f.eval(&ItemSet::from_mask(mask))?);
        }
        Self::from_values(n, values)
    }

    /// Wraps a precomputed table; `values[mask]` is `f` of the bit set of
    /// `mask`. Rejects tables that are not normalized.
    pub fn from_values(n: usize, values: Vec<f64>) -> Result<Self, Error> {
        let ground = GroundSet::new(n)?;
        if values.len() != 1 << n {
            return Err(Error::InvalidParameter {
                what: "tabulated oracle needs exactly 2^n values",
            });
        }
        if values[0].abs() > 1e-12 {
            return Err(Error::NotNormalized { value: values[0] });
        }
        Ok(Self { ground, values })
    }

    pub fn value_of_mask(&self, mask: u64) -> f64 {
        self.values[mask as usize]
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl SetFunction for TabulatedOracle {
    fn ground(&self) -> GroundSet {
        self.ground
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        self.ground.check_set(s)?;
        Ok(self.values[s.mask() as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::ModularOracle;

    #[test]
    fn marginal_gain_modular() {
        // modular f(S) = sum of w over S with w = [3, 2, 1]
        let f = ModularOracle::new(alloc::vec![3.0, 2.0, 1.0]).unwrap();
        let empty = ItemSet::new();
        assert_eq!(marginal_gain(&f, 0, &empty).unwrap(), 3.0);
        let s = ItemSet::from_slice(&[0, 2]).unwrap();
        assert_eq!(marginal_gain(&f, 0, &s).unwrap(), 0.0); // item already in base
        assert_eq!(marginal_gain(&f, 1, &s).unwrap(), 2.0);
        assert!(matches!(
            marginal_gain(&f, 3, &empty),
            Err(Error::InvalidIndex { index: 3, .. })
        ));
    }

    #[test]
    fn marginal_gain_coverage_by_hand() {
        // covers: A0 = {a, b}, A1 = {b, c}; adding item 1 on top of {0} only
        // contributes the one element c that {0} had not covered.
        let f = crate::toy::CoverageOracle::new(alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2]], 3)
            .unwrap();
        let base = ItemSet::singleton(0);
        assert_eq!(marginal_gain(&f, 1, &base).unwrap(), 1.0);
    }

    #[test]
    fn eval_counted_increments_once_per_call() {
        let f = ModularOracle::new(alloc::vec![1.0, 2.0]).unwrap();
        let c = EvalCounter::new();
        assert_eq!(c.count(), 0);
        let e = ItemSet::new();
        assert_eq!(eval_counted(&f, &e, &c).unwrap(), 0.0);
        assert_eq!(c.count(), 1);
        let s = ItemSet::singleton(1);
        let a = eval_counted(&f, &s, &c).unwrap();
        let b = eval_counted(&f, &s, &c).unwrap();
        assert_eq!(a.to_bits(), b.to_bits()); // deterministic
        assert_eq!(c.count(), 3);
    }

    #[test]
    fn memoized_agrees_with_inner() {
        let f = ModularOracle::new(alloc::vec![0.5, 1.5, 2.5]).unwrap();
        let m = Memoized::new(&f);
        let s = ItemSet::from_slice(&[2, 0]).unwrap();
        let reordered = ItemSet::from_slice(&[0, 2]).unwrap();
        assert_eq!(m.eval(&s).unwrap(), 3.0);
        assert_eq!(m.eval(&reordered).unwrap(), 3.0);
    }

    #[test]
    fn tabulated_rejects_non_normalized() {
        let err = TabulatedOracle::from_values(1, alloc::vec![0.5, 1.0]);
        assert!(matches!(err, Err(Error::NotNormalized { .. })));
    }
}

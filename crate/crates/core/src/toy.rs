//! Small concrete oracles: modular weights, set coverage, and seeded random
//! monotone tables. These are the fixtures used by tests, the certification
//! sweep, and the CLI's `toy` objective.

use alloc::vec::Vec;

use crate::error::Error;
use crate::oracle::{SetFunction, TabulatedOracle};
use crate::rng::{self, streams};
use crate::set::{GroundSet, ItemSet};

/// `f(S) = Σ_{i∈S} w_i` with non-negative weights. Modular, hence both
/// submodular and supermodular; every ratio parameter is extremal on it.
#[derive(Clone, Debug)]
pub struct ModularOracle {
    weights: Vec<f64>,
}

impl ModularOracle {
    pub fn new(weights: Vec<f64>) -> Result<Self, Error> {
        if weights.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::InvalidParameter {
                what: "modular weights must be finite and non-negative",
            });
        }
        Ok(Self { weights })
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

impl SetFunction for ModularOracle {
    fn ground(&self) -> GroundSet {
        GroundSet::new(self.weights.len()).expect("validated at construction")
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        self.ground().check_set(s)?;
        Ok(s.iter().map(|i| self.weights[i]).sum())
    }
}

/// `f(S) = |∪_{i∈S} A_i|`: the number of universe elements covered by the
/// chosen subsets. Monotone submodular.
#[derive(Clone, Debug)]
pub struct CoverageOracle {
    covers: Vec<Vec<usize>>,
    universe: usize,
}

impl CoverageOracle {
    pub fn new(covers: Vec<Vec<usize>>, universe: usize) -> Result<Self, Error> {
        if covers.is_empty() {
            return Err(Error::EmptyGroundSet);
        }
        for a in &covers {
            if a.iter().any(|&e| e >= universe) {
                return Err(Error::InvalidParameter {
                    what: "coverage element id outside universe",
                });
            }
        }
        Ok(Self { covers, universe })
    }
}

impl SetFunction for CoverageOracle {
    fn ground(&self) -> GroundSet {
        GroundSet::new(self.covers.len()).expect("validated at construction")
    }

    fn eval(&self, s: &ItemSet) -> Result<f64, Error> {
        self.ground().check_set(s)?;
        let mut hit = alloc::vec![false; self.universe];
        let mut count = 0usize;
        for i in s.iter() {
            for &e in &self.covers[i] {
                if !hit[e] {
                    hit[e] = true;
                    count += 1;
                }
            }
        }
        Ok(count as f64)
    }
}

/// A seeded random monotone normalized table on `n ≤ 20` items.
///
/// Built bottom-up: `f(S) = max_{i∈S} f(S∖{i}) + U[0,1)`, so the function is
/// monotone and normalized by construction but in general neither submodular
/// nor supermodular — which is exactly what the ratio and bound machinery
/// needs exercising on.
pub fn random_monotone(n: usize, seed: u64) -> Result<TabulatedOracle, Error> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > crate::oracle::TABULATION_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "random monotone table",
            size: n as u128,
            limit: crate::oracle::TABULATION_LIMIT as u128,
        });
    }
    let mut rng = rng::stream_rng(seed, streams::TABLE);
    let mut values = alloc::vec![0.0f64; 1 << n];
    for mask in 1..(1u64 << n) {
        let mut floor = 0.0f64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros();
            floor = floor.max(values[(mask & !(1 << i)) as usize]);
            bits &= bits - 1;
        }
        values[mask as usize] = floor + rng::unit_open(&mut rng);
    }
    TabulatedOracle::from_values(n, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_sums_weights() {
        let f = ModularOracle::new(alloc::vec![3.0, 2.0, 1.0]).unwrap();
        assert_eq!(f.eval(&ItemSet::new()).unwrap(), 0.0);
        let s = ItemSet::from_slice(&[0, 2]).unwrap();
        assert_eq!(f.eval(&s).unwrap(), 4.0);
    }

    #[test]
    fn coverage_counts_distinct_elements() {
        // A0 = {a, b}, A1 = {b, c}, A2 = {c}
        let f = CoverageOracle::new(
            alloc::vec![alloc::vec![0, 1], alloc::vec![1, 2], alloc::vec![2]],
            3,
        )
        .unwrap();
        assert_eq!(f.eval(&ItemSet::from_slice(&[0, 1]).unwrap()).unwrap(), 3.0);
        assert_eq!(f.eval(&ItemSet::from_slice(&[1, 2]).unwrap()).unwrap(), 2.0);
    }

    #[test]
    fn random_monotone_is_monotone_and_normalized() {
        let f = random_monotone(6, 42).unwrap();
        assert_eq!(f.value_of_mask(0), 0.0);
        for mask in 0..(1u64 << 6) {
            for i in 0..6 {
                if mask & (1 << i) != 0 {
                    assert!(f.value_of_mask(mask) >= f.value_of_mask(mask & !(1 << i)));
                }
            }
        }
    }

    #[test]
    fn random_monotone_is_seed_deterministic() {
        let a = random_monotone(5, 9).unwrap();
        let b = random_monotone(5, 9).unwrap();
        let c = random_monotone(5, 10).unwrap();
        assert_eq!(a.values(), b.values());
        assert_ne!(a.values(), c.values());
    }
}

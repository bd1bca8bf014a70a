//! Property tests for the oracle contract and the scalar inequalities the
//! solver guarantees lean on.

use proptest::prelude::*;
use robmax_core::oracle::{marginal_gain, SetFunction};
use robmax_core::ratios::estimate_ratios;
use robmax_core::rng;
use robmax_core::set::ItemSet;
use robmax_core::toy::{random_monotone, CoverageOracle, ModularOracle};

proptest! {
    /// Marginal gains telescope: summing them along any insertion order of
    /// S recovers f(S).
    #[test]
    fn marginal_gains_telescope(seed in 0u64..500, perm_seed in 0u64..100) {
        let f = random_monotone(7, seed).unwrap();
        let mut r = rng::stream_rng(perm_seed, 0);
        let order = rng::sample_distinct(&mut r, 5, 7);
        let mut base = ItemSet::new();
        let mut total = 0.0;
        for &i in &order {
            total += marginal_gain(&f, i, &base).unwrap();
            base.insert(i);
        }
        let direct = f.eval(&base).unwrap();
        prop_assert!((total - direct).abs() <= 1e-9, "{total} vs {direct}");
    }

    /// max(a·x, b·y − x) ≥ (a/(1+a))·b·y for a > 0 and non-negative x, y, b:
    /// the pivot inequality behind every bound form.
    #[test]
    fn pivot_inequality_holds(
        a in 1e-6f64..50.0,
        b in 0.0f64..20.0,
        x in 0.0f64..100.0,
        y in 0.0f64..100.0,
    ) {
        let lhs = (a * x).max(b * y - x);
        let rhs = a / (1.0 + a) * b * y;
        prop_assert!(lhs >= rhs - 1e-9 * rhs.abs().max(1.0));
    }

    /// The two ratio chains and the bipartite floor hold on every estimate.
    #[test]
    fn ratio_chains_hold(seed in 0u64..150) {
        let f = random_monotone(6, seed).unwrap();
        let r = estimate_ratios(&f).unwrap();
        prop_assert!(r.chain_holds(1e-9));
        prop_assert!(r.bipartite_floor_holds(1e-9));
    }
}

/// 1000 sampled nested pairs per shipped oracle: f never decreases when the
/// set grows.
#[test]
fn shipped_oracles_are_monotone_sampled() {
    let modular = ModularOracle::new((0..9).map(|i| 0.3 + i as f64).collect()).unwrap();
    let coverage = CoverageOracle::new(
        vec![
            vec![0, 1, 2],
            vec![2, 3],
            vec![4],
            vec![1, 4, 5],
            vec![5, 6, 7],
            vec![0, 7],
            vec![3, 6],
            vec![2, 5],
            vec![8],
        ],
        9,
    )
    .unwrap();
    let random = random_monotone(9, 77).unwrap();
    let oracles: [&dyn SetFunction; 3] = [&modular, &coverage, &random];
    let mut r = rng::stream_rng(5, 0);
    for f in oracles {
        let n = f.ground().size();
        for _ in 0..1000 {
            let mut small = ItemSet::new();
            let mut large = ItemSet::new();
            for i in 0..n {
                match rng::gen_index(&mut r, 3) {
                    0 => {
                        small.insert(i);
                        large.insert(i);
                    }
                    1 => {
                        large.insert(i);
                    }
                    _ => {}
                }
            }
            let lo = f.eval(&small).unwrap();
            let hi = f.eval(&large).unwrap();
            assert!(hi - lo >= -1e-9, "monotonicity violated: {lo} > {hi}");
        }
        assert_eq!(f.eval(&ItemSet::new()).unwrap(), 0.0);
    }
}

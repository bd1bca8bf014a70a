//! Exhaustive subset utilities: lexicographic combination enumeration,
//! binomial counting, and brute-force optima on small instances. Shared by
//! the exact adversary, the bound-certification pipeline and tests.

use alloc::vec::Vec;

use crate::error::Error;
use crate::oracle::SetFunction;
use crate::set::{ItemIndex, ItemSet};

/// `C(n, k)` with saturation, as u128.
pub fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    c
}

/// Visits every `size`-combination of `items` in lexicographic order
/// (positions within `items`, which callers keep sorted when lexicographic
/// order over indices matters).
pub fn for_each_combination<F: FnMut(&[ItemIndex])>(
    items: &[ItemIndex],
    size: usize,
    mut visit: F,
) {
    let n = items.len();
    if size > n {
        return;
    }
    if size == 0 {
        visit(&[]);
        return;
    }
    let mut pos: Vec<usize> = (0..size).collect();
    let mut scratch: Vec<ItemIndex> = pos.iter().map(|&p| items[p]).collect();
    loop {
        visit(&scratch);
        // advance the rightmost position that can still move
        let mut i = size - 1;
        loop {
            if pos[i] != i + n - size {
                break;
            }
            if i == 0 {
                return;
            }
            i -= 1;
        }
        pos[i] += 1;
        for j in i + 1..size {
            pos[j] = pos[j - 1] + 1;
        }
        for (slot, &p) in scratch.iter_mut().zip(pos.iter()).skip(i) {
            *slot = items[p];
        }
    }
}

/// Brute-force maximizer of `f` over all subsets of `candidates` of exactly
/// `min(size, |candidates|)` items. Ties go to the lexicographically
/// smallest subset. Intended for small certification instances only.
pub fn max_value_subset<F: SetFunction + ?Sized>(
    f: &F,
    candidates: &[ItemIndex],
    size: usize,
) -> Result<(ItemSet, f64), Error> {
    let mut sorted: Vec<ItemIndex> = candidates.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let size = size.min(sorted.len());
    let mut best: Option<(Vec<ItemIndex>, f64)> = None;
    let mut err = None;
    for_each_combination(&sorted, size, |combo| {
        if err.is_some() {
            return;
        }
        match f.eval(&ItemSet::from_slice(combo).expect("combinations are duplicate-free")) {
            Ok(v) => {
                let better = match &best {
                    None => true,
                    Some((_, bv)) => v > *bv,
                };
                if better {
                    best = Some((combo.to_vec(), v));
                }
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let (members, value) = best.expect("at least the empty combination is visited");
    Ok((ItemSet::from_slice(&members).expect("duplicate-free"), value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toy::ModularOracle;

    #[test]
    fn choose_small_values() {
        assert_eq!(choose(5, 2), 10);
        assert_eq!(choose(8, 0), 1);
        assert_eq!(choose(4, 5), 0);
        assert_eq!(choose(25, 12), 5_200_300);
    }

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let mut seen = Vec::new();
        for_each_combination(&[1, 3, 5, 7], 2, |c| seen.push(c.to_vec()));
        assert_eq!(
            seen,
            alloc::vec![
                alloc::vec![1, 3],
                alloc::vec![1, 5],
                alloc::vec![1, 7],
                alloc::vec![3, 5],
                alloc::vec![3, 7],
                alloc::vec![5, 7],
            ]
        );
    }

    #[test]
    fn zero_size_visits_empty_once() {
        let mut count = 0;
        for_each_combination(&[0, 1, 2], 0, |c| {
            assert!(c.is_empty());
            count += 1;
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn brute_force_opt_picks_top_weights() {
        let f = ModularOracle::new(alloc::vec![1.0, 5.0, 3.0, 2.0]).unwrap();
        let (s, v) = max_value_subset(&f, &[0, 1, 2, 3], 2).unwrap();
        assert!(s.same_items(&ItemSet::from_slice(&[1, 2]).unwrap()));
        assert_eq!(v, 8.0);
    }
}

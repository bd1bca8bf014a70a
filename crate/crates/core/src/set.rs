//! Ground sets and insertion-ordered item sets.
//!
//! Items are dense integer indices `0..n`; callers translate external names
//! before entering this crate. The dense representation is what makes the
//! bitmask subset enumeration in [`crate::ratios`] and
//! [`crate::exhaustive`] cheap.

use alloc::vec::Vec;

use crate::error::Error;

/// Index of an item within a [`GroundSet`].
pub type ItemIndex = usize;

/// A fixed universe of `n ≥ 1` items identified by the indices `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        Ok(Self { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn contains(&self, item: ItemIndex) -> bool {
        item < self.n
    }

    pub fn indices(&self) -> impl Iterator<Item = ItemIndex> {
        0..self.n
    }

    pub fn check_item(&self, item: ItemIndex) -> Result<(), Error> {
        if item < self.n {
            Ok(())
        } else {
            Err(Error::InvalidIndex {
                index: item,
                ground: self.n,
            })
        }
    }

    pub fn check_set(&self, s: &ItemSet) -> Result<(), Error> {
        for i in s.iter() {
            self.check_item(i)?;
        }
        Ok(())
    }
}

/// A set of distinct item indices that remembers insertion order.
///
/// Equality (`==`) is order-sensitive; use [`ItemSet::same_items`] for plain
/// set equality. Membership tests are linear scans, which is the right trade
/// at the sizes this crate works with (selected sets of tens of items).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ItemSet {
    members: Vec<ItemIndex>,
}

impl ItemSet {
    pub fn new() -> Self {
        Self {
            members: Vec::new(),
        }
    }

    /// Builds a set from the given items, rejecting duplicates.
    pub fn from_slice(items: &[ItemIndex]) -> Result<Self, Error> {
        let mut s = Self::new();
        for &i in items {
            if !s.insert(i) {
                return Err(Error::DuplicateItem { index: i });
            }
        }
        Ok(s)
    }

    pub fn singleton(item: ItemIndex) -> Self {
        Self {
            members: alloc::vec![item],
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, item: ItemIndex) -> bool {
        self.members.contains(&item)
    }

    pub fn iter(&self) -> impl Iterator<Item = ItemIndex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[ItemIndex] {
        &self.members
    }

    /// Adds an item; returns `false` when it was already present.
    pub fn insert(&mut self, item: ItemIndex) -> bool {
        if self.contains(item) {
            false
        } else {
            self.members.push(item);
            true
        }
    }

    /// The set with `item` appended (no-op clone when already present).
    pub fn with(&self, item: ItemIndex) -> Self {
        let mut out = self.clone();
        out.insert(item);
        out
    }

    /// The set with `item` removed, preserving the order of the rest.
    pub fn without(&self, item: ItemIndex) -> Self {
        Self {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&i| i != item)
                .collect(),
        }
    }

    /// Union preserving `self`'s order, then `other`'s new items.
    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for i in other.iter() {
            out.insert(i);
        }
        out
    }

    /// Items of `self` that are not in `other`, in `self`'s order.
    pub fn difference(&self, other: &Self) -> Self {
        Self {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&i| !other.contains(i))
                .collect(),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.members.iter().any(|&i| other.contains(i))
    }

    /// Set equality irrespective of insertion order.
    pub fn same_items(&self, other: &Self) -> bool {
        self.len() == other.len() && self.members.iter().all(|&i| other.contains(i))
    }

    /// Members sorted ascending; the canonical key used for memoization.
    pub fn sorted_members(&self) -> Vec<ItemIndex> {
        let mut out = self.members.clone();
        out.sort_unstable();
        out
    }

    /// Bitmask over items; only valid for indices below 64.
    pub fn mask(&self) -> u64 {
        let mut m = 0u64;
        for &i in &self.members {
            debug_assert!(i < 64);
            m |= 1u64 << i;
        }
        m
    }

    /// Set of the bits of `mask`, in ascending index order.
    pub fn from_mask(mut mask: u64) -> Self {
        let mut members = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let i = mask.trailing_zeros() as usize;
            members.push(i);
            mask &= mask - 1;
        }
        Self { members }
    }
}

impl FromIterator<ItemIndex> for ItemSet {
    fn from_iter<T: IntoIterator<Item = ItemIndex>>(iter: T) -> Self {
        let mut s = Self::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

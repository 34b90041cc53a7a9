//! Subsets of a finite carrier of at most 64 elements, stored as a bitmask.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest carrier an [`ElemSet`] can index.
pub const MAX_CARRIER: usize = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn from_bits(bits: u64) -> Self {
        ElemSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_CARRIER);
        ElemSet(1u64 << i)
    }

    /// All of `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_CARRIER && self.0 & (1u64 << i) != 0
    }

    pub fn union(self, other: Self) -> Self {
        ElemSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElemSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image of the set under an index map.
    pub fn map(self, f: impl Fn(usize) -> usize) -> Self {
        self.iter().map(f).collect()
    }

    /// Nonempty subsets of `{0, .., n-1}` in increasing bitmask order.
    pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
        assert!(n < 64, "power set of a 64-element carrier is not enumerable");
        (1u64..(1u64 << n)).map(ElemSet)
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElemSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for ElemSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = v.iter().find(|&&i| i >= MAX_CARRIER) {
            return Err(serde::de::Error::custom(format!("index {bad} out of range")));
        }
        Ok(v.into_iter().collect())
    }
}

/// Render a set with carrier names, e.g. `{0, 1}`.
pub fn show(set: ElemSet, names: &[String]) -> String {
    let inner: Vec<&str> = set.iter().map(|i| names[i].as_str()).collect();
    format!("{{{}}}", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_sorted() {
        let s: ElemSet = [5, 1, 3].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn subset_and_union() {
        let a: ElemSet = [0, 2].into_iter().collect();
        let b: ElemSet = [0, 1, 2].into_iter().collect();
        assert!(a.is_subset(b));
        assert!(!b.is_subset(a));
        assert_eq!(a.union(ElemSet::singleton(1)), b);
        assert_eq!(b.difference(a), ElemSet::singleton(1));
    }

    #[test]
    fn full_handles_64() {
        assert_eq!(ElemSet::full(64).len(), 64);
        assert_eq!(ElemSet::full(3).to_vec(), vec![0, 1, 2]);
    }

    #[test]
    fn powerset_order_starts_with_singletons_of_low_indices() {
        let subsets: Vec<_> = ElemSet::nonempty_subsets(2).map(|s| s.to_vec()).collect();
        assert_eq!(subsets, vec![vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn json_is_sorted_index_list() {
        let s: ElemSet = [4, 0].into_iter().collect();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,4]");
        let back: ElemSet = serde_json::from_str("[4,0]").unwrap();
        assert_eq!(back, s);
    }
}

//! Lectic enumeration of the closed sets of a closure operator.

use crate::bitset::BitSet;
use alloc::vec::Vec;

/// Every closed set of `closure` on a universe of `n` elements, in lectic order.
///
/// `closure` must be extensive, monotone and idempotent; the output then has
/// no duplicates and calls `closure` at most `n` times per closed set.
pub fn all_closed_sets<F>(n: usize, closure: F) -> Vec<BitSet>
where
    F: Fn(&BitSet) -> BitSet,
{
    let mut out = Vec::new();
    let mut current = closure(&BitSet::empty(n));
    out.push(current.clone());
    while let Some(next) = next_closure(&current, n, &closure) {
        out.push(next.clone());
        current = next;
    }
    out
}

fn next_closure<F>(closed: &BitSet, n: usize, closure: &F) -> Option<BitSet>
where
    F: Fn(&BitSet) -> BitSet,
{
    let mut prefix = closed.clone();
    for i in (0..n).rev() {
        if prefix.contains(i) {
            prefix.remove(i);
            continue;
        }
        let mut candidate = prefix.clone();
        candidate.insert(i);
        let next = closure(&candidate);
        // canonicity: nothing below i may be added
        if next.difference(&prefix).iter().next() == Some(i) {
            return Some(next);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_closure_yields_powerset() {
        let sets = all_closed_sets(4, |s| s.clone());
        assert_eq!(sets.len(), 16);
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 16);
    }

    #[test]
    fn constant_closure_yields_one_set() {
        let sets = all_closed_sets(3, |_| BitSet::full(3));
        assert_eq!(sets, alloc::vec![BitSet::full(3)]);
    }

    #[test]
    fn chain_closure() {
        // down-sets of the chain 0 < 1 < 2 read as "contains i => contains all j < i"
        let sets = all_closed_sets(3, |s| match s.iter().max() {
            Some(m) => BitSet::from_indices(3, 0..=m),
            None => BitSet::empty(3),
        });
        assert_eq!(sets.len(), 4);
    }
}

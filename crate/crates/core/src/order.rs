//! Hasse diagrams of finite posets.

use alloc::vec::Vec;

/// Cover relation of a finite poset whose elements are indexed `0..len`.
///
/// Edges are `(lower, upper)` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hasse {
    covers: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
}

impl Hasse {
    /// Transitive reduction of `leq`, assuming indices are already sorted in a
    /// linear extension of the order and all elements are distinct.
    ///
    /// For each element, candidates above it are scanned in ascending order; a
    /// candidate is a cover unless some cover found earlier lies below it.
    pub fn from_linear_extension<F>(len: usize, leq: F) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        let mut covers = Vec::new();
        for i in 0..len {
            let mut ups: Vec<usize> = Vec::new();
            for j in i + 1..len {
                if leq(i, j) && !ups.iter().any(|&c| leq(c, j)) {
                    ups.push(j);
                }
            }
            covers.extend(ups.into_iter().map(|j| (i, j)));
        }
        Self::from_covers(len, covers)
    }

    pub fn from_covers(len: usize, mut covers: Vec<(usize, usize)>) -> Self {
        covers.sort_unstable();
        covers.dedup();
        let mut lower = alloc::vec![Vec::new(); len];
        let mut upper = alloc::vec![Vec::new(); len];
        for &(lo, hi) in &covers {
            upper[lo].push(hi);
            lower[hi].push(lo);
        }
        Hasse {
            covers,
            lower,
            upper,
        }
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    /// The unique minimal element, if there is exactly one.
    pub fn bottom(&self) -> Option<usize> {
        unique(self.lower.iter().enumerate().filter(|(_, l)| l.is_empty()))
    }

    /// The unique maximal element, if there is exactly one.
    pub fn top(&self) -> Option<usize> {
        unique(self.upper.iter().enumerate().filter(|(_, u)| u.is_empty()))
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        match self.bottom() {
            Some(b) if self.len() > 1 => self.upper[b].clone(),
            _ => Vec::new(),
        }
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<usize> {
        match self.top() {
            Some(t) if self.len() > 1 => self.lower[t].clone(),
            _ => Vec::new(),
        }
    }

    /// In a finite lattice, `x` is ∨-irreducible iff it has exactly one lower cover.
    pub fn is_join_irreducible(&self, i: usize) -> bool {
        self.lower[i].len() == 1
    }

    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.is_join_irreducible(i))
            .collect()
    }
}

fn unique<'a, I>(mut it: I) -> Option<usize>
where
    I: Iterator<Item = (usize, &'a Vec<usize>)>,
{
    let (first, _) = it.next()?;
    if it.next().is_some() {
        None
    } else {
        Some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn diamond() {
        // 0 < 1,2 < 3 with 1,2 incomparable
        let leq = |a: usize, b: usize| a == b || a == 0 || b == 3;
        let h = Hasse::from_linear_extension(4, leq);
        assert_eq!(h.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(h.bottom(), Some(0));
        assert_eq!(h.top(), Some(3));
        assert_eq!(h.atoms(), vec![1, 2]);
        assert_eq!(h.coatoms(), vec![1, 2]);
        assert!(!h.is_join_irreducible(0));
        assert!(h.is_join_irreducible(1));
        assert!(!h.is_join_irreducible(3));
    }

    #[test]
    fn chain_is_reduced() {
        let h = Hasse::from_linear_extension(4, |a, b| a <= b);
        assert_eq!(h.covers(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(h.join_irreducibles(), vec![1, 2, 3]);
    }

    #[test]
    fn singleton_has_no_atoms() {
        let h = Hasse::from_linear_extension(1, |a, b| a <= b);
        assert_eq!(h.bottom(), Some(0));
        assert!(h.atoms().is_empty());
    }
}

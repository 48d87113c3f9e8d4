//! Finite strict partial orders on `{0, …, n-1}`.
//!
//! A [`Relation`] is always stored transitively closed, as one successor
//! bitmask per element. All enumeration outputs come back in a fixed
//! canonical order.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set a [`Relation`] can hold (one `u32` mask per row).
pub const MAX_ELEMENTS: usize = 32;

/// A subset of `{0, …, n-1}` stored as a bitmask.
///
/// Ordered by size first, then lexicographically on the sorted members.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u32);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_mask(mask: u32) -> Self {
        ElementSet(mask)
    }

    pub fn full(n: usize) -> Self {
        ElementSet(full_mask(n))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn complement(self, n: usize) -> Self {
        ElementSet(!self.0 & full_mask(n))
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone)]
pub struct Members(u32);

impl Iterator for Members {
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

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// A strict partial order on `{0, …, n-1}`, transitively closed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    /// `succ[i]` has bit `j` set iff `i < j`.
    succ: Vec<u32>,
}

impl Relation {
    /// Closes `pairs` transitively and checks the result is a strict order.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                what: "relation",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        let mut succ = vec![0u32; n];
        for &(i, j) in pairs {
            for index in [i, j] {
                if index >= n {
                    return Err(Error::Index { index, n });
                }
            }
            succ[i] |= 1 << j;
        }
        Self::from_masks(succ)
    }

    /// Builds a relation from successor masks, closing transitively.
    pub fn from_masks(mut succ: Vec<u32>) -> Result<Self> {
        let n = succ.len();
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap {
                what: "relation",
                size: n,
                cap: MAX_ELEMENTS,
            });
        }
        for row in &succ {
            let stray = row & !full_mask(n);
            if stray != 0 {
                let index = stray.trailing_zeros() as usize;
                return Err(Error::Index { index, n });
            }
        }
        for k in 0..n {
            let row_k = succ[k];
            for row in succ.iter_mut() {
                if *row & (1 << k) != 0 {
                    *row |= row_k;
                }
            }
        }
        for (i, row) in succ.iter().enumerate() {
            if row & (1 << i) != 0 {
                return Err(Error::Cycle(i));
            }
        }
        Ok(Relation { n, succ })
    }

    pub fn antichain(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        Relation {
            n,
            succ: vec![0; n],
        }
    }

    /// The total order listing `order[0] < order[1] < …`.
    pub fn chain(order: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = order.windows(2).map(|w| (w[0], w[1])).collect();
        Self::new(order.len(), &pairs)
    }

    /// The natural order `0 < 1 < … < n-1`.
    pub fn natural(n: usize) -> Self {
        let succ = (0..n).map(|i| full_mask(n) & !full_mask(i + 1)).collect();
        Relation { n, succ }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.succ[i] & (1 << j) != 0
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.less(i, j) || self.less(j, i)
    }

    #[inline]
    pub fn succ_mask(&self, i: usize) -> u32 {
        self.succ[i]
    }

    pub fn pred_mask(&self, j: usize) -> u32 {
        let mut m = 0;
        for (i, row) in self.succ.iter().enumerate() {
            if row & (1 << j) != 0 {
                m |= 1 << i;
            }
        }
        m
    }

    /// All pairs `(i, j)` with `i < j`, sorted lexicographically.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            out.extend(ElementSet(self.succ[i]).iter().map(|j| (i, j)));
        }
        out
    }

    /// The covering pairs (transitive reduction), sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            let mut indirect = 0u32;
            for j in ElementSet(self.succ[i]).iter() {
                indirect |= self.succ[j];
            }
            out.extend(ElementSet(self.succ[i] & !indirect).iter().map(|j| (i, j)));
        }
        out
    }

    pub fn len_pairs(&self) -> usize {
        self.succ.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn is_total(&self) -> bool {
        self.len_pairs() == self.n * self.n.saturating_sub(1) / 2
    }

    /// `true` iff every pair of `self` is also a pair of `other`.
    pub fn is_subrelation_of(&self, other: &Relation) -> bool {
        self.n == other.n && self.succ.iter().zip(&other.succ).all(|(a, b)| a & !b == 0)
    }

    pub fn opposite(&self) -> Relation {
        let succ = (0..self.n).map(|j| self.pred_mask(j)).collect();
        Relation { n: self.n, succ }
    }

    /// Renames element `i` to `new_index[i]`.
    pub fn relabel(&self, new_index: &[usize]) -> Relation {
        debug_assert_eq!(new_index.len(), self.n);
        let mut succ = vec![0u32; self.n];
        for i in 0..self.n {
            for j in ElementSet(self.succ[i]).iter() {
                succ[new_index[i]] |= 1 << new_index[j];
            }
        }
        Relation { n: self.n, succ }
    }

    pub fn is_lower_ideal(&self, set: ElementSet) -> bool {
        set.iter().all(|y| self.pred_mask(y) & !set.0 == 0)
    }

    pub fn is_upper_ideal(&self, set: ElementSet) -> bool {
        set.iter().all(|x| self.succ[x] & !set.0 == 0)
    }

    /// Every downward-closed subset, ordered by size then lexicographically.
    pub fn lower_ideals(&self) -> Vec<ElementSet> {
        let preds: Vec<u32> = (0..self.n).map(|j| self.pred_mask(j)).collect();
        // Visiting elements in a linear extension order, an element can join
        // the ideal only if all of its predecessors already have.
        let order = self.first_linear_extension();
        let mut out = Vec::new();
        let mut stack = vec![(0usize, 0u32)];
        while let Some((depth, set)) = stack.pop() {
            if depth == order.len() {
                out.push(ElementSet(set));
                continue;
            }
            let e = order[depth];
            stack.push((depth + 1, set));
            if preds[e] & !set == 0 {
                stack.push((depth + 1, set | (1 << e)));
            }
        }
        out.sort();
        out
    }

    /// One `(I, S)` pair per lower ideal `I`, with `S` its complement.
    pub fn decompositions(&self) -> Vec<(ElementSet, ElementSet)> {
        self.lower_ideals()
            .into_iter()
            .map(|i| (i, i.complement(self.n)))
            .collect()
    }

    /// Restriction to `subset`, relabelled to `0..|subset|` by ascending index.
    pub fn induced(&self, subset: ElementSet) -> Result<Relation> {
        if subset.0 & !full_mask(self.n) != 0 {
            let index = 31 - (subset.0 & !full_mask(self.n)).leading_zeros() as usize;
            return Err(Error::Index { index, n: self.n });
        }
        Ok(self.induced_unchecked(subset))
    }

    pub(crate) fn induced_unchecked(&self, subset: ElementSet) -> Relation {
        let members = subset.to_vec();
        let mut pos = [0usize; MAX_ELEMENTS];
        for (k, &e) in members.iter().enumerate() {
            pos[e] = k;
        }
        let succ = members
            .iter()
            .map(|&e| {
                ElementSet(self.succ[e] & subset.0)
                    .iter()
                    .fold(0u32, |m, j| m | (1 << pos[j]))
            })
            .collect();
        Relation {
            n: members.len(),
            succ,
        }
    }

    fn first_linear_extension(&self) -> Vec<usize> {
        let preds: Vec<u32> = (0..self.n).map(|j| self.pred_mask(j)).collect();
        let mut placed = 0u32;
        let mut out = Vec::with_capacity(self.n);
        while out.len() < self.n {
            let next = (0..self.n)
                .find(|&e| placed & (1 << e) == 0 && preds[e] & !placed == 0)
                .expect("acyclic relation always has a minimal element");
            placed |= 1 << next;
            out.push(next);
        }
        out
    }

    /// All orderings `e_1 … e_n` compatible with the order, lexicographically.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let preds: Vec<u32> = (0..self.n).map(|j| self.pred_mask(j)).collect();
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.n);
        extend_rec(self.n, &preds, 0, &mut current, &mut out);
        out
    }

    pub fn count_linear_extensions(&self) -> usize {
        let preds: Vec<u32> = (0..self.n).map(|j| self.pred_mask(j)).collect();
        let mut memo = std::collections::HashMap::new();
        count_rec(self.n, &preds, 0, &mut memo)
    }
}

fn extend_rec(n: usize, preds: &[u32], placed: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == n {
        out.push(cur.clone());
        return;
    }
    for e in 0..n {
        if placed & (1 << e) == 0 && preds[e] & !placed == 0 {
            cur.push(e);
            extend_rec(n, preds, placed | (1 << e), cur, out);
            cur.pop();
        }
    }
}

fn count_rec(
    n: usize,
    preds: &[u32],
    placed: u32,
    memo: &mut std::collections::HashMap<u32, usize>,
) -> usize {
    if placed == full_mask(n) {
        return 1;
    }
    if let Some(&c) = memo.get(&placed) {
        return c;
    }
    let mut total = 0;
    for e in 0..n {
        if placed & (1 << e) == 0 && preds[e] & !placed == 0 {
            total += count_rec(n, preds, placed | (1 << e), memo);
        }
    }
    memo.insert(placed, total);
    total
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, {:?})", self.n, self.pairs())
    }
}

/// Every strict partial order on `{0, …, n-1}` (labelled, not up to
/// isomorphism), in a deterministic order.
///
/// Element `k` is added to each order on `{0, …, k-1}` together with a
/// lower ideal `D` below it and an upper ideal `U` above it such that
/// every element of `D` is already below every element of `U`.
pub fn all_relations(n: usize) -> Vec<Relation> {
    assert!(n <= 8, "labelled poset enumeration is only sensible for tiny n");
    let mut level = vec![Relation::antichain(0)];
    for k in 0..n {
        let mut next = Vec::new();
        for r in &level {
            let ideals = r.lower_ideals();
            for &down in &ideals {
                for &low in &ideals {
                    let up = low.complement(k);
                    if down.0 & up.0 != 0 {
                        continue;
                    }
                    if down.iter().any(|d| up.0 & !r.succ[d] != 0) {
                        continue;
                    }
                    let mut succ = r.succ.clone();
                    for d in down.iter() {
                        succ[d] |= 1 << k;
                    }
                    succ.push(up.0);
                    next.push(Relation { n: k + 1, succ });
                }
            }
        }
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> ElementSet {
        v.iter().copied().collect()
    }

    #[test]
    fn validate_closes_transitively() {
        let r = Relation::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(r.pairs(), vec![(0, 1), (0, 2), (1, 2)]);
        assert_eq!(r.covers(), vec![(0, 1), (1, 2)]);
        assert_eq!(Relation::new(2, &[]).unwrap().pairs(), vec![]);
    }

    #[test]
    fn validate_rejects_cycles_and_bad_indices() {
        assert!(matches!(Relation::new(2, &[(0, 1), (1, 0)]), Err(Error::Cycle(_))));
        assert!(matches!(Relation::new(1, &[(0, 0)]), Err(Error::Cycle(0))));
        assert_eq!(
            Relation::new(2, &[(0, 2)]),
            Err(Error::Index { index: 2, n: 2 })
        );
        assert!(matches!(Relation::new(40, &[]), Err(Error::SizeCap { .. })));
    }

    #[test]
    fn ideals_of_small_orders() {
        let chain2 = Relation::natural(2);
        assert_eq!(chain2.lower_ideals(), vec![set(&[]), set(&[0]), set(&[0, 1])]);
        let anti2 = Relation::antichain(2);
        assert_eq!(
            anti2.lower_ideals(),
            vec![set(&[]), set(&[0]), set(&[1]), set(&[0, 1])]
        );
        assert_eq!(Relation::natural(3).lower_ideals().len(), 4);
    }

    #[test]
    fn decompositions_of_small_orders() {
        assert_eq!(
            Relation::natural(2).decompositions(),
            vec![
                (set(&[]), set(&[0, 1])),
                (set(&[0]), set(&[1])),
                (set(&[0, 1]), set(&[]))
            ]
        );
        assert_eq!(Relation::antichain(0).decompositions(), vec![(set(&[]), set(&[]))]);
        assert_eq!(Relation::antichain(3).decompositions().len(), 8);
    }

    #[test]
    fn induced_suborders() {
        let chain3 = Relation::natural(3);
        assert_eq!(chain3.induced(set(&[0, 2])).unwrap(), Relation::natural(2));
        assert_eq!(chain3.induced(set(&[])).unwrap(), Relation::antichain(0));
        assert_eq!(
            Relation::antichain(3).induced(set(&[1, 2])).unwrap(),
            Relation::antichain(2)
        );
        assert!(matches!(chain3.induced(set(&[3])), Err(Error::Index { .. })));
    }

    #[test]
    fn linear_extensions_small() {
        assert_eq!(Relation::antichain(3).linear_extensions().len(), 6);
        assert_eq!(Relation::natural(3).linear_extensions(), vec![vec![0, 1, 2]]);
        let vee = Relation::new(3, &[(0, 2), (1, 2)]).unwrap();
        assert_eq!(vee.linear_extensions(), vec![vec![0, 1, 2], vec![1, 0, 2]]);
        assert_eq!(vee.count_linear_extensions(), 2);
    }

    #[test]
    fn labelled_poset_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_relations(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19, 219, 4231]);
    }

    #[test]
    fn invariants_on_all_small_orders() {
        for n in 0..=5 {
            for r in all_relations(n) {
                let ideals = r.lower_ideals();
                let mut scanned: Vec<ElementSet> = (0..1u32 << n)
                    .map(ElementSet::from_mask)
                    .filter(|&s| r.is_lower_ideal(s))
                    .collect();
                scanned.sort();
                assert_eq!(ideals, scanned);
                let decs = r.decompositions();
                assert_eq!(ideals.len(), decs.len());
                for (i, s) in decs {
                    assert!(r.is_lower_ideal(i));
                    assert!(r.is_upper_ideal(s));
                }
                assert!(!r.linear_extensions().is_empty());
                assert_eq!(r.induced(ElementSet::full(n)).unwrap(), r);
                assert_eq!(Relation::new(n, &r.pairs()).unwrap(), r);
                assert_eq!(Relation::new(n, &r.covers()).unwrap(), r);
            }
        }
    }
}

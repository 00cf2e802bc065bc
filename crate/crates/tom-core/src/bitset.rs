//! Fixed-universe bit sets used to represent subgroups as element sets.
//!
//! A subgroup of a group of order n is a subset of the element indices
//! `0..n`, so a handful of `u64` blocks suffice (one block for every group
//! of order ≤ 64). Sets compare with a specific total order: the
//! lexicographic order on the *sorted element sequences*, with a proper
//! prefix sorting before its extensions. That is the tie-breaking order used
//! everywhere subgroups or their conjugacy classes get sorted, so `Ord` here
//! implements it rather than the raw integer order of the blocks (which
//! would sort `{1}` before `{0,1}`).

use std::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    universe: usize,
    blocks: Vec<u64>,
}

impl BitSet {
    /// Empty set over the universe `0..universe`.
    pub fn new(universe: usize) -> Self {
        BitSet {
            universe,
            blocks: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn from_elements(universe: usize, elements: &[usize]) -> Self {
        let mut set = BitSet::new(universe);
        for &e in elements {
            set.insert(e);
        }
        set
    }

    /// Size of the universe the set lives in (not the element count).
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, element: usize) {
        debug_assert!(element < self.universe);
        self.blocks[element / 64] |= 1u64 << (element % 64);
    }

    pub fn contains(&self, element: usize) -> bool {
        debug_assert!(element < self.universe);
        self.blocks[element / 64] & (1u64 << (element % 64)) != 0
    }

    /// Number of elements in the set.
    pub fn count(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// True if every element of `self` lies in `other`.
    #[inline]
    pub fn is_subset_of(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.universe, other.universe);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.universe, other.universe);
        for (a, &b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    /// Elements in ascending order.
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(k, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter_ones().collect()
    }

    /// Lexicographic comparison of the sorted element sequences, prefixes
    /// first: `{} < {0} < {0,1} < {0,2} < {1} < {1,2} < {2}`.
    ///
    /// Decided at `m`, the smallest element where the sets differ: the set
    /// containing `m` is smaller, unless the other set has no elements past
    /// the common prefix at all, in which case it is a proper prefix and
    /// sorts first.
    pub fn lex_cmp(&self, other: &BitSet) -> Ordering {
        let blocks = self.blocks.len().max(other.blocks.len());
        for k in 0..blocks {
            let a = self.blocks.get(k).copied().unwrap_or(0);
            let b = other.blocks.get(k).copied().unwrap_or(0);
            if a == b {
                continue;
            }
            let m = (a ^ b).trailing_zeros();
            let m_in_self = a & (1u64 << m) != 0;
            // Whichever set lacks m: does it have any element beyond the
            // common prefix (i.e. ≥ m)? Bits below m agree in block k, and
            // m itself belongs to only one side, so `>> m` plus the later
            // blocks captures exactly the elements past the prefix.
            let rest = |set: &BitSet, head: u64| {
                head >> m != 0 || set.blocks.get(k + 1..).unwrap_or(&[]).iter().any(|&x| x != 0)
            };
            return if m_in_self {
                if rest(other, b) {
                    Ordering::Less // self's next element m beats other's larger one
                } else {
                    Ordering::Greater // other is a proper prefix of self
                }
            } else if rest(self, a) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        Ordering::Equal
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(elements: &[usize]) -> BitSet {
        BitSet::from_elements(130, elements)
    }

    #[test]
    fn basic_membership_and_count() {
        let mut s = BitSet::new(130);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.count(), 3);
        assert!(s.contains(64));
        assert!(!s.contains(63));
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
    }

    #[test]
    fn subset_and_union() {
        let a = set(&[1, 65]);
        let b = set(&[1, 65, 100]);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        let mut u = a.clone();
        u.union_with(&set(&[100]));
        assert_eq!(u, b);
    }

    #[test]
    fn lex_order_prefixes_first() {
        let order = [
            set(&[]),
            set(&[0]),
            set(&[0, 1]),
            set(&[0, 1, 2]),
            set(&[0, 2]),
            set(&[1]),
            set(&[1, 2]),
            set(&[2]),
        ];
        for w in order.windows(2) {
            assert_eq!(w[0].cmp(&w[1]), Ordering::Less, "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn lex_order_across_block_boundaries() {
        assert_eq!(set(&[63]).cmp(&set(&[63, 64])), Ordering::Less);
        assert_eq!(set(&[63, 64]).cmp(&set(&[64])), Ordering::Less);
        assert_eq!(set(&[0, 128]).cmp(&set(&[0, 64])), Ordering::Greater);
    }

    proptest! {
        /// The block-level comparison must agree with comparing the sorted
        /// element lists directly (Vec's Ord is exactly lexicographic with
        /// prefixes first).
        #[test]
        fn lex_cmp_matches_sorted_sequence_compare(
            a in proptest::collection::vec(0usize..130, 0..20),
            b in proptest::collection::vec(0usize..130, 0..20),
        ) {
            let sa = BitSet::from_elements(130, &a);
            let sb = BitSet::from_elements(130, &b);
            prop_assert_eq!(sa.cmp(&sb), sa.to_vec().cmp(&sb.to_vec()));
        }
    }
}

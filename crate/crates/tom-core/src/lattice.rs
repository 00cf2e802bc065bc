//! Exhaustive subgroup enumeration and conjugacy classes of subgroups.

use std::collections::HashSet;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{conjugate_subgroup, cyclic_subgroup, generated_subgroup, Subgroup};

/// Default cap on the number of subgroups enumerated before giving up with
/// [`Error::TooManySubgroups`].
pub const DEFAULT_MAX_SUBGROUPS: usize = 100_000;

/// A conjugacy class of subgroups: `class_size` conjugates of the
/// representative, which is the lexicographically least member set of the
/// class.
#[derive(Debug, Clone)]
pub struct SubgroupClass {
    pub representative: Subgroup,
    /// Order of each subgroup in the class.
    pub subgroup_order: usize,
    /// Number of distinct conjugates.
    pub class_size: usize,
    /// Order of the normalizer of the representative; satisfies
    /// `class_size × normalizer_order = |G|` (orbit–stabilizer).
    pub normalizer_order: usize,
}

impl SubgroupClass {
    /// All subgroups in the class, sorted.
    pub fn members(&self, group: &FiniteGroup) -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = (0..group.order())
            .map(|x| conjugate_subgroup(group, &self.representative, x))
            .collect();
        out.sort();
        out.dedup();
        debug_assert_eq!(out.len(), self.class_size);
        out
    }
}

/// Every subgroup of `group`, sorted by member set.
///
/// Enumeration starts from the cyclic subgroups and repeatedly extends each
/// known subgroup H by each element g ∉ H to the join ⟨H, g⟩ until nothing
/// new appears. Every subgroup K is reached: a chain
/// 1 < ⟨g₁⟩ < ⟨g₁, g₂⟩ < … = K exists by picking any gᵢ₊₁ in K outside the
/// current stage, and the fixpoint explores all such extensions.
pub fn all_subgroups(group: &FiniteGroup) -> Result<Vec<Subgroup>> {
    all_subgroups_bounded(group, DEFAULT_MAX_SUBGROUPS)
}

/// [`all_subgroups`] with an explicit bound on how many subgroups may appear.
pub fn all_subgroups_bounded(group: &FiniteGroup, max_subgroups: usize) -> Result<Vec<Subgroup>> {
    let n = group.order();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut list: Vec<Subgroup> = Vec::new();

    let push = |sub: Subgroup, list: &mut Vec<Subgroup>, seen: &mut HashSet<BitSet>| {
        if !seen.contains(sub.members()) {
            if list.len() >= max_subgroups {
                return Err(Error::TooManySubgroups {
                    bound: max_subgroups,
                });
            }
            seen.insert(sub.members().clone());
            list.push(sub);
        }
        Ok(())
    };

    for e in 0..n {
        push(cyclic_subgroup(group, e), &mut list, &mut seen)?;
    }
    let mut i = 0;
    while i < list.len() {
        let members = list[i].members().clone();
        for g in 0..n {
            if !members.contains(g) {
                let join = generated_subgroup(group, members.iter_ones().chain([g]));
                push(join, &mut list, &mut seen)?;
            }
        }
        i += 1;
    }

    list.sort();
    Ok(list)
}

/// Conjugacy classes of subgroups, sorted by ascending subgroup order with
/// ties broken by the representative's member set.
pub fn conjugacy_classes_of_subgroups(group: &FiniteGroup) -> Result<Vec<SubgroupClass>> {
    let subgroups = all_subgroups(group)?;
    Ok(classify_subgroups(group, &subgroups))
}

/// Groups an exhaustive, sorted subgroup list into conjugacy classes.
pub fn classify_subgroups(group: &FiniteGroup, subgroups: &[Subgroup]) -> Vec<SubgroupClass> {
    let n = group.order();
    let mut visited: HashSet<BitSet> = HashSet::new();
    let mut classes: Vec<SubgroupClass> = Vec::new();

    // Subgroups arrive sorted, so the first unvisited member of each class
    // is automatically the lexicographically least one.
    for sub in subgroups {
        if visited.contains(sub.members()) {
            continue;
        }
        let mut class_size = 0;
        for x in 0..n {
            let conj = conjugate_subgroup(group, sub, x);
            if visited.insert(conj.members().clone()) {
                class_size += 1;
            }
        }
        debug_assert_eq!(n % class_size, 0);
        classes.push(SubgroupClass {
            subgroup_order: sub.order(),
            class_size,
            normalizer_order: n / class_size,
            representative: sub.clone(),
        });
    }

    // Stable sort keeps the lex order of representatives within each order.
    classes.sort_by_key(|c| c.subgroup_order);
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_group;
    use crate::perm::Permutation;
    use crate::subgroup::{is_subgroup, normalizer_order};

    fn group_from(images: &[&[u32]]) -> FiniteGroup {
        let gens: Vec<Permutation> = images
            .iter()
            .map(|v| Permutation::from_images(v.to_vec()).unwrap())
            .collect();
        build_group(&gens).unwrap()
    }

    fn s3() -> FiniteGroup {
        group_from(&[&[1, 2, 0], &[1, 0, 2]])
    }

    /// Quaternion group of order 8 acting regularly: i maps x to i·x.
    fn q8() -> FiniteGroup {
        // Elements ordered 1, -1, i, -i, j, -j, k, -k; generators i and j.
        group_from(&[
            &[2, 3, 1, 0, 6, 7, 5, 4],
            &[4, 5, 7, 6, 1, 0, 2, 3],
        ])
    }

    /// Exhaustive reference: test every subset containing the identity.
    fn subgroups_by_brute_force(g: &FiniteGroup) -> Vec<Subgroup> {
        let n = g.order();
        assert!(n <= 16, "brute force oracle is exponential");
        let mut out = Vec::new();
        for mask in 0usize..(1 << (n - 1)) {
            // Bit k of mask decides membership of element k+1; identity is
            // always in.
            let mut members = BitSet::new(n);
            members.insert(0);
            for k in 0..n - 1 {
                if mask & (1 << k) != 0 {
                    members.insert(k + 1);
                }
            }
            if is_subgroup(g, &members) {
                out.push(Subgroup::from_members_unchecked(members));
            }
        }
        out.sort();
        out
    }

    #[test]
    fn s3_subgroups_match_brute_force() {
        let g = s3();
        let fast = all_subgroups(&g).unwrap();
        assert_eq!(fast, subgroups_by_brute_force(&g));
        assert_eq!(fast.len(), 6); // 1, three ⟨transposition⟩, ⟨3-cycle⟩, S3
    }

    #[test]
    fn q8_subgroups_match_brute_force() {
        let g = q8();
        g.validate().unwrap();
        let fast = all_subgroups(&g).unwrap();
        assert_eq!(fast, subgroups_by_brute_force(&g));
        assert_eq!(fast.len(), 6); // 1, center, ⟨i⟩, ⟨j⟩, ⟨k⟩, Q8
        let mut orders: Vec<usize> = fast.iter().map(|s| s.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    }

    #[test]
    fn subgroup_list_is_sorted_and_bounded() {
        let g = s3();
        let subs = all_subgroups(&g).unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(
            all_subgroups_bounded(&g, 3),
            Err(Error::TooManySubgroups { bound: 3 })
        ));
    }

    #[test]
    fn s3_classes_have_expected_shape() {
        let g = s3();
        let classes = conjugacy_classes_of_subgroups(&g).unwrap();
        let shape: Vec<(usize, usize, usize)> = classes
            .iter()
            .map(|c| (c.subgroup_order, c.class_size, c.normalizer_order))
            .collect();
        assert_eq!(shape, vec![(1, 1, 6), (2, 3, 2), (3, 1, 6), (6, 1, 6)]);
    }

    #[test]
    fn classes_partition_the_subgroup_list() {
        for g in [s3(), q8()] {
            let subs = all_subgroups(&g).unwrap();
            let classes = conjugacy_classes_of_subgroups(&g).unwrap();
            let total: usize = classes.iter().map(|c| c.class_size).sum();
            assert_eq!(total, subs.len());
            for c in &classes {
                assert_eq!(c.class_size * c.normalizer_order, g.order());
                assert_eq!(
                    c.normalizer_order,
                    normalizer_order(&g, &c.representative)
                );
                // Representative is the least member of its class.
                let members = c.members(&g);
                assert_eq!(members[0], c.representative);
                assert_eq!(members.len(), c.class_size);
            }
            // Ordered by subgroup order, ties by representative.
            assert!(classes.windows(2).all(|w| {
                (w[0].subgroup_order, w[0].representative.members())
                    < (w[1].subgroup_order, w[1].representative.members())
            }));
        }
    }
}

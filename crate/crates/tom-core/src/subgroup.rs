//! Subgroups as element sets, with generation, conjugation, and normalizers.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup, stored as the bit set of its member element indices.
///
/// The element count is cached because subgroup orders are consulted
/// constantly while sorting classes and computing marks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: BitSet,
    order: usize,
}

impl Subgroup {
    /// Wraps a member set that is already known to be closed.
    pub(crate) fn from_members_unchecked(members: BitSet) -> Self {
        let order = members.count();
        Subgroup { members, order }
    }

    /// Wraps a member set after checking it really is a subgroup of `group`.
    pub fn from_members(group: &FiniteGroup, members: BitSet) -> Result<Self> {
        ensure_subgroup(group, &members)?;
        Ok(Self::from_members_unchecked(members))
    }

    /// The trivial subgroup `{identity}`.
    pub fn trivial(group: &FiniteGroup) -> Self {
        let mut members = BitSet::new(group.order());
        members.insert(FiniteGroup::IDENTITY);
        Subgroup { members, order: 1 }
    }

    /// The whole group as a subgroup of itself.
    pub fn full(group: &FiniteGroup) -> Self {
        let n = group.order();
        Subgroup {
            members: BitSet::from_elements(n, &(0..n).collect::<Vec<_>>()),
            order: n,
        }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    /// Elements in ascending index order.
    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }
}

/// Fails unless `members` contains the identity and is closed under the
/// group operation (which, for a finite set, forces inverses too).
pub(crate) fn ensure_subgroup(group: &FiniteGroup, members: &BitSet) -> Result<()> {
    if members.universe() != group.order() {
        return Err(Error::NotASubgroup {
            reason: format!(
                "element universe {} does not match group order {}",
                members.universe(),
                group.order()
            ),
        });
    }
    if !members.contains(FiniteGroup::IDENTITY) {
        return Err(Error::NotASubgroup {
            reason: "missing the identity".into(),
        });
    }
    let elements = members.to_vec();
    for &a in &elements {
        for &b in &elements {
            if !members.contains(group.mul(a, b)) {
                return Err(Error::NotASubgroup {
                    reason: format!("not closed: {a} · {b} escapes the set"),
                });
            }
        }
    }
    Ok(())
}

/// True if `members` forms a subgroup of `group`.
pub fn is_subgroup(group: &FiniteGroup, members: &BitSet) -> bool {
    ensure_subgroup(group, members).is_ok()
}

/// The subgroup generated by a seed set of elements: the closure of
/// `seed ∪ {identity}` under multiplication.
///
/// Closure proceeds over an append-only worklist, crossing each newly
/// processed element with everything discovered before it (both product
/// orders), so every pair eventually gets multiplied. Once more than half
/// the group has appeared the result can only be the whole group (a proper
/// subgroup has index ≥ 2), so closure short-circuits.
pub fn generated_subgroup(group: &FiniteGroup, seed: impl IntoIterator<Item = usize>) -> Subgroup {
    let n = group.order();
    let mut members = BitSet::new(n);
    members.insert(FiniteGroup::IDENTITY);
    let mut list: Vec<usize> = vec![FiniteGroup::IDENTITY];
    for e in seed {
        if !members.contains(e) {
            members.insert(e);
            list.push(e);
        }
    }

    let mut i = 0;
    while i < list.len() {
        if list.len() > n / 2 {
            return Subgroup::full(group);
        }
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for p in [group.mul(a, b), group.mul(b, a)] {
                if !members.contains(p) {
                    members.insert(p);
                    list.push(p);
                }
            }
        }
        i += 1;
    }
    Subgroup::from_members_unchecked(members)
}

/// The cyclic subgroup generated by one element.
pub fn cyclic_subgroup(group: &FiniteGroup, element: usize) -> Subgroup {
    let mut members = BitSet::new(group.order());
    let mut x = FiniteGroup::IDENTITY;
    loop {
        members.insert(x);
        x = group.mul(x, element);
        if x == FiniteGroup::IDENTITY {
            break;
        }
    }
    Subgroup::from_members_unchecked(members)
}

/// The conjugate subgroup `x⁻¹ H x`.
pub fn conjugate_subgroup(group: &FiniteGroup, subgroup: &Subgroup, x: usize) -> Subgroup {
    let mut members = BitSet::new(group.order());
    for a in subgroup.members().iter_ones() {
        members.insert(group.conj(a, x));
    }
    debug_assert_eq!(members.count(), subgroup.order());
    Subgroup::from_members_unchecked(members)
}

/// Order of the normalizer `N_G(H) = {x : x⁻¹ H x = H}`, by direct scan.
pub fn normalizer_order(group: &FiniteGroup, subgroup: &Subgroup) -> usize {
    (0..group.order())
        .filter(|&x| {
            subgroup
                .members()
                .iter_ones()
                .all(|a| subgroup.contains(group.conj(a, x)))
        })
        .count()
}

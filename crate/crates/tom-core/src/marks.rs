//! Tables of marks: fixed-point counts of subgroups acting on coset spaces.
//!
//! For conjugacy-class representatives U₁, …, Uₙ of the subgroups of G,
//! ordered by ascending subgroup order, the table of marks is the n×n matrix
//! whose (i, j) entry is the number of cosets in G/Uⱼ fixed by every element
//! of Uᵢ. Row i belongs to the *acting* subgroup Uᵢ and column j to the
//! coset space G/Uⱼ, so entries vanish above the block diagonal: a bigger
//! subgroup can never fix a coset of a smaller one.

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupLabel};
use crate::lattice::{conjugacy_classes_of_subgroups, SubgroupClass};
use crate::multiset::{columns_invariant, entries_invariant, rows_invariant, Multiset};
use crate::subgroup::{ensure_subgroup, normalizer_order, Subgroup};

/// A table of marks, together with the subgroup orders its classes have.
///
/// `class_orders` is non-decreasing; entry (i, j) counts the cosets of the
/// j-th class representative fixed by the i-th representative acting from
/// the left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarksMatrix {
    group_order: usize,
    class_orders: Vec<usize>,
    entries: Vec<u64>,
    label: Option<GroupLabel>,
}

impl MarksMatrix {
    /// Assembles a matrix from raw parts, enforcing the structural laws
    /// every genuine table of marks satisfies. `entries` is row-major n×n.
    pub fn from_parts(
        group_order: usize,
        class_orders: Vec<usize>,
        entries: Vec<u64>,
        label: Option<GroupLabel>,
    ) -> Result<Self> {
        let m = MarksMatrix {
            group_order,
            class_orders,
            entries,
            label,
        };
        m.check_invariants()?;
        Ok(m)
    }

    /// Number of conjugacy classes of subgroups (matrix dimension).
    pub fn n(&self) -> usize {
        self.class_orders.len()
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Subgroup order of each class, ascending.
    pub fn class_orders(&self) -> &[usize] {
        &self.class_orders
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n() + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        let n = self.n();
        &self.entries[i * n..(i + 1) * n]
    }

    pub fn label(&self) -> Option<GroupLabel> {
        self.label
    }

    pub fn with_label(mut self, label: GroupLabel) -> Self {
        self.label = Some(label);
        self
    }

    /// Multiset of all n² entries.
    pub fn entries_invariant(&self) -> Multiset {
        entries_invariant(self.n(), |i, j| self.entry(i, j) as i64)
    }

    /// Multiset of rows-as-multisets. Each row is the fixed-point profile of
    /// one acting subgroup across all coset spaces.
    pub fn rows_invariant(&self) -> Multiset {
        rows_invariant(self.n(), |i, j| self.entry(i, j) as i64)
    }

    /// Multiset of columns-as-multisets. Each column is the profile of one
    /// coset space under all acting subgroups.
    pub fn columns_invariant(&self) -> Multiset {
        columns_invariant(self.n(), |i, j| self.entry(i, j) as i64)
    }

    /// Multiset of class orders (the diagonal block structure).
    pub fn class_order_profile(&self) -> Multiset {
        Multiset::from_ints(self.class_orders.iter().map(|&o| o as i64))
    }

    /// Structural laws of a table of marks:
    /// classes ordered by subgroup order, starting at the trivial subgroup
    /// and ending at the whole group; entry (i, j) = 0 whenever class i has
    /// bigger subgroups than class j; the trivial row counts all cosets
    /// (group order / subgroup order); the whole-group column is all ones;
    /// and the diagonal is positive (a subgroup fixes its own coset).
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.n();
        let fail = |reason: String| Err(Error::MarksMismatch { reason });
        if n == 0 {
            return fail("empty matrix".into());
        }
        if self.entries.len() != n * n {
            return fail(format!(
                "{} entries for dimension {n}",
                self.entries.len()
            ));
        }
        if self.class_orders[0] != 1 || self.class_orders[n - 1] != self.group_order {
            return fail("classes must start at order 1 and end at the group order".into());
        }
        for w in self.class_orders.windows(2) {
            if w[0] > w[1] {
                return fail("class orders must be non-decreasing".into());
            }
        }
        for (j, &o) in self.class_orders.iter().enumerate() {
            if o == 0 || !self.group_order.is_multiple_of(o) {
                return fail(format!("class order {o} does not divide the group order"));
            }
            if self.entry(0, j) as usize * o != self.group_order {
                return fail(format!("trivial row at column {j} must count all cosets"));
            }
        }
        for i in 0..n {
            if self.entry(i, n - 1) != 1 {
                return fail(format!("whole-group column must be 1 at row {i}"));
            }
            if self.entry(i, i) == 0 {
                return fail(format!("diagonal entry {i} must be positive"));
            }
            for j in 0..n {
                if self.class_orders[i] > self.class_orders[j] && self.entry(i, j) != 0 {
                    return fail(format!(
                        "entry ({i}, {j}) must vanish: acting subgroup outweighs the coset space"
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Number of cosets of V fixed by U acting on G/V from the left, via the
/// counting identity: the coset gV is fixed iff g⁻¹Ug ⊆ V, those g form
/// whole cosets of both N_G(U) and V, so
/// |Fix| = #{conjugates of U inside V} · |N_G(U)| / |V|.
pub fn fixed_points_count(group: &FiniteGroup, u: &Subgroup, v: &Subgroup) -> Result<u64> {
    ensure_subgroup(group, u.members())?;
    ensure_subgroup(group, v.members())?;
    let conjugates = distinct_conjugates(group, u);
    let inside = conjugates
        .iter()
        .filter(|c| c.is_subset_of(v.members()))
        .count() as u64;
    let product = inside * normalizer_order(group, u) as u64;
    debug_assert_eq!(product % v.order() as u64, 0);
    Ok(product / v.order() as u64)
}

/// The same count by its definition: enumerate the cosets gV and test each
/// for being fixed by all of U. Slower than [`fixed_points_count`] but with
/// no group theory beyond the definition; the two must always agree.
pub fn fixed_points_count_by_cosets(
    group: &FiniteGroup,
    u: &Subgroup,
    v: &Subgroup,
) -> Result<u64> {
    ensure_subgroup(group, u.members())?;
    ensure_subgroup(group, v.members())?;
    let n = group.order();
    let mut covered = BitSet::new(n);
    let mut fixed = 0u64;
    for g in 0..n {
        if covered.contains(g) {
            continue;
        }
        for b in v.members().iter_ones() {
            covered.insert(group.mul(g, b));
        }
        // u · gV = gV for all u ∈ U  ⟺  g⁻¹ug ∈ V for all u ∈ U.
        if u.members().iter_ones().all(|a| v.contains(group.conj(a, g))) {
            fixed += 1;
        }
    }
    Ok(fixed)
}

fn distinct_conjugates(group: &FiniteGroup, sub: &Subgroup) -> Vec<BitSet> {
    let mut sets: Vec<BitSet> = (0..group.order())
        .map(|x| {
            let mut members = BitSet::new(group.order());
            for a in sub.members().iter_ones() {
                members.insert(group.conj(a, x));
            }
            members
        })
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

/// The table of marks of a group: enumerates subgroup classes, then counts
/// fixed points for every (acting class, coset-space class) pair.
pub fn table_of_marks(group: &FiniteGroup) -> Result<MarksMatrix> {
    let classes = conjugacy_classes_of_subgroups(group)?;
    table_of_marks_for_classes(group, &classes)
}

/// [`table_of_marks`] for classes that are already enumerated (and ordered
/// as [`conjugacy_classes_of_subgroups`] orders them).
pub fn table_of_marks_for_classes(
    group: &FiniteGroup,
    classes: &[SubgroupClass],
) -> Result<MarksMatrix> {
    let n = classes.len();
    let conjugate_sets: Vec<Vec<BitSet>> = classes
        .par_iter()
        .map(|c| {
            let sets = distinct_conjugates(group, &c.representative);
            debug_assert_eq!(sets.len(), c.class_size);
            sets
        })
        .collect();

    // Rows are independent; each row i scans all conjugates of its class
    // against the fixed representative of each column class.
    let rows: Vec<Vec<u64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let normalizer = classes[i].normalizer_order as u64;
            (0..n)
                .map(|j| {
                    let v = classes[j].representative.members();
                    let inside = conjugate_sets[i]
                        .iter()
                        .filter(|c| c.is_subset_of(v))
                        .count() as u64;
                    let product = inside * normalizer;
                    debug_assert_eq!(product % classes[j].subgroup_order as u64, 0);
                    product / classes[j].subgroup_order as u64
                })
                .collect()
        })
        .collect();

    MarksMatrix::from_parts(
        group.order(),
        classes.iter().map(|c| c.subgroup_order).collect(),
        rows.into_iter().flatten().collect(),
        group.label(),
    )
}

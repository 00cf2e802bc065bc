//! Oracle tests running the library against the bundled group catalog:
//! subgroup enumeration versus the all-subsets brute force, the fast
//! marks formula versus the coset-scan definition, and counting oracles
//! with independently computable answers.

use std::path::{Path, PathBuf};

use tom_core::{
    all_subgroups, conjugacy_classes_of_subgroups, fixed_points_count,
    fixed_points_count_by_cosets, load_catalog_order, BitSet, FiniteGroup, Subgroup,
};

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

fn groups_of_order(order: usize) -> Vec<FiniteGroup> {
    load_catalog_order(&catalog_dir(), order)
        .unwrap()
        .iter()
        .map(|r| r.build().unwrap())
        .collect()
}

/// Every subset containing the identity, checked for closure directly.
fn subgroups_by_brute_force(group: &FiniteGroup) -> Vec<BitSet> {
    let n = group.order();
    assert!(n <= 20, "brute force is exponential in the group order");
    let mut found = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut members = BitSet::new(n);
        members.insert(0);
        for e in 1..n {
            if mask & (1 << (e - 1)) != 0 {
                members.insert(e);
            }
        }
        let closed = (0..n)
            .filter(|&a| members.contains(a))
            .all(|a| (0..n).filter(|&b| members.contains(b)).all(|b| {
                members.contains(group.mul(a, b)) && members.contains(group.inv(a))
            }));
        if closed {
            found.push(members);
        }
    }
    found.sort();
    found
}

#[test]
fn subgroup_enumeration_matches_brute_force_through_order_twelve() {
    for order in 1..=12 {
        for group in groups_of_order(order) {
            let enumerated: Vec<BitSet> = all_subgroups(&group)
                .unwrap()
                .iter()
                .map(|s| s.members().clone())
                .collect();
            let brute = subgroups_by_brute_force(&group);
            assert_eq!(enumerated, brute, "order {order}");
        }
    }
}

#[test]
fn fast_marks_match_coset_scan_for_every_class_pair_through_order_sixteen() {
    for order in 1..=16 {
        for group in groups_of_order(order) {
            let classes = conjugacy_classes_of_subgroups(&group).unwrap();
            let reps: Vec<Subgroup> = classes.iter().map(|c| c.representative.clone()).collect();
            for u in &reps {
                for v in &reps {
                    let fast = fixed_points_count(&group, u, v).unwrap();
                    let slow = fixed_points_count_by_cosets(&group, u, v).unwrap();
                    assert_eq!(fast, slow, "order {order}");
                }
            }
        }
    }
}

/// The number of subgroups of the group in which every non-identity
/// element has order 2 (order 64) equals the number of subspaces of a
/// 6-dimensional binary vector space: the sum over k of the Gaussian
/// binomial coefficients [6 choose k] at q = 2.
#[test]
fn involution_only_group_has_gaussian_binomial_subgroup_count() {
    fn gaussian_binomial_q2(n: u32, k: u32) -> u128 {
        let mut numerator: u128 = 1;
        let mut denominator: u128 = 1;
        for i in 1..=k {
            numerator *= (1u128 << (n - k + i)) - 1;
            denominator *= (1u128 << i) - 1;
        }
        assert_eq!(numerator % denominator, 0);
        numerator / denominator
    }
    let expected: u128 = (0..=6).map(|k| gaussian_binomial_q2(6, k)).sum();
    assert_eq!(expected, 2825);

    let group = groups_of_order(64)
        .into_iter()
        .find(|g| (1..64).all(|e| g.element_order(e) == 2))
        .expect("the catalog holds a group of order 64 with only involutions");
    let subgroups = all_subgroups(&group).unwrap();
    assert_eq!(subgroups.len() as u128, expected);
}

#[test]
fn every_bundled_catalog_order_parses_and_counts_match() {
    // Group counts per order, as in the standard small-groups libraries.
    let expected: &[(usize, usize)] = &[
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 2),
        (5, 1),
        (6, 2),
        (7, 1),
        (8, 5),
        (9, 2),
        (10, 2),
        (11, 1),
        (12, 5),
        (13, 1),
        (14, 2),
        (15, 1),
        (16, 14),
        (64, 267),
    ];
    for &(order, count) in expected {
        let records = load_catalog_order(&catalog_dir(), order).unwrap();
        assert_eq!(records.len(), count, "order {order}");
        for (k, record) in records.iter().enumerate() {
            assert_eq!(record.catalog_id, k + 1, "ids are 1-based and dense");
        }
    }
}

//! Tables of marks of finite groups, computed from scratch.
//!
//! A group is materialized from permutation generators into a Cayley
//! table ([`build_group`]), its subgroups are enumerated and collected
//! into conjugacy classes ([`classify_subgroups`]), and the table of
//! marks — the matrix counting fixed points of each subgroup class on
//! each coset space — is assembled from normalizer and conjugacy data
//! ([`table_of_marks`]).
//!
//! On top of the tables sit the multiset invariants of
//! [`multiset`] (entries, rows, columns), the isomorphism decider of
//! [`compare`] (are two tables equal up to a simultaneous row/column
//! permutation?), and the batch driver of [`verify`] that certifies a
//! whole family of tables pairwise non-isomorphic. [`catalog`] and
//! [`marks_io`] define the two text formats (group generators in, tables
//! of marks out); [`report`] renders the human-facing reports.
//!
//! Conventions, fixed throughout: group elements are `0..order` with 0
//! the identity; permutations act on `0..degree` and compose left-to-
//! right under [`Permutation::compose`] (`p.compose(&q)` applies `q`
//! first); subgroup classes are ordered by ascending subgroup order with
//! ties broken by the lexicographically least member set; row `i` of a
//! table of marks is the `i`-th acting subgroup class, column `j` the
//! coset space of the `j`-th class.

pub mod bitset;
pub mod catalog;
pub mod compare;
pub mod error;
pub mod group;
pub mod lattice;
pub mod marks;
pub mod marks_io;
pub mod multiset;
pub mod perm;
pub mod report;
pub mod subgroup;
pub mod verify;

pub use bitset::BitSet;
pub use catalog::{
    catalog_file_name, catalog_path, find_record, load_catalog_order, parse_catalog, GroupRecord,
};
pub use compare::{
    distinguish, distinguish_report, exact_witness_search, find_equal_entry_pairs, fingerprint,
    is_isomorphic, permutation_equivalent, Distinction, Fingerprint, IsoVerdict, Refuter,
    Separator,
};
pub use error::{Error, Result};
pub use group::{build_group, build_group_bounded, FiniteGroup, GroupLabel};
pub use lattice::{
    all_subgroups, all_subgroups_bounded, classify_subgroups, conjugacy_classes_of_subgroups,
    SubgroupClass,
};
pub use marks::{
    fixed_points_count, fixed_points_count_by_cosets, table_of_marks, table_of_marks_for_classes,
    MarksMatrix,
};
pub use marks_io::{read_marks, write_marks};
pub use multiset::{columns_invariant, entries_invariant, rows_invariant, Multiset, Value};
pub use perm::Permutation;
pub use report::{
    comparison_table, render_comparison, render_invariants, render_scan, render_verify, Axis,
    ComparisonRow, ComparisonTable, ReportFormat, ORIENTATION_NOTE,
};
pub use subgroup::{
    conjugate_subgroup, cyclic_subgroup, generated_subgroup, is_subgroup, normalizer_order,
    Subgroup,
};
pub use verify::{verify_tables, PairVerdict, VerifyReport};

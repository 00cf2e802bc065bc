//! Multisets and the permutation-invariant matrix summaries built on them.
//!
//! A square matrix has three natural invariants under simultaneous or
//! independent row/column permutations: the multiset of all entries, the
//! multiset of rows-as-multisets, and the multiset of columns-as-multisets.
//! Two matrices that are equal up to permutation must agree on all three,
//! so a mismatch in any one is a cheap non-equivalence certificate.

use std::fmt;

/// A multiset element: either an integer or a nested multiset (rows and
/// columns of a matrix are multisets of integers, collected into a multiset
/// of multisets).
///
/// The derived order puts all integers before all nested multisets and is
/// total, which is what canonicalization and reproducible output need.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Int(i64),
    Nested(Multiset),
}

/// A finite multiset in canonical form: distinct values in ascending order,
/// each with its multiplicity ≥ 1.
///
/// Equality, hashing, and ordering are derived from the canonical pair list,
/// so two multisets built from the same values in any order compare equal,
/// and the derived `Ord` is the lexicographic order on pair sequences.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset {
    pairs: Vec<(Value, u64)>,
}

impl Multiset {
    /// Collects values into canonical form. The input order is irrelevant.
    pub fn from_values(mut values: Vec<Value>) -> Self {
        values.sort();
        let mut pairs: Vec<(Value, u64)> = Vec::new();
        for v in values {
            match pairs.last_mut() {
                Some((last, count)) if *last == v => *count += 1,
                _ => pairs.push((v, 1)),
            }
        }
        Multiset { pairs }
    }

    /// Collects integers into a multiset.
    pub fn from_ints(values: impl IntoIterator<Item = i64>) -> Self {
        Self::from_values(values.into_iter().map(Value::Int).collect())
    }

    /// Canonical (value, multiplicity) pairs, values ascending.
    pub fn pairs(&self) -> &[(Value, u64)] {
        &self.pairs
    }

    /// Multiplicity of a value (0 if absent).
    pub fn multiplicity(&self, value: &Value) -> u64 {
        self.pairs
            .binary_search_by(|(v, _)| v.cmp(value))
            .map(|i| self.pairs[i].1)
            .unwrap_or(0)
    }

    /// Total number of elements, multiplicities included.
    pub fn total(&self) -> u64 {
        self.pairs.iter().map(|(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Nested(ms) => write!(f, "{ms}"),
        }
    }
}

/// Renders as `[v^m ...]` with `^m` omitted for multiplicity 1, e.g.
/// `[0^7 1^5 2^2 3 6]`; nested multisets render recursively.
impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (v, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, "]")
    }
}

/// Multiset of all n² entries of a square matrix given by an accessor.
pub fn entries_invariant(n: usize, at: impl Fn(usize, usize) -> i64) -> Multiset {
    let mut values = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            values.push(at(i, j));
        }
    }
    Multiset::from_ints(values)
}

/// Multiset of rows, each row itself taken as a multiset of its entries.
pub fn rows_invariant(n: usize, at: impl Fn(usize, usize) -> i64) -> Multiset {
    Multiset::from_values(
        (0..n)
            .map(|i| Value::Nested(Multiset::from_ints((0..n).map(|j| at(i, j)))))
            .collect(),
    )
}

/// Multiset of columns, each column itself taken as a multiset.
pub fn columns_invariant(n: usize, at: impl Fn(usize, usize) -> i64) -> Multiset {
    Multiset::from_values(
        (0..n)
            .map(|j| Value::Nested(Multiset::from_ints((0..n).map(|i| at(i, j)))))
            .collect(),
    )
}

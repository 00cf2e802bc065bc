//! Pairwise non-isomorphism verification across a whole catalog order.
//!
//! For every unordered pair of tables the cheapest separating invariant is
//! recorded: entry multisets separate almost everything, row/column
//! multisets handle the stragglers, and the exact decider is the last
//! resort. The run passes when every pair is certified non-isomorphic.

use rayon::prelude::*;

use crate::compare::{distinguish, exact_witness_search, Separator};
use crate::marks::MarksMatrix;
use crate::multiset::Multiset;

/// Verdict for one pair of tables, by index into the verified slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairVerdict {
    pub a: usize,
    pub b: usize,
    /// `None` means the tables are isomorphic — a verification failure.
    pub separator: Option<Separator>,
}

/// Outcome of verifying one catalog order.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    /// One verdict per unordered pair, sorted by (a, b).
    pub pairs: Vec<PairVerdict>,
    /// Pairs found isomorphic (empty iff the verification passed).
    pub failures: Vec<(usize, usize)>,
    /// Whether the exact decider was forced on every pair.
    pub exact_forced: bool,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Number of pairs whose cheapest separator was `s`.
    pub fn count(&self, s: Separator) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.separator == Some(s))
            .count()
    }
}

/// Separates every pair of tables. With `force_exact` the backtracking
/// decider additionally confirms each verdict, even where an invariant
/// already separated the pair.
pub fn verify_tables(tables: &[MarksMatrix], force_exact: bool) -> VerifyReport {
    let entry_invariants: Vec<Multiset> =
        tables.par_iter().map(|t| t.entries_invariant()).collect();

    let index_pairs: Vec<(usize, usize)> = (0..tables.len())
        .flat_map(|a| ((a + 1)..tables.len()).map(move |b| (a, b)))
        .collect();

    let mut pairs: Vec<PairVerdict> = index_pairs
        .par_iter()
        .map(|&(a, b)| {
            let separator = if entry_invariants[a] != entry_invariants[b] {
                Some(Separator::Entries)
            } else {
                // Full escalation: repeats the entries comparison (still
                // cheap) and climbs to rows, columns, or the decider.
                distinguish(&tables[a], &tables[b]).separator
            };
            let separator = if force_exact {
                // The decider must agree that no witness exists, whatever
                // the invariants said.
                match exact_witness_search(&tables[a], &tables[b]) {
                    Some(_) => None,
                    None => separator,
                }
            } else {
                separator
            };
            PairVerdict { a, b, separator }
        })
        .collect();

    pairs.sort_by_key(|p| (p.a, p.b));
    let failures: Vec<(usize, usize)> = pairs
        .iter()
        .filter(|p| p.separator.is_none())
        .map(|p| (p.a, p.b))
        .collect();
    VerifyReport {
        pairs,
        failures,
        exact_forced: force_exact,
    }
}

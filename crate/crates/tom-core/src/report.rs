//! Report construction and rendering: comparison tables for a pair of
//! groups, the per-group entry-multiset scan, and verification summaries.
//!
//! Orientation convention, recorded in every report header: row i of a
//! table of marks belongs to the i-th acting subgroup class, column j to
//! the coset space of the j-th class, classes ascending by subgroup order.
//! The `rows` axis therefore profiles acting subgroups; the `columns` axis
//! profiles coset spaces. (In the transposed convention used by some
//! computer algebra systems the two axis names swap meaning.)

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::compare::Separator;
use crate::group::GroupLabel;
use crate::marks::MarksMatrix;
use crate::multiset::{Multiset, Value};
use crate::verify::VerifyReport;

/// Which family of inner multisets a comparison table summarizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Rows,
    Columns,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axis::Rows => "rows",
            Axis::Columns => "columns",
        })
    }
}

impl FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rows" => Ok(Axis::Rows),
            "columns" => Ok(Axis::Columns),
            other => Err(format!("axis must be `rows` or `columns`, got {other:?}")),
        }
    }
}

/// Output encoding of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Latex,
    Tsv,
}

impl FromStr for ReportFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "latex" => Ok(ReportFormat::Latex),
            "tsv" => Ok(ReportFormat::Tsv),
            other => Err(format!("format must be `latex` or `tsv`, got {other:?}")),
        }
    }
}

/// One distinct row/column type: how often each palette value occurs inside
/// the type, and how many rows/columns of each table have the type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonRow {
    pub value_counts: Vec<u64>,
    pub count_in_a: u64,
    pub count_in_b: u64,
}

impl ComparisonRow {
    /// The marking rule: a line is highlighted iff the two tables disagree.
    pub fn differs(&self) -> bool {
        self.count_in_a != self.count_in_b
    }
}

/// A full comparison of one axis of two tables of marks.
#[derive(Debug, Clone)]
pub struct ComparisonTable {
    pub axis: Axis,
    pub label_a: String,
    pub label_b: String,
    /// Value palette: every nonzero entry value occurring in either table,
    /// ascending. Zero is omitted — within one table dimension the zero
    /// count is determined by the others, and these columns reproduce how
    /// the profiles are usually tabulated.
    pub values: Vec<i64>,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonTable {
    pub fn differing_lines(&self) -> usize {
        self.rows.iter().filter(|r| r.differs()).count()
    }
}

fn short_label(m: &MarksMatrix, fallback: &str) -> String {
    m.label()
        .map_or_else(|| fallback.to_string(), |l| format!("G{}", l.id))
}

/// Builds the comparison table of one axis of two tables: one line per
/// distinct inner multiset, sorted by total entry count descending, then by
/// the value-count vector.
pub fn comparison_table(a: &MarksMatrix, b: &MarksMatrix, axis: Axis) -> ComparisonTable {
    let (ms_a, ms_b) = match axis {
        Axis::Rows => (a.rows_invariant(), b.rows_invariant()),
        Axis::Columns => (a.columns_invariant(), b.columns_invariant()),
    };

    let mut values: Vec<i64> = Vec::new();
    for ms in [&ms_a, &ms_b] {
        for (v, _) in ms.pairs() {
            let Value::Nested(inner) = v else {
                unreachable!("rows/columns invariants nest multisets")
            };
            for (iv, _) in inner.pairs() {
                let Value::Int(x) = iv else {
                    unreachable!("inner multisets hold integers")
                };
                if *x != 0 && !values.contains(x) {
                    values.push(*x);
                }
            }
        }
    }
    values.sort_unstable();

    // Collect multiplicities per distinct type across both tables.
    let mut types: BTreeMap<&Multiset, (u64, u64)> = BTreeMap::new();
    for (v, m) in ms_a.pairs() {
        let Value::Nested(inner) = v else { unreachable!() };
        types.entry(inner).or_default().0 += m;
    }
    for (v, m) in ms_b.pairs() {
        let Value::Nested(inner) = v else { unreachable!() };
        types.entry(inner).or_default().1 += m;
    }

    let mut rows: Vec<(Vec<u64>, &Multiset, u64, u64)> = types
        .into_iter()
        .map(|(inner, (ca, cb))| {
            let counts: Vec<u64> = values
                .iter()
                .map(|&x| inner.multiplicity(&Value::Int(x)))
                .collect();
            (counts, inner, ca, cb)
        })
        .collect();
    // Total entries descending, then the value-count vector; the full inner
    // multiset breaks residual ties (types differing only in zero count).
    rows.sort_by(|x, y| {
        let tx: u64 = x.0.iter().sum();
        let ty: u64 = y.0.iter().sum();
        ty.cmp(&tx)
            .then_with(|| x.0.cmp(&y.0))
            .then_with(|| x.1.cmp(y.1))
    });

    ComparisonTable {
        axis,
        label_a: short_label(a, "A"),
        label_b: short_label(b, "B"),
        values,
        rows: rows
            .into_iter()
            .map(|(value_counts, _, count_in_a, count_in_b)| ComparisonRow {
                value_counts,
                count_in_a,
                count_in_b,
            })
            .collect(),
    }
}

/// The orientation note included in every report header.
pub const ORIENTATION_NOTE: &str =
    "orientation: row i = acting subgroup class i, column j = coset space class j, \
     classes ascending by subgroup order; axis `rows` profiles acting subgroups, \
     axis `columns` profiles coset spaces";

/// Renders a comparison table. TSV data lines hold the value counts, the
/// two table counts, and a trailing `*` marker on differing lines; LaTeX
/// output is a longtable with the differing counts underlined.
pub fn render_comparison(table: &ComparisonTable, format: ReportFormat) -> String {
    match format {
        ReportFormat::Tsv => {
            let mut out = String::new();
            out.push_str(&format!(
                "# compare {} {} axis={}\n# {}\n",
                table.label_a, table.label_b, table.axis, ORIENTATION_NOTE
            ));
            out.push_str(&format!("# values: {}\n", join(&table.values, " ")));
            out.push_str(&format!(
                "# line: count per value, then occurrences in {} and in {}, `*` iff they differ\n",
                table.label_a, table.label_b
            ));
            for row in &table.rows {
                out.push_str(&join(&row.value_counts, " "));
                out.push_str(&format!("\t{}\t{}", row.count_in_a, row.count_in_b));
                if row.differs() {
                    out.push_str("\t*");
                }
                out.push('\n');
            }
            out
        }
        ReportFormat::Latex => {
            let mut out = String::new();
            out.push_str(&format!("% {}\n", ORIENTATION_NOTE));
            let spec = format!("{}||c|c", vec!["c"; table.values.len()].join("|"));
            out.push_str(&format!("\\begin{{longtable}}{{{spec}}}\n"));
            let headers: Vec<String> = table
                .values
                .iter()
                .map(|v| format!("\\#{v}"))
                .chain([
                    format!(
                        "{} in ${}$",
                        axis_word(table.axis),
                        table.label_a
                    ),
                    format!(
                        "{} in ${}$",
                        axis_word(table.axis),
                        table.label_b
                    ),
                ])
                .collect();
            out.push_str(&format!("\t{}\\\\\n", headers.join(" & ")));
            for row in &table.rows {
                let mut cells: Vec<String> =
                    row.value_counts.iter().map(|c| c.to_string()).collect();
                if row.differs() {
                    cells.push(format!("\\underline{{{}}}", row.count_in_a));
                    cells.push(format!("\\underline{{{}}}", row.count_in_b));
                } else {
                    cells.push(row.count_in_a.to_string());
                    cells.push(row.count_in_b.to_string());
                }
                out.push_str(&format!("\t{}\\\\\n", cells.join(" & ")));
            }
            out.push_str("\\end{longtable}\n");
            out
        }
    }
}

fn axis_word(axis: Axis) -> &'static str {
    match axis {
        Axis::Rows => "Rows",
        Axis::Columns => "Columns",
    }
}

fn join<T: fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

/// Renders the scan report: every group's entry multiset, then the pairs
/// whose multisets coincide.
pub fn render_scan(
    order: usize,
    labels: &[GroupLabel],
    invariants: &[Multiset],
    equal_pairs: &[(usize, usize)],
    format: ReportFormat,
) -> String {
    debug_assert_eq!(labels.len(), invariants.len());
    let mut out = String::new();
    match format {
        ReportFormat::Tsv => {
            out.push_str(&format!(
                "# scan order={order} groups={}\n# {}\n",
                labels.len(),
                ORIENTATION_NOTE
            ));
            for (label, ms) in labels.iter().zip(invariants) {
                out.push_str(&format!("{}\t{}\n", label.id, ms));
            }
            out.push_str(&format!("# equal-entry pairs: {}\n", equal_pairs.len()));
            for &(i, j) in equal_pairs {
                out.push_str(&format!("pair\t{}\t{}\n", labels[i].id, labels[j].id));
            }
        }
        ReportFormat::Latex => {
            out.push_str(&format!("% scan order={order} groups={}\n", labels.len()));
            out.push_str("\\begin{longtable}{c|l}\n");
            out.push_str("\tId & Multiset of entries\\\\\n\t\\hline\n");
            for (label, ms) in labels.iter().zip(invariants) {
                out.push_str(&format!("\t{} & {}\\\\\n", label.id, latex_multiset(ms)));
            }
            out.push_str("\\end{longtable}\n");
            out.push_str(&format!("% equal-entry pairs: {}\n", equal_pairs.len()));
            for &(i, j) in equal_pairs {
                out.push_str(&format!("% pair {} {}\n", labels[i].id, labels[j].id));
            }
        }
    }
    out
}

fn latex_multiset(ms: &Multiset) -> String {
    let body: Vec<String> = ms
        .pairs()
        .iter()
        .map(|(v, m)| {
            let value = match v {
                Value::Int(x) => x.to_string(),
                Value::Nested(inner) => latex_multiset(inner),
            };
            if *m > 1 {
                format!("{value}^{{{m}}}")
            } else {
                value
            }
        })
        .collect();
    format!("$[{}]$", body.join("\\ "))
}

/// Renders the verification summary: one line per pair with the separator
/// that certified it, then totals and the verdict.
pub fn render_verify(order: usize, labels: &[GroupLabel], report: &VerifyReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# verify order={order} groups={} pairs={}\n# {}\n",
        labels.len(),
        report.pairs.len(),
        ORIENTATION_NOTE
    ));
    if report.exact_forced {
        out.push_str("# exact decider forced on every pair\n");
    }
    for pair in &report.pairs {
        let status = match pair.separator {
            Some(s) => s.to_string(),
            None => "ISOMORPHIC".to_string(),
        };
        out.push_str(&format!(
            "{}\t{}\t{}\n",
            labels[pair.a].id, labels[pair.b].id, status
        ));
    }
    out.push_str(&format!(
        "# separators: entries={} rows={} columns={} exact={} isomorphic={}\n",
        report.count(Separator::Entries),
        report.count(Separator::Rows),
        report.count(Separator::Columns),
        report.count(Separator::Exact),
        report.failures.len(),
    ));
    if report.passed() {
        out.push_str("PASS\n");
    } else {
        let named: Vec<String> = report
            .failures
            .iter()
            .map(|&(a, b)| format!("({}, {})", labels[a].id, labels[b].id))
            .collect();
        out.push_str(&format!("FAIL isomorphic pairs: {}\n", named.join(" ")));
    }
    out
}

/// Renders the invariant summary of a single table.
pub fn render_invariants(m: &MarksMatrix) -> String {
    let label = m
        .label()
        .map_or_else(|| "-".to_string(), |l| l.to_string());
    let mut out = String::new();
    out.push_str(&format!("# invariants group={label}\n# {ORIENTATION_NOTE}\n"));
    out.push_str(&format!("group_order\t{}\n", m.group_order()));
    out.push_str(&format!("classes\t{}\n", m.n()));
    out.push_str(&format!("class_orders\t{}\n", m.class_order_profile()));
    out.push_str(&format!("entries\t{}\n", m.entries_invariant()));
    out.push_str(&format!("rows\t{}\n", m.rows_invariant()));
    out.push_str(&format!("columns\t{}\n", m.columns_invariant()));
    out
}

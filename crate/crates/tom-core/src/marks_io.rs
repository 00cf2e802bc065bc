//! Plain-text serialization of computed tables of marks, used as the
//! on-disk cache so expensive tables are computed once.
//!
//! ```text
//! tom 6 2 4
//! orders 1 2 3 6
//! row 0:6 1:3 2:2 3:1
//! row 1:1 3:1
//! row 2:2 3:1
//! row 3:1
//! ```
//!
//! Header: `tom <group_order> <catalog_id|-> <n>`, then the class orders,
//! then one `row` line per matrix row listing its nonzero entries as
//! `<column>:<value>` pairs with strictly increasing 0-based columns.
//! Reading and writing round-trip exactly.

use crate::error::{Error, Result};
use crate::group::GroupLabel;
use crate::marks::MarksMatrix;

/// Renders a table to the text format.
pub fn write_marks(m: &MarksMatrix) -> String {
    let n = m.n();
    let id = m
        .label()
        .map_or_else(|| "-".to_string(), |l| l.id.to_string());
    let mut out = String::new();
    out.push_str(&format!("tom {} {} {}\n", m.group_order(), id, n));
    out.push_str("orders");
    for &o in m.class_orders() {
        out.push_str(&format!(" {o}"));
    }
    out.push('\n');
    for i in 0..n {
        out.push_str("row");
        for (j, &v) in m.row(i).iter().enumerate() {
            if v != 0 {
                out.push_str(&format!(" {j}:{v}"));
            }
        }
        out.push('\n');
    }
    out
}

/// Parses the text format back into a table, re-checking the structural
/// invariants of a table of marks.
pub fn read_marks(text: &str) -> Result<MarksMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let parse = |token: &str, line: usize, what: &str| -> Result<usize> {
        token.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("{what} must be an integer, got {token:?}"),
        })
    };

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        reason: "empty file".into(),
    })?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "tom" {
        return Err(Error::Parse {
            line,
            reason: "header must be `tom <group_order> <id|-> <n>`".into(),
        });
    }
    let group_order = parse(tokens[1], line, "group order")?;
    let label = if tokens[2] == "-" {
        None
    } else {
        Some(GroupLabel {
            order: group_order,
            id: parse(tokens[2], line, "catalog id")?,
        })
    };
    let n = parse(tokens[3], line, "dimension")?;

    let (line, orders_line) = lines.next().ok_or(Error::Parse {
        line: line + 1,
        reason: "missing `orders` line".into(),
    })?;
    let mut tokens = orders_line.split_whitespace();
    if tokens.next() != Some("orders") {
        return Err(Error::Parse {
            line,
            reason: "expected `orders` line after the header".into(),
        });
    }
    let mut class_orders = Vec::with_capacity(n);
    for token in tokens {
        class_orders.push(parse(token, line, "class order")?);
    }
    if class_orders.len() != n {
        return Err(Error::Parse {
            line,
            reason: format!("expected {n} class orders, got {}", class_orders.len()),
        });
    }

    let mut entries = vec![0u64; n * n];
    let mut rows_read = 0;
    let mut last_line = line;
    for (line, row_line) in &mut lines {
        last_line = line;
        let mut tokens = row_line.split_whitespace();
        if tokens.next() != Some("row") {
            return Err(Error::Parse {
                line,
                reason: "expected a `row` line".into(),
            });
        }
        if rows_read == n {
            return Err(Error::Parse {
                line,
                reason: format!("more than {n} rows"),
            });
        }
        let mut previous: Option<usize> = None;
        for pair in tokens {
            let (j_token, v_token) = pair.split_once(':').ok_or_else(|| Error::Parse {
                line,
                reason: format!("entry {pair:?} is not <column>:<value>"),
            })?;
            let j = parse(j_token, line, "column index")?;
            let v = parse(v_token, line, "entry value")? as u64;
            if j >= n {
                return Err(Error::Parse {
                    line,
                    reason: format!("column {j} out of range for dimension {n}"),
                });
            }
            if previous.is_some_and(|p| p >= j) {
                return Err(Error::Parse {
                    line,
                    reason: "columns must be strictly increasing".into(),
                });
            }
            if v == 0 {
                return Err(Error::Parse {
                    line,
                    reason: "explicit zero entries are not allowed".into(),
                });
            }
            previous = Some(j);
            entries[rows_read * n + j] = v;
        }
        rows_read += 1;
    }
    if rows_read != n {
        return Err(Error::Parse {
            line: last_line,
            reason: format!("expected {n} rows, got {rows_read}"),
        });
    }

    MarksMatrix::from_parts(group_order, class_orders, entries, label)
}

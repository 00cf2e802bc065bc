//! The group catalog file format.
//!
//! A catalog is a plain-text list of groups, each given by permutation
//! generators on 0-based points:
//!
//! ```text
//! # comment lines and blank lines are skipped
//! group 6 1
//! gen 1 2 3 4 5 0
//! end
//! group 6 2
//! gen 1 2 0
//! gen 1 0 2
//! end
//! ```
//!
//! `group <order> <id>` opens a record, each `gen` line lists the images of
//! the points 0, 1, … under one generator, and `end` closes the record.
//! Parsing validates everything eagerly, including that the generators
//! really generate a group of the declared order.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::group::{build_group_bounded, close_generators_bounded, FiniteGroup, GroupLabel};
use crate::perm::Permutation;

/// One catalog entry: a group given by generators, keyed by (order, id).
#[derive(Debug, Clone)]
pub struct GroupRecord {
    pub order: usize,
    pub catalog_id: usize,
    pub generators: Vec<Permutation>,
}

impl GroupRecord {
    pub fn label(&self) -> GroupLabel {
        GroupLabel {
            order: self.order,
            id: self.catalog_id,
        }
    }

    /// Materializes the group. The declared order is used as the closure
    /// bound, so this cannot run away even on a hand-edited file.
    pub fn build(&self) -> Result<FiniteGroup> {
        let group = build_group_bounded(&self.generators, self.order)?;
        debug_assert_eq!(group.order(), self.order);
        Ok(group.with_label(self.label()))
    }
}

/// Parses a catalog file, validating structure and group orders.
/// Records are returned sorted by (order, id).
pub fn parse_catalog(text: &str) -> Result<Vec<GroupRecord>> {
    let mut records: Vec<GroupRecord> = Vec::new();
    let mut current: Option<(usize, GroupRecord)> = None; // (opening line, record)

    let parse_int = |token: &str, line: usize, what: &str| -> Result<usize> {
        token.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("{what} must be a non-negative integer, got {token:?}"),
        })
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let keyword = tokens.next().expect("non-empty line has a first token");
        let rest: Vec<&str> = tokens.collect();
        match keyword {
            "group" => {
                if current.is_some() {
                    return Err(Error::Parse {
                        line,
                        reason: "previous record is missing its `end`".into(),
                    });
                }
                if rest.len() != 2 {
                    return Err(Error::Parse {
                        line,
                        reason: "`group` takes exactly an order and an id".into(),
                    });
                }
                let order = parse_int(rest[0], line, "group order")?;
                let catalog_id = parse_int(rest[1], line, "group id")?;
                if order == 0 || catalog_id == 0 {
                    return Err(Error::Parse {
                        line,
                        reason: "group order and id must be at least 1".into(),
                    });
                }
                current = Some((
                    line,
                    GroupRecord {
                        order,
                        catalog_id,
                        generators: Vec::new(),
                    },
                ));
            }
            "gen" => {
                let Some((_, record)) = current.as_mut() else {
                    return Err(Error::Parse {
                        line,
                        reason: "`gen` outside of a group record".into(),
                    });
                };
                if rest.is_empty() {
                    return Err(Error::Parse {
                        line,
                        reason: "`gen` line has no images".into(),
                    });
                }
                let mut images = Vec::with_capacity(rest.len());
                for token in &rest {
                    images.push(parse_int(token, line, "point image")? as u32);
                }
                let perm = Permutation::from_images(images).map_err(|e| Error::Parse {
                    line,
                    reason: e.to_string(),
                })?;
                if let Some(first) = record.generators.first() {
                    if first.degree() != perm.degree() {
                        return Err(Error::Parse {
                            line,
                            reason: format!(
                                "generator degree {} does not match the record's degree {}",
                                perm.degree(),
                                first.degree()
                            ),
                        });
                    }
                }
                record.generators.push(perm);
            }
            "end" => {
                let Some((opened_at, record)) = current.take() else {
                    return Err(Error::Parse {
                        line,
                        reason: "`end` without an open group record".into(),
                    });
                };
                if record.generators.is_empty() {
                    return Err(Error::Parse {
                        line: opened_at,
                        reason: "group record has no generators".into(),
                    });
                }
                validate_record(&record)?;
                if records
                    .iter()
                    .any(|r| r.order == record.order && r.catalog_id == record.catalog_id)
                {
                    return Err(Error::BadCatalogRecord {
                        order: record.order,
                        id: record.catalog_id,
                        reason: "duplicate (order, id)".into(),
                    });
                }
                records.push(record);
            }
            other => {
                return Err(Error::Parse {
                    line,
                    reason: format!("unknown keyword {other:?}"),
                });
            }
        }
    }
    if let Some((opened_at, _)) = current {
        return Err(Error::Parse {
            line: opened_at,
            reason: "group record never closed with `end`".into(),
        });
    }
    records.sort_by_key(|r| (r.order, r.catalog_id));
    Ok(records)
}

/// The generators must generate exactly as many elements as declared.
fn validate_record(record: &GroupRecord) -> Result<()> {
    let elements =
        close_generators_bounded(&record.generators, record.order).map_err(|e| match e {
            Error::GroupTooLarge { .. } => Error::BadCatalogRecord {
                order: record.order,
                id: record.catalog_id,
                reason: "generators generate more elements than declared".into(),
            },
            other => other,
        })?;
    if elements.len() != record.order {
        return Err(Error::BadCatalogRecord {
            order: record.order,
            id: record.catalog_id,
            reason: format!(
                "generators generate {} elements, not {}",
                elements.len(),
                record.order
            ),
        });
    }
    Ok(())
}

/// Conventional file name for all groups of one order: `order<N>.cat`.
pub fn catalog_file_name(order: usize) -> String {
    format!("order{order}.cat")
}

/// Path of the catalog file for one order inside a catalog directory.
pub fn catalog_path(dir: &Path, order: usize) -> PathBuf {
    dir.join(catalog_file_name(order))
}

/// Loads and parses the catalog file for one order.
pub fn load_catalog_order(dir: &Path, order: usize) -> Result<Vec<GroupRecord>> {
    let path = catalog_path(dir, order);
    let text = std::fs::read_to_string(&path)?;
    parse_catalog(&text)
}

/// Finds a record by (order, id).
pub fn find_record(records: &[GroupRecord], order: usize, id: usize) -> Result<&GroupRecord> {
    records
        .iter()
        .find(|r| r.order == order && r.catalog_id == id)
        .ok_or(Error::GroupNotFound { order, id })
}

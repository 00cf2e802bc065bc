//! `tom` — compute and compare tables of marks of finite groups.
//!
//! Groups come from a catalog of permutation generators (see the bundled
//! `data/catalog/`); computed tables are cached as text files so repeated
//! invocations are cheap. Exit codes: 0 success/PASS, 1 mathematical
//! failure (a verification that found an isomorphic pair), 2 usage or
//! input error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tom_core::{
    comparison_table, find_equal_entry_pairs, find_record, load_catalog_order, read_marks,
    render_comparison, render_invariants, render_scan, render_verify, table_of_marks,
    verify_tables, write_marks, Axis, Error, GroupLabel, GroupRecord, MarksMatrix, Multiset,
    ReportFormat,
};

#[derive(Parser)]
#[command(name = "tom", version, about = "Tables of marks: computation, comparison, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Directory holding the group catalog (`order<N>.cat` files).
    #[arg(long, default_value = "data/catalog")]
    catalog: PathBuf,
    /// Directory for cached tables of marks.
    #[arg(long, default_value = "./tomcache")]
    cache: PathBuf,
    /// Worker thread cap (defaults to all cores). Results are identical
    /// for any cap >= 1.
    #[arg(long)]
    threads: Option<usize>,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one table of marks and print it in the marks file format.
    Compute {
        #[command(flatten)]
        common: CommonArgs,
        /// Group order.
        #[arg(long)]
        order: usize,
        /// Catalog id within the order.
        #[arg(long)]
        id: usize,
    },
    /// Compute every table of an order and report entry-multiset collisions.
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "tsv")]
        format: ReportFormat,
    },
    /// Compare the row or column multisets of two tables of one order.
    Compare {
        #[command(flatten)]
        common: CommonArgs,
        /// Catalog id of the first group.
        id_a: usize,
        /// Catalog id of the second group.
        id_b: usize,
        #[arg(long)]
        order: usize,
        /// Which axis to profile: `rows` (acting subgroups) or `columns`
        /// (coset spaces).
        #[arg(long)]
        axis: Axis,
        #[arg(long, default_value = "tsv")]
        format: ReportFormat,
    },
    /// Certify that all tables of an order are pairwise non-isomorphic.
    Verify {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        order: usize,
        /// Run the exact decider on every pair even when an invariant
        /// already separates it.
        #[arg(long)]
        exact: bool,
    },
    /// Print the invariant multisets of one table.
    Invariants {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        order: usize,
        #[arg(long)]
        id: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("tom: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Compute { common, order, id } => {
            configure_threads(common.threads);
            let tom = load_or_compute(&common.catalog, &common.cache, order, id)?;
            emit(&common.out, &write_marks(&tom))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            common,
            order,
            format,
        } => {
            configure_threads(common.threads);
            let (labels, tables) = load_order(&common.catalog, &common.cache, order)?;
            let invariants: Vec<Multiset> =
                tables.iter().map(MarksMatrix::entries_invariant).collect();
            let pairs = find_equal_entry_pairs(&tables);
            emit(
                &common.out,
                &render_scan(order, &labels, &invariants, &pairs, format),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Compare {
            common,
            id_a,
            id_b,
            order,
            axis,
            format,
        } => {
            configure_threads(common.threads);
            let a = load_or_compute(&common.catalog, &common.cache, order, id_a)?;
            let b = load_or_compute(&common.catalog, &common.cache, order, id_b)?;
            let table = comparison_table(&a, &b, axis);
            emit(&common.out, &render_comparison(&table, format))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            common,
            order,
            exact,
        } => {
            configure_threads(common.threads);
            let (labels, tables) = load_order(&common.catalog, &common.cache, order)?;
            let report = verify_tables(&tables, exact);
            emit(&common.out, &render_verify(order, &labels, &report))?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Invariants { common, order, id } => {
            configure_threads(common.threads);
            let tom = load_or_compute(&common.catalog, &common.cache, order, id)?;
            emit(&common.out, &render_invariants(&tom))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn configure_threads(threads: Option<usize>) {
    if let Some(n) = threads {
        // Ignore the error: the global pool can only be set once, which is
        // fine — every invocation configures it before any parallel work.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

fn emit(out: &Option<PathBuf>, report: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, report).map_err(Error::from),
        None => {
            print!("{report}");
            Ok(())
        }
    }
}

fn cache_file(cache: &Path, order: usize, id: usize) -> PathBuf {
    cache.join(format!("tom_{order}_{id}.tom"))
}

/// Returns the cached table for a catalog record if a valid one exists,
/// else computes it and caches it. A stale or corrupt cache entry is
/// recomputed and overwritten.
fn table_for_record(cache: &Path, record: &GroupRecord) -> Result<MarksMatrix, Error> {
    let label = record.label();
    let path = cache_file(cache, label.order, label.id);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(tom) = read_marks(&text) {
            if tom.label() == Some(label) && tom.group_order() == label.order {
                return Ok(tom);
            }
        }
    }
    let tom = table_of_marks(&record.build()?)?.with_label(label);
    fs::create_dir_all(cache)?;
    fs::write(&path, write_marks(&tom))?;
    Ok(tom)
}

fn load_or_compute(
    catalog: &Path,
    cache: &Path,
    order: usize,
    id: usize,
) -> Result<MarksMatrix, Error> {
    let records = load_catalog_order(catalog, order)?;
    table_for_record(cache, find_record(&records, order, id)?)
}

/// Loads (or computes) the tables of every group of an order, in catalog
/// order.
fn load_order(
    catalog: &Path,
    cache: &Path,
    order: usize,
) -> Result<(Vec<GroupLabel>, Vec<MarksMatrix>), Error> {
    use rayon::prelude::*;
    let records = load_catalog_order(catalog, order)?;
    let labels: Vec<GroupLabel> = records.iter().map(|r| r.label()).collect();
    let tables: Result<Vec<MarksMatrix>, Error> = records
        .par_iter()
        .map(|r| table_for_record(cache, r))
        .collect();
    Ok((labels, tables?))
}

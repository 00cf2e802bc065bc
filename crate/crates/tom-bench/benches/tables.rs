//! Benchmarks of the three pipeline stages on real catalog groups:
//! subgroup-lattice construction, table-of-marks assembly, and the
//! isomorphism decider.

use std::path::{Path, PathBuf};

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use tom_core::{
    all_subgroups, classify_subgroups, conjugacy_classes_of_subgroups, distinguish,
    is_isomorphic, load_catalog_order, table_of_marks_for_classes, FiniteGroup, MarksMatrix,
};

fn catalog_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/catalog")
}

fn group(order: usize, id: usize) -> FiniteGroup {
    let records = load_catalog_order(&catalog_dir(), order).unwrap();
    records
        .iter()
        .find(|r| r.catalog_id == id)
        .unwrap()
        .build()
        .unwrap()
}

fn table(order: usize, id: usize) -> MarksMatrix {
    let g = group(order, id);
    let classes = conjugacy_classes_of_subgroups(&g).unwrap();
    table_of_marks_for_classes(&g, &classes).unwrap()
}

/// Scrambles a table by a random class permutation that respects the
/// equal-order blocks, producing an isomorphic table.
fn scramble(m: &MarksMatrix, rng: &mut ChaCha8Rng) -> MarksMatrix {
    let n = m.n();
    let orders = m.class_orders();
    let mut pi: Vec<usize> = (0..n).collect();
    let mut start = 0;
    while start < n {
        let mut end = start;
        while end < n && orders[end] == orders[start] {
            end += 1;
        }
        pi[start..end].shuffle(rng);
        start = end;
    }
    let mut new_orders = vec![0usize; n];
    let mut entries = vec![0u64; n * n];
    for i in 0..n {
        new_orders[pi[i]] = orders[i];
        for j in 0..n {
            entries[pi[i] * n + pi[j]] = m.entry(i, j);
        }
    }
    MarksMatrix::from_parts(m.group_order(), new_orders, entries, None).unwrap()
}

fn bench_lattice(c: &mut Criterion) {
    let modular16 = group(16, 6);
    c.bench_function("subgroups: order 16", |b| {
        b.iter(|| all_subgroups(&modular16).unwrap())
    });

    let g64 = group(64, 15);
    c.bench_function("subgroup classes: order 64, 27 classes", |b| {
        b.iter(|| conjugacy_classes_of_subgroups(&g64).unwrap())
    });

    let big = group(64, 236);
    c.bench_function("subgroup classes: order 64, 118 classes", |b| {
        b.iter(|| conjugacy_classes_of_subgroups(&big).unwrap())
    });
}

fn bench_marks(c: &mut Criterion) {
    let g = group(64, 15);
    let subgroups = all_subgroups(&g).unwrap();
    let classes = classify_subgroups(&g, &subgroups);
    c.bench_function("table of marks: order 64, 27 classes", |b| {
        b.iter(|| table_of_marks_for_classes(&g, &classes).unwrap())
    });

    let big = group(64, 236);
    let big_classes = conjugacy_classes_of_subgroups(&big).unwrap();
    c.bench_function("table of marks: order 64, 118 classes", |b| {
        b.iter(|| table_of_marks_for_classes(&big, &big_classes).unwrap())
    });
}

fn bench_compare(c: &mut Criterion) {
    let t15 = table(64, 15);
    let t16 = table(64, 16);
    c.bench_function("distinguish: entry-equal pair", |b| {
        b.iter(|| distinguish(&t15, &t16))
    });

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    c.bench_function("isomorphism search: scrambled 27-class table", |b| {
        b.iter_batched(
            || scramble(&t15, &mut rng),
            |scrambled| is_isomorphic(&t15, &scrambled),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, bench_lattice, bench_marks, bench_compare);
criterion_main!(benches);

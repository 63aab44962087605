//! Criterion comparison of the rayon-backed entry points against their
//! sequential twins: the representation enumerator on a large cell and a
//! verification sweep fanned out per cell versus run in a plain loop.
//!
//! Built with `--no-default-features` the library paths are themselves
//! sequential and the two sides of each group coincide.

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::prelude::*;

use tcores::map47::verify_two_to_one;
use tcores::report::ReportRecord;
use tcores::squares::{enumerate_reps, enumerate_reps_sequential};

fn rep_residues(t: i64) -> Vec<Vec<i64>> {
    (0..t)
        .map(|j| {
            let mut v = vec![j, (-j).rem_euclid(t)];
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect()
}

fn bench_enumerate_reps(c: &mut Criterion) {
    // The length-7 solution set with residues +-j at a mid-size target.
    let t = 7i64;
    let n = 120i64;
    let target = 2 * t * n + t * (t - 1) * (2 * t - 1) / 6;
    let residues = rep_residues(t);
    let sum = Some(t * (t - 1) / 2);

    let mut group = c.benchmark_group("enumerate_reps");
    group.sample_size(10);
    group.bench_function("dispatched", |b| {
        b.iter(|| enumerate_reps(target, t, &residues, sum))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_reps_sequential(target, t, &residues, sum))
    });
    group.finish();
}

fn bench_two_to_one_sweep(c: &mut Criterion) {
    let cells: Vec<u64> = (0..=10).collect();

    let mut group = c.benchmark_group("map47_sweep");
    group.sample_size(10);
    group.bench_function("rayon_cells", |b| {
        b.iter(|| {
            cells
                .par_iter()
                .map(|&n| verify_two_to_one(n))
                .collect::<Vec<ReportRecord>>()
        })
    });
    group.bench_function("sequential_cells", |b| {
        b.iter(|| {
            cells
                .iter()
                .map(|&n| verify_two_to_one(n))
                .collect::<Vec<ReportRecord>>()
        })
    });
    group.finish();
}

criterion_group!(benches, bench_enumerate_reps, bench_two_to_one_sweep);
criterion_main!(benches);

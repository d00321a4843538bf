use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use symrep::search::enum_graphs;
use symrep::symmetry::automorphisms;
use symrep::{enumerate_footprints, extremality_report, min_hitting_set, SymmetryOptions};
use symrep_bench::{hosts, pairs};

fn bench_automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("automorphisms");
    let opts = SymmetryOptions::default();
    for (name, g) in hosts() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| automorphisms(black_box(g), &opts).unwrap().order())
        });
    }
    group.finish();
}

fn bench_canonical_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in hosts() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| black_box(g).canonical_form())
        });
    }
    group.finish();
}

fn bench_footprints(c: &mut Criterion) {
    let mut group = c.benchmark_group("footprints");
    for (name, k, g) in pairs() {
        group.bench_function(name, |b| b.iter(|| enumerate_footprints(black_box(&k), &g).unwrap().len()));
    }
    group.finish();
}

fn bench_hitting_sets(c: &mut Criterion) {
    let mut group = c.benchmark_group("hitting_set");
    for (name, k, g) in pairs() {
        let family = enumerate_footprints(&k, &g).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| min_hitting_set(black_box(&family), g.order()).unwrap().value)
        });
    }
    group.finish();

    let mut group = c.benchmark_group("extremality_report");
    for (name, k, g) in pairs() {
        group.bench_function(name, |b| b.iter(|| extremality_report(black_box(&k), &g).unwrap().is_extremal));
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enum_graphs");
    group.sample_size(10);
    group.bench_function("all n=7", |b| b.iter(|| enum_graphs(7, false, None).unwrap().len()));
    group.bench_function("connected cubic n=10", |b| b.iter(|| enum_graphs(10, true, Some(3)).unwrap().len()));
    group.bench_function("connected quartic n=10", |b| b.iter(|| enum_graphs(10, true, Some(4)).unwrap().len()));
    group.finish();
}

criterion_group!(
    benches,
    bench_automorphisms,
    bench_canonical_form,
    bench_footprints,
    bench_hitting_sets,
    bench_enumeration
);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use pivotkit::{canonical_form, find_low_rank_separation, Graph};
use pivotkit_bench::{dense_graph, dense_matrix, dense_matroid};
use std::hint::black_box;

fn gf2_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("gf2_rank");
    for n in [64, 256, 1024] {
        let m = dense_matrix(n, n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m).rank()));
    }
    group.finish();
}

fn separation_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("least_separation");
    for n in [10, 14, 18] {
        let g = dense_graph(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| find_low_rank_separation(black_box(g), 4).unwrap())
        });
    }
    group.finish();
}

fn circuits(c: &mut Criterion) {
    let mut group = c.benchmark_group("circuits");
    for (r, k) in [(4, 4), (6, 6), (8, 8)] {
        let m = dense_matroid(r, k, 3);
        group.bench_with_input(BenchmarkId::from_parameter(r + k), &m, |b, m| b.iter(|| black_box(m).circuits().unwrap()));
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for (name, g) in [("cycle12", Graph::cycle(12)), ("random12", dense_graph(12, 4))] {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| canonical_form(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, gf2_rank, separation_search, circuits, canonical);
criterion_main!(benches);

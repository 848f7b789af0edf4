use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tourfvs_core::enumerate::{count_direct, count_minimal_fvs, min_fvs};
use tourfvs_core::generators::{pq, random, repeated_sum, st7};
use tourfvs_core::oracle::brute_force_maximal_acyclic;
use tourfvs_core::{enumerate_maximal_acyclic, EnumOptions, MaximalAcyclicSets};

fn st7_sums(c: &mut Criterion) {
    let mut g = c.benchmark_group("st7_sums");
    for k in [1usize, 2] {
        let t = repeated_sum(&st7(), k);
        g.bench_with_input(BenchmarkId::new("direct", k), &t, |b, t| b.iter(|| count_direct(black_box(t))));
    }
    for k in [2usize, 6] {
        let t = repeated_sum(&st7(), k);
        g.bench_with_input(BenchmarkId::new("factorized", k), &t, |b, t| b.iter(|| count_minimal_fvs(black_box(t))));
    }
    g.finish();
}

fn random_enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("random_enumeration");
    for n in [12usize, 16, 20] {
        let t = random(n, 42);
        g.bench_with_input(BenchmarkId::new("default", n), &t, |b, t| {
            b.iter(|| enumerate_maximal_acyclic(black_box(t)).count())
        });
        let pruned = EnumOptions { prune_positions: true, ..Default::default() };
        g.bench_with_input(BenchmarkId::new("pruned", n), &t, |b, t| {
            b.iter(|| MaximalAcyclicSets::new(black_box(t), pruned).count())
        });
    }
    g.finish();
}

fn minimum_fvs(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_fvs");
    let pq9 = pq(&st7());
    g.bench_function("pq(st7)", |b| b.iter(|| min_fvs(black_box(&pq9))));
    let r = random(18, 7);
    g.bench_function("random(18,7)", |b| b.iter(|| min_fvs(black_box(&r))));
    g.finish();
}

fn tree_vs_brute_force(c: &mut Criterion) {
    let mut g = c.benchmark_group("tree_vs_brute_force");
    for n in [10usize, 14] {
        let t = random(n, 3);
        g.bench_with_input(BenchmarkId::new("tree", n), &t, |b, t| b.iter(|| enumerate_maximal_acyclic(black_box(t)).count()));
        g.bench_with_input(BenchmarkId::new("brute_force", n), &t, |b, t| {
            b.iter(|| brute_force_maximal_acyclic(black_box(t)).unwrap().len())
        });
    }
    g.finish();
}

criterion_group!(benches, st7_sums, random_enumeration, minimum_fvs, tree_vs_brute_force);
criterion_main!(benches);

use std::hint::black_box;

use cliquefactor::constructions::{gnp, hs_extremal};
use cliquefactor::oracles::{has_kr_factor, independence_number, max_fractional_tiling, max_kr_tiling};
use cliquefactor::rational::ratio;
use cliquefactor::{Guards, Seed};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn exact(c: &mut Criterion) {
    let gd = Guards::default();
    let mut group = c.benchmark_group("exact");
    for n in [16, 24, 32] {
        let g = gnp(n, ratio(4, 5), Seed(0)).unwrap();
        group.bench_with_input(BenchmarkId::new("alpha", n), &g, |b, g| b.iter(|| independence_number(black_box(g), &gd).unwrap()));
        group.bench_with_input(BenchmarkId::new("max_k4_tiling", n), &g, |b, g| b.iter(|| max_kr_tiling(black_box(g), 4, &gd).unwrap()));
        group.bench_with_input(BenchmarkId::new("k4_factor", n), &g, |b, g| b.iter(|| has_kr_factor(black_box(g), 4, &gd).unwrap()));
    }
    let hs = hs_extremal(16, 4).unwrap();
    group.bench_function("k4_factor_hs16", |b| b.iter(|| has_kr_factor(black_box(&hs), 4, &gd).unwrap()));
    group.finish();
}

fn lp(c: &mut Criterion) {
    let gd = Guards::default();
    let mut group = c.benchmark_group("fractional_lp");
    group.sample_size(10);
    for n in [8, 10, 12] {
        let g = gnp(n, ratio(7, 10), Seed(0)).unwrap();
        group.bench_with_input(BenchmarkId::new("k3", n), &g, |b, g| b.iter(|| max_fractional_tiling(black_box(g), 3, &gd).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, exact, lp);
criterion_main!(benches);

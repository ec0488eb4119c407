use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use jvass::bracket::{bracket_fast, bracket_oracle};
use jvass::series::{expand_exp, log_moments, moments};
use jvass::table::load_builtin;

fn brackets(c: &mut Criterion) {
    let table = load_builtin().unwrap();
    let mut group = c.benchmark_group("bracket");
    for name in ["4_1", "7_4", "8_18", "9_1"] {
        let pd = &table.require(name).unwrap().pd;
        group.bench_with_input(BenchmarkId::new("fast", name), pd, |b, pd| b.iter(|| bracket_fast(black_box(pd))));
        group.bench_with_input(BenchmarkId::new("oracle", name), pd, |b, pd| b.iter(|| bracket_oracle(black_box(pd))));
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let table = load_builtin().unwrap();
    let j = table.require("5_1").unwrap().jones().unwrap();
    let mut group = c.benchmark_group("series");
    for order in [50usize, 300] {
        group.bench_with_input(BenchmarkId::new("expand", order), &order, |b, &k| b.iter(|| expand_exp(black_box(&j), k)));
        let a = moments(&j, order);
        group.bench_with_input(BenchmarkId::new("log", order), &a, |b, a| b.iter(|| log_moments(black_box(a))));
    }
    group.finish();
}

criterion_group!(benches, brackets, series);
criterion_main!(benches);

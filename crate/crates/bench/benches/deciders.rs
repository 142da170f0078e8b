use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use mccoy_bench::ring;
use mccoy_core::fpalg::{complete_rewrite, parse_presentation, DEFAULT_COMPLETION_CAP};
use mccoy_core::properties::{check, zero_divisor_pairs, zero_divisor_pairs_exhaustive, Property, SearchLimits};

fn mccoy(c: &mut Criterion) {
    let limits = SearchLimits::default();
    let mut group = c.benchmark_group("right-central-mccoy");
    for (expr, d) in [("M(2, F2)", 1), ("T(2, F2)", 2), ("fp(\"rings/ex22.ring\")", 1)] {
        let r = ring(expr);
        group.bench_with_input(BenchmarkId::new(expr, d), &d, |b, &d| {
            b.iter(|| check(&r, Property::RightCentralMccoy, d, &limits).unwrap())
        });
    }
    group.finish();
}

fn pair_streams(c: &mut Criterion) {
    let limits = SearchLimits::default();
    let r = ring("M(2, F2)");
    let mut group = c.benchmark_group("zero-divisor pairs M(2, F2) d=1");
    group.bench_function("pruned", |b| {
        b.iter(|| zero_divisor_pairs(&r, 1, &limits).unwrap().count())
    });
    group.bench_function("exhaustive", |b| {
        b.iter(|| zero_divisor_pairs_exhaustive(&r, 1, &limits).unwrap().count())
    });
    group.finish();
}

fn completion(c: &mut Criterion) {
    let text = include_str!("../../../rings/ex23.ring");
    let pres = parse_presentation(text).unwrap();
    c.bench_function("complete ex23", |b| {
        b.iter(|| complete_rewrite(black_box(&pres), DEFAULT_COMPLETION_CAP).unwrap())
    });
}

criterion_group!(benches, mccoy, pair_streams, completion);
criterion_main!(benches);

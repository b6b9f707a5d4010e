use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sasaki_bench::joins;
use sasaki_core::{
    csc_ray, extremal_region, extremal_verdict, null_scalar_solutions, regular_ray_extremal,
    scalar_coefficients, Bundle, WeightVector,
};

fn csc(c: &mut Criterion) {
    for (name, params) in joins() {
        c.bench_function(&format!("csc_ray/{name}"), |b| b.iter(|| csc_ray(black_box(&params)).unwrap()));
    }
}

fn region(c: &mut Criterion) {
    let mut group = c.benchmark_group("extremal_region");
    group.sample_size(10);
    for (name, params) in joins() {
        group.bench_function(name, |b| b.iter(|| extremal_region(black_box(&params)).unwrap()));
    }
    group.finish();
}

fn verdicts(c: &mut Criterion) {
    let (_, params) = joins().remove(0);
    let v = WeightVector::new(7, 3).unwrap();
    c.bench_function("extremal_verdict/g23_v7_3", |b| {
        b.iter(|| extremal_verdict(black_box(&params), v).unwrap())
    });
    c.bench_function("regular_ray/g40_k25_m24", |b| {
        b.iter(|| regular_ray_extremal(black_box(40), 25, 24, Bundle::NonTrivial).unwrap())
    });
    c.bench_function("scalar_coefficients/g23_v6_1", |b| {
        b.iter(|| scalar_coefficients(black_box(&params), WeightVector::new(6, 1).unwrap()).unwrap())
    });
    c.bench_function("null_scalar/g145_bound200", |b| {
        b.iter(|| null_scalar_solutions(black_box(145), 200).unwrap())
    });
}

criterion_group!(benches, csc, region, verdicts);
criterion_main!(benches);

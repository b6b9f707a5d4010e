use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use sasaki_bench::{clustered_poly, region_quartic};
use sasaki_core::exact::{pow2_inv, rat, square_free_part, SturmChain};
use sasaki_core::{isolate_real_roots, positive_on_open_interval, rational_roots, Poly};

fn sturm(c: &mut Criterion) {
    let p = clustered_poly(8);
    c.bench_function("sturm_chain/deg10", |b| b.iter(|| SturmChain::new(black_box(&p)).unwrap()));
    let chain = SturmChain::new(&p).unwrap();
    c.bench_function("sturm_count/deg10", |b| {
        b.iter(|| chain.count(black_box(&rat(-3, 1)), black_box(&rat(3, 1))))
    });
    let squared = &p * &p;
    c.bench_function("square_free/deg20", |b| b.iter(|| square_free_part(black_box(&squared)).unwrap()));
}

fn isolation(c: &mut Criterion) {
    let p = clustered_poly(8);
    let (a, b) = (rat(-3, 1), rat(3, 1));
    for bits in [20u32, 40, 80] {
        let w = pow2_inv(bits);
        c.bench_function(&format!("isolate/deg10/2^-{bits}"), |bench| {
            bench.iter(|| isolate_real_roots(black_box(&p), &a, &b, &w).unwrap())
        });
    }
    let q = region_quartic();
    let w = pow2_inv(40);
    c.bench_function("isolate/region_quartic", |bench| {
        bench.iter(|| isolate_real_roots(black_box(&q), &rat(0, 1), &rat(2, 1), &w).unwrap())
    });
    c.bench_function("rational_roots/deg10", |bench| bench.iter(|| rational_roots(black_box(&p)).unwrap()));
}

fn positivity(c: &mut Criterion) {
    let tangent = &Poly::from_ints(&[-1, 3]).pow(2) * &Poly::from_ints(&[5, 0, 1]);
    c.bench_function("positivity/tangent_zero", |b| {
        b.iter(|| positive_on_open_interval(black_box(&tangent), &rat(-1, 1), &rat(1, 1)).unwrap())
    });
}

criterion_group!(benches, sturm, isolation, positivity);
criterion_main!(benches);

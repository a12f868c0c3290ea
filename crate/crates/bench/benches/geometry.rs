use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use srtriple::beltrami::{boost_matrix, ds_ads_transform, ds_ads_transform_f64, MetricKind, Signature};
use srtriple::catalog::{generator, GeneratorId};
use srtriple::exact::{int, rat};
use srtriple::metric::{lie_derivative_metric, pullback, BeltramiMap};
use srtriple::sampling::Sampler;

fn transforms(c: &mut Criterion) {
    let lam = rat(1, 25);
    let mut s = Sampler::new(42);
    let a = s.perfect_square_point(Signature::DS, &lam);
    let l = s.lorentz();
    let x = s.domain_point(Signature::DS, &lam);
    c.bench_function("ds transform exact", |b| {
        b.iter(|| ds_ads_transform(Signature::DS, black_box(&a), &l, black_box(&x), &lam).unwrap())
    });
    c.bench_function("ds transform f64", |b| {
        b.iter(|| ds_ads_transform_f64(Signature::DS, black_box(&a), &l, black_box(&x), &lam).unwrap())
    });
    c.bench_function("boost matrix", |b| b.iter(|| boost_matrix(Signature::DS, black_box(&a), &l, &int(5)).unwrap()));

    let map = BeltramiMap { signature: Signature::DS, a, lorentz: l, lam: lam.clone() };
    c.bench_function("metric pullback", |b| b.iter(|| pullback(&map, MetricKind::DS, black_box(&x), &lam).unwrap()));
}

fn killing(c: &mut Criterion) {
    let lam = int(1);
    let x = Sampler::new(7).domain_point(Signature::AdS, &lam);
    let f = generator(GeneratorId::PMinus(2)).unwrap();
    c.bench_function("lie derivative of ads metric", |b| {
        b.iter(|| lie_derivative_metric(black_box(&f), MetricKind::AdS, black_box(&x), &lam).unwrap())
    });
}

criterion_group!(benches, transforms, killing);
criterion_main!(benches);

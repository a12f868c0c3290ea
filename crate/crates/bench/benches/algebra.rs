use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use srtriple::catalog::{basis24, generator, structure_table, AlgebraName, Basis, GeneratorId};
use srtriple::verify::{run_suite, SuiteName};
use srtriple::exact::int;

fn brackets(c: &mut Criterion) {
    let x = generator(GeneratorId::PPlus(0)).unwrap();
    let y = generator(GeneratorId::PMinus(1)).unwrap();
    c.bench_function("bracket P+0 P-1", |b| b.iter(|| black_box(&x).bracket(black_box(&y))));

    let basis = Basis::standard();
    let f = x.bracket(&y);
    c.bench_function("decompose in 24-basis", |b| b.iter(|| basis.decompose(black_box(&f)).unwrap()));
    c.bench_function("build 24 generator fields", |b| {
        b.iter(|| basis24().into_iter().map(|g| generator(g).unwrap()).collect::<Vec<_>>())
    });
}

fn tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure table");
    g.sample_size(10);
    for name in [AlgebraName::Iso13, AlgebraName::So14, AlgebraName::Gl4, AlgebraName::Im4] {
        g.bench_function(name.as_str(), |b| b.iter(|| structure_table(name).unwrap()));
    }
    g.finish();
}

fn suites(c: &mut Criterion) {
    let mut g = c.benchmark_group("formal suite");
    g.sample_size(10);
    for name in [SuiteName::FullClosure, SuiteName::Cartan] {
        g.bench_function(name.as_str(), |b| b.iter(|| run_suite(name, 42, 0, &int(1))));
    }
    g.finish();
}

criterion_group!(benches, brackets, tables, suites);
criterion_main!(benches);

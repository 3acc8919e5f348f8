use criterion::{criterion_group, criterion_main, Criterion};
use gins_bench::{four_variable_construction, seven_variable_construction};
use gins_core::corpus::{random_homogeneous, random_strongly_stable};
use gins_core::koszul::{graded_betti, koszul_betti_tensor};
use gins_core::stable::{ah_koszul_tensor, ek_betti, lex_ideal_auto};
use gins_core::{buchberger, enumerate_gins, gin, GinOptions, TermOrder};
use std::hint::black_box;

fn groebner(c: &mut Criterion) {
    let gens = random_homogeneous(4, 3, 11);
    c.bench_function("buchberger revlex, random cubics in 4 vars", |b| {
        b.iter(|| buchberger(black_box(&gens), &TermOrder::RevLex).unwrap())
    });
    let abf = four_variable_construction();
    c.bench_function("gin revlex, four-variable construction", |b| {
        b.iter(|| gin(4, black_box(abf.generators()), &TermOrder::RevLex, &GinOptions::with_seed(1)).unwrap())
    });
}

fn koszul(c: &mut Criterion) {
    let i = random_strongly_stable(4, 4, 5);
    let gens = i.to_polynomials(&TermOrder::Lex);
    c.bench_function("graded betti by homology, stable ideal in 4 vars", |b| {
        b.iter(|| graded_betti(4, black_box(&gens)).unwrap())
    });
    c.bench_function("koszul tensor, generic forms", |b| {
        b.iter(|| koszul_betti_tensor(4, black_box(&gens), 4, 3, i.max_degree() + 4).unwrap())
    });
    c.bench_function("formula tensor and lex ideal", |b| {
        b.iter(|| {
            let l = lex_ideal_auto(black_box(&i)).unwrap();
            (ek_betti(&l).unwrap(), ah_koszul_tensor(&l, 4, l.max_degree() + 4).unwrap())
        })
    });
}

fn enumeration(c: &mut Criterion) {
    let small = four_variable_construction();
    c.bench_function("enumerate gins, four variables", |b| b.iter(|| enumerate_gins(black_box(&small.ideal)).unwrap()));
    let large = seven_variable_construction();
    let mut group = c.benchmark_group("large");
    group.sample_size(10);
    group.bench_function("enumerate gins, seven variables", |b| {
        b.iter(|| enumerate_gins(black_box(&large.ideal)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, groebner, koszul, enumeration);
criterion_main!(benches);

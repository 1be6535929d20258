use std::collections::BTreeMap;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use painleve_bench::{index_pairs, periodic_case, zeta_case};
use painleve_core::catalog::{table1_solutions, weierstrass_b0_solution};
use painleve_core::painleve::{fuchs_indices, laurent_expand, laurent_expand_symbolic, painleve_test_params};
use painleve_core::verify::{verify_descriptor, weierstrass_series};
use painleve_core::{rat, OdeParams, Rational};

fn indices(c: &mut Criterion) {
    let pairs = index_pairs(32);
    c.bench_function("fuchs_indices/32 pairs", |b| {
        b.iter(|| {
            for p in &pairs {
                black_box(fuchs_indices(p).unwrap());
            }
        })
    });
    let chazy = OdeParams::from_i64(2, 2, 0, 0, 0, 3);
    c.bench_function("painleve_test/B=A", |b| b.iter(|| black_box(painleve_test_params(&chazy))));
}

fn expansion(c: &mut Criterion) {
    let p = OdeParams::from_i64(3, 0, 0, 1, 0, 2);
    c.bench_function("laurent_expand/N=20", |b| {
        b.iter(|| black_box(laurent_expand(&p, 20, &BTreeMap::new()).unwrap()))
    });
    c.bench_function("laurent_expand_symbolic/B=0,N=8", |b| {
        b.iter(|| black_box(laurent_expand_symbolic(&rat(3, 1), &Rational::zero(), 8).unwrap()))
    });
}

fn solutions(c: &mut Criterion) {
    let (p, free) = periodic_case();
    c.bench_function("table1+verify/periodic", |b| {
        b.iter(|| {
            for d in table1_solutions(&p, &free).descriptors {
                black_box(verify_descriptor(&p, &d, 20).unwrap());
            }
        })
    });
    let (p, cc, c1) = zeta_case();
    let d = weierstrass_b0_solution(&p, &cc, &c1).unwrap();
    c.bench_function("verify/zeta N=20", |b| b.iter(|| black_box(verify_descriptor(&p, &d, 20).unwrap())));
    c.bench_function("weierstrass_series/K=24", |b| {
        b.iter(|| black_box(weierstrass_series(&rat(3, 7), &rat(-5, 2), 24).unwrap()))
    });
}

criterion_group!(benches, indices, expansion, solutions);
criterion_main!(benches);

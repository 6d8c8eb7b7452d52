//! Data-parallel kernels against their sequential fallbacks.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use suzuki_descent::chartab::table_outer;
use suzuki_descent::chevalley::GroupElement;
use suzuki_descent::groups::{enumerate_sz, rho0, DEFAULT_BUDGET};
use suzuki_descent::par;

fn conjugation(c: &mut Criterion) {
    let g = enumerate_sz(1, DEFAULT_BUDGET).expect("Sz(8)");
    let elements: Vec<GroupElement> = g
        .elements
        .iter()
        .take(4096)
        .map(|&k| GroupElement::from_key(k, 3))
        .collect();
    let r = rho0(3).without_word();
    let kernel = |x: &GroupElement| x.mul(&r).mul(&x.inverse()).key();
    let mut group = c.benchmark_group("conjugate rho0 over 4096 elements of Sz(8)");
    group.bench_function("parallel", |b| b.iter(|| black_box(par::map(&elements, kernel))));
    group.bench_function("sequential", |b| b.iter(|| black_box(par::seq::map(&elements, kernel))));
    group.finish();
}

fn column_norms(c: &mut Criterion) {
    let t = table_outer(2).expect("outer table at n = 2");
    let kernel = |j: usize| {
        t.rows
            .iter()
            .map(|r| &r.values[j] * &r.values[j].conj())
            .sum::<suzuki_descent::cyclotomic::CycNum>()
    };
    let cols = t.classes.len();
    let mut group = c.benchmark_group("outer column norms at q = 32");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| black_box(par::map_range(cols, kernel))));
    group.bench_function("sequential", |b| b.iter(|| black_box(par::seq::map_range(cols, kernel))));
    group.finish();
}

fn u0_brute_induction(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute-force induction from U0 at q = 8");
    group.sample_size(10);
    group.bench_function("torus-parallel", |b| {
        b.iter(|| black_box(suzuki_descent::chartab::induce_lambda_brute(1, DEFAULT_BUDGET).map(|r| r.inner.len())))
    });
    group.finish();
}

criterion_group!(benches, conjugation, column_norms, u0_brute_induction);
criterion_main!(benches);

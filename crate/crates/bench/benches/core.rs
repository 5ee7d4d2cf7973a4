use criterion::{black_box, criterion_group, criterion_main, BatchSize, Criterion};
use qcanon_bench::{end_words, exponents};
use qcanon_core::algebra::Algebra;
use qcanon_core::tropical::{reparametrize, ParamVector};
use qcanon_core::weyl::Root;

fn tables(c: &mut Criterion) {
    let (a2, _) = end_words(2);
    let (a3, _) = end_words(3);
    let mut g = c.benchmark_group("table");
    g.sample_size(10);
    // a fresh context each iteration so nothing is memoized
    g.bench_function("A2 weight (4,4)", |b| {
        b.iter_batched(
            Algebra::default,
            |alg| alg.canonical_basis(&a2, &Root(vec![4, 4])).unwrap(),
            BatchSize::PerIteration,
        )
    });
    g.bench_function("A3 weight (2,2,2)", |b| {
        b.iter_batched(
            Algebra::default,
            |alg| alg.canonical_basis(&a3, &Root(vec![2, 2, 2])).unwrap(),
            BatchSize::PerIteration,
        )
    });
    g.finish();
}

fn dual_canonical(c: &mut Criterion) {
    let (a3, _) = end_words(3);
    let alg = Algebra::default();
    let exps = exponents(&a3, &[2, 2, 2]);
    alg.canonical_basis(&a3, &Root(vec![2, 2, 2])).unwrap();
    c.bench_function("dual canonical, A3 weight (2,2,2), warm table", |b| {
        b.iter(|| {
            for m in &exps {
                black_box(alg.dual_canonical(&a3, m).unwrap());
            }
        })
    });
    let x = alg.dual_canonical(&a3, &exps[exps.len() / 2]).unwrap();
    let y = alg.dual_canonical(&a3, &exps[0]).unwrap();
    c.bench_function("q-commutation test, A3", |b| {
        b.iter(|| black_box(alg.q_commutation(&x, &y).unwrap()))
    });
}

fn tropical(c: &mut Criterion) {
    let (from, to) = end_words(4);
    let m = ParamVector((1..=10).collect());
    c.bench_function("reparametrize across A4", |b| {
        b.iter(|| reparametrize(black_box(&from), &to, &m).unwrap())
    });
}

criterion_group!(benches, tables, dual_canonical, tropical);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use tspec_core::{
    classify, cp1_twisted_trace, periodic_table, smith_diagonal, smith_normal_form, zeta_identity_check, ToralAutomorphism,
};

fn snf(c: &mut Criterion) {
    let mut g = c.benchmark_group("smith");
    for n in [3, 4, 5] {
        let a = tspec_bench::dense_matrix(n);
        g.bench_with_input(BenchmarkId::new("with_transforms", n), &a, |b, a| b.iter(|| smith_normal_form(black_box(a))));
        g.bench_with_input(BenchmarkId::new("diagonal_only", n), &a, |b, a| b.iter(|| smith_diagonal(black_box(a))));
    }
    g.finish();
    let m = tspec_bench::torsion_module(4);
    c.bench_function("classify_torsion_module", |b| b.iter(|| classify(black_box(&m))));
}

fn dynamics(c: &mut Criterion) {
    let a = tspec_bench::action();
    for order in [10, 40] {
        c.bench_function(&format!("zeta_identity_order_{order}"), |b| b.iter(|| zeta_identity_check(black_box(&a), order)));
    }
    let t = tspec_bench::cat_map();
    c.bench_function("periodic_table_cat_map_20", |b| b.iter(|| periodic_table(black_box(&t), 20)));
    let t3 = ToralAutomorphism::new(tspec_bench::torus3()).expect("unimodular");
    c.bench_function("periodic_table_3_torus_10", |b| b.iter(|| periodic_table(black_box(&t3), 10)));
}

fn equivariant(c: &mut Criterion) {
    for k in [4, 32] {
        c.bench_function(&format!("cp1_twisted_trace_{k}"), |b| b.iter(|| cp1_twisted_trace(black_box(k))));
    }
}

criterion_group!(benches, snf, dynamics, equivariant);
criterion_main!(benches);

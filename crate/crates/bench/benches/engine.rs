use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use leinster_core::leinster::NormalLattice;
use leinster_core::verify::{census, pqrs, Options};
use leinster_core::{analyze, build, enumerate_squarefree, GroupSpec, Storage};

fn normal_subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_subgroups");
    for spec in ["Dic5xC19", "SD(7,8,6)", "A4xC5", "D40"] {
        let g = build(&GroupSpec::parse(spec).unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::new("cached", spec), &g, |b, g| {
            b.iter(|| black_box(g.normal_subgroups()))
        });
        let lazy = g.with_storage(Storage::OnDemand);
        group.bench_with_input(BenchmarkId::new("on_demand", spec), &lazy, |b, g| {
            b.iter(|| black_box(g.normal_subgroups()))
        });
    }
    group.finish();
}

fn structural_vs_engine(c: &mut Criterion) {
    let descs = enumerate_squarefree(570).unwrap();
    let mut group = c.benchmark_group("squarefree_570");
    group.bench_function("structural", |b| {
        b.iter(|| {
            for d in &descs {
                black_box(
                    NormalLattice::metacyclic(d.a, d.b, d.t)
                        .unwrap()
                        .normal_orders(),
                );
            }
        })
    });
    group.bench_function("engine", |b| {
        b.iter(|| {
            for d in &descs {
                black_box(analyze(&leinster_core::realize(d).unwrap()).unwrap());
            }
        })
    });
    group.finish();
}

fn claim_suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("claims");
    group.sample_size(10);
    let opts = Options::default();
    group.bench_function("census_400", |b| {
        b.iter(|| black_box(census(400, &opts).unwrap()))
    });
    group.bench_function("pqrs_2500", |b| {
        b.iter(|| black_box(pqrs(2500, &opts).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    normal_subgroups,
    structural_vs_engine,
    claim_suites
);
criterion_main!(benches);

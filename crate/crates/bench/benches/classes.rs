use std::hint::black_box;

use confmc_core::classes::{mc_conf_affine, mc_conf_proj_at, mc_orbit_conf, ProjFixedPoint, TorusData};
use confmc_core::series::check_lemma_szeregi;
use criterion::{criterion_group, criterion_main, Criterion};

fn classes(c: &mut Criterion) {
    let t3 = TorusData::standard(3).unwrap();
    c.bench_function("conf affine n=3 k=5", |b| b.iter(|| mc_conf_affine(&t3, black_box(5)).unwrap()));
    let e = ProjFixedPoint::new(3, vec![1, 1, 2, 2]).unwrap();
    c.bench_function("conf proj n=3 (1,1,2,2)", |b| b.iter(|| mc_conf_proj_at(&t3, black_box(&e)).unwrap()));
    let tb = TorusData::standard_with_beta(2, 3).unwrap();
    c.bench_function("orbit n=2 k=3", |b| b.iter(|| mc_orbit_conf(&tb, black_box(3)).unwrap()));
}

fn checks(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    g.bench_function("szeregi N=6", |b| b.iter(|| check_lemma_szeregi(black_box(6)).unwrap()));
    g.finish();
}

criterion_group!(benches, classes, checks);
criterion_main!(benches);

//! Criterion benchmarks comparing the parallel batch engine with the
//! sequential fallback on representative workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hessex_core::groebner::{buchberger_with, GbOptions};
use hessex_core::hessenberg::{minimal_sheet_line, rank_ideals, special};
use hessex_core::ideal::Ideal;
use hessex_core::multidegree::multidegree_with;
use hessex_core::order::MonomialOrder;
use hessex_core::variable::Ring;

fn modes() -> Vec<(&'static str, GbOptions)> {
    vec![
        ("sequential", GbOptions::sequential()),
        (
            "parallel",
            GbOptions {
                parallel: true,
                ..GbOptions::default()
            },
        ),
    ]
}

fn bench_family_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("groebner/minimal_sheet_family");
    for n in [4usize, 5] {
        let h = hessenberg_fn(n);
        let line = minimal_sheet_line(n);
        let ideal = rank_ideals::hessenberg_ideal(&line.family_matrix(), &h).unwrap();
        let ord = MonomialOrder::elimination();
        for (name, opts) in modes() {
            group.bench_with_input(
                BenchmarkId::new(name, n),
                &(ideal.clone(), opts),
                |b, (ideal, opts)| {
                    b.iter(|| buchberger_with(ideal.generators(), &ord, opts).unwrap())
                },
            );
        }
    }
    group.finish();
}

fn hessenberg_fn(n: usize) -> hessex_core::hessenberg::HessenbergFunction {
    let mut vals = vec![n; n];
    vals[0] = 2;
    hessex_core::hessenberg::HessenbergFunction::new(vals).unwrap()
}

fn bench_saturation(c: &mut Criterion) {
    let mut group = c.benchmark_group("idealops/t_saturation");
    let n = 4;
    let ring = Ring::with_t(n);
    let sum = special::j_t(ring, 2)
        .unwrap()
        .sum(&special::k_of(ring, 3).unwrap())
        .unwrap();
    let t = hessex_core::text::parse_polynomial("t", ring, &MonomialOrder::elimination()).unwrap();
    for (name, opts) in modes() {
        group.bench_with_input(BenchmarkId::new(name, n), &opts, |b, opts| {
            b.iter(|| sum.saturate(&t, opts).unwrap())
        });
    }
    group.finish();
}

fn bench_multidegree(c: &mut Criterion) {
    let mut group = c.benchmark_group("idealops/multidegree");
    let n = 4;
    let h = hessex_core::hessenberg::HessenbergFunction::new(vec![1, 2, 3, 4]).unwrap();
    let nilpotent = minimal_sheet_line(n).fiber_matrix(&hessex_core::util::rat(0));
    let ideal = rank_ideals::hessenberg_ideal(&nilpotent, &h).unwrap();
    for (name, opts) in modes() {
        group.bench_with_input(BenchmarkId::new(name, n), &opts, |b, opts| {
            b.iter(|| {
                multidegree_with(&ideal, &MonomialOrder::elimination(), opts).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_ideal_intersection(c: &mut Criterion) {
    let mut group = c.benchmark_group("idealops/intersection");
    let n = 4;
    let ring = Ring::with_t(n);
    let a = special::k_of(ring, 2).unwrap();
    let b = special::j_t(ring, 1).unwrap();
    for (name, opts) in modes() {
        group.bench_with_input(BenchmarkId::new(name, n), &opts, |bch, opts| {
            bch.iter(|| Ideal::intersection(&a, &b, opts).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_family_basis,
    bench_saturation,
    bench_multidegree,
    bench_ideal_intersection
);
criterion_main!(benches);

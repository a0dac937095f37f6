use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use colex::abwt::{build_abwt, invert_abwt_dfa};
use colex::index::Index;
use colex::order::{chain_partition, compute_max_colex_order, dfa_width};
use colex_bench::{patterns, sized_dfa};

fn bench_order(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_colex_order");
    for n in [20usize, 40, 80] {
        let d = sized_dfa(n as u64, n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(d.state_count()), &d, |b, d| {
            b.iter(|| black_box(compute_max_colex_order(d)));
        });
    }
    group.finish();
}

fn bench_chain_partition(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain_partition");
    for n in [20usize, 40, 80] {
        let d = sized_dfa(n as u64, n, 4);
        let po = compute_max_colex_order(&d);
        group.bench_with_input(
            BenchmarkId::from_parameter(d.state_count()),
            &po,
            |b, po| {
                b.iter(|| black_box(chain_partition(po)));
            },
        );
    }
    group.finish();
}

fn bench_transform(c: &mut Criterion) {
    let mut group = c.benchmark_group("transform");
    for n in [20usize, 40, 80] {
        let d = sized_dfa(n as u64, n, 4);
        let po = compute_max_colex_order(&d);
        let (_, cp) = dfa_width(&d);
        group.bench_function(BenchmarkId::new("build", d.state_count()), |b| {
            b.iter(|| black_box(build_abwt(&d, &po, &cp).unwrap()));
        });
        let abwt = build_abwt(&d, &po, &cp).unwrap();
        group.bench_function(BenchmarkId::new("invert", d.state_count()), |b| {
            b.iter(|| black_box(invert_abwt_dfa(&abwt).unwrap()));
        });
    }
    group.finish();
}

fn bench_queries(c: &mut Criterion) {
    let mut group = c.benchmark_group("index_queries");
    for n in [20usize, 40, 80] {
        let d = sized_dfa(n as u64, n, 4);
        let po = compute_max_colex_order(&d);
        let (_, cp) = dfa_width(&d);
        let abwt = build_abwt(&d, &po, &cp).unwrap();
        let ix = Index::build(&abwt).unwrap();
        let workload = patterns(7, &d, 64, 12);
        group.bench_function(BenchmarkId::new("count_64", d.state_count()), |b| {
            b.iter(|| {
                let mut total = 0usize;
                for w in &workload {
                    total += ix.count(w);
                }
                black_box(total)
            });
        });
        group.bench_function(BenchmarkId::new("member_64", d.state_count()), |b| {
            b.iter(|| {
                let mut hits = 0usize;
                for w in &workload {
                    hits += usize::from(ix.accepts_from_source(w).1);
                }
                black_box(hits)
            });
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_order,
    bench_chain_partition,
    bench_transform,
    bench_queries
);
criterion_main!(benches);

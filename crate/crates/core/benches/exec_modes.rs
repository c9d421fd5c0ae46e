use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use steenrod_core::corpus;
use steenrod_core::exec::Exec;
use steenrod_core::ring::Ring;
use steenrod_core::steenrod::cup::CupContext;
use steenrod_core::steenrod::DiagonalTable;
use steenrod_core::suite::{chain_map, equivariance};

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn table_precompute(c: &mut Criterion) {
    let mut group = c.benchmark_group("precompute");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "level 8, k 9"), &exec, |b, &exec| {
            b.iter(|| DiagonalTable::new().precompute(8, 9, exec))
        });
    }
    group.finish();
}

fn property_sweeps(c: &mut Criterion) {
    let table = DiagonalTable::new();
    table.precompute(4, 5, Exec::default());
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new(name, "chain map"), &exec, |b, &exec| b.iter(|| chain_map(&table, 4, 5, exec)));
        group.bench_with_input(BenchmarkId::new(name, "equivariance"), &exec, |b, &exec| b.iter(|| equivariance(&table, 4, 5, exec)));
    }
    group.finish();
}

fn squares(c: &mut Criterion) {
    let x = corpus::load("rp4_cross", Some(4)).expect("corpus entry").set;
    let f2 = Ring::PrimeField(2);
    let complex = x.normalized_chains(f2);
    let table = DiagonalTable::new();
    let mut group = c.benchmark_group("squares");
    group.sample_size(10);
    for (name, exec) in MODES {
        let ctx = CupContext { space: &x, complex: &complex, table: &table, exec };
        group.bench_function(BenchmarkId::new(name, "Sq^2 on H^2 of projective 4-space"), |b| b.iter(|| ctx.sq_matrix(2, 2).expect("F2")));
    }
    group.finish();
}

criterion_group!(benches, table_precompute, property_sweeps, squares);
criterion_main!(benches);

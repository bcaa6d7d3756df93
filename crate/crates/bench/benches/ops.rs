use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ribbon_core::decomp::enumerate_plane_subsets;
use ribbon_core::oracle::{brute_force_plane_subsets, random_connected, random_one_sum};
use ribbon_core::{IsoMode, RibbonGraph};

fn sample_graph(edges: usize) -> RibbonGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    random_connected(&mut rng, (edges / 2).max(1), edges)
}

/// A chain of joined small plane pieces, the shape on which structural
/// enumeration beats the exponential sweep.
fn joined_chain(pieces: usize) -> RibbonGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut acc = loop {
        let g = random_connected(&mut rng, 1, 2);
        if g.is_plane() {
            break g;
        }
    };
    for _ in 1..pieces {
        let next = loop {
            let g = random_connected(&mut rng, 1, 2);
            if g.is_plane() {
                break g;
            }
        };
        acc = random_one_sum(&mut rng, &acc, &next, true).graph;
    }
    acc
}

fn bench_partial_dual(c: &mut Criterion) {
    let mut group = c.benchmark_group("partial_dual");
    for edges in [8usize, 32, 64] {
        let g = sample_graph(edges);
        let a = g.full_subset();
        group.bench_with_input(BenchmarkId::from_parameter(edges), &edges, |b, _| {
            b.iter(|| black_box(g.partial_dual(&a)));
        });
    }
    group.finish();
}

fn bench_canonical_code(c: &mut Criterion) {
    let g = sample_graph(8);
    c.bench_function("canonical_code_achiral_16_darts", |b| {
        b.iter(|| black_box(g.canonical_code(IsoMode::Achiral)));
    });
}

fn bench_plane_subsets(c: &mut Criterion) {
    let g = joined_chain(6);
    c.bench_function("enumerate_plane_subsets_chain", |b| {
        b.iter(|| black_box(enumerate_plane_subsets(&g)));
    });
    let small = sample_graph(6);
    c.bench_function("brute_force_plane_subsets_6_edges", |b| {
        b.iter(|| black_box(brute_force_plane_subsets(&small).unwrap()));
    });
}

criterion_group!(
    benches,
    bench_partial_dual,
    bench_canonical_code,
    bench_plane_subsets
);
criterion_main!(benches);

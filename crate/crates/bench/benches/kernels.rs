use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use riordan_bench::{example_pair, pascal_pair};
use riordan_core::expand;
use riordan_core::hessenberg::zhong_inverse;
use riordan_core::partial_sums::{row_ps_inverse_finite, row_ps_inverse_infinite};
use riordan_core::phyllotaxis::build_a;
use riordan_core::production::{four_fold_product, production_matrix};
use riordan_core::sample::random_hessenberg;

const SIZES: [usize; 3] = [8, 16, 32];

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for n in SIZES {
        g.bench_with_input(BenchmarkId::new("expand", n), &n, |b, &n| {
            b.iter(|| expand(black_box("exp(x)/(1-x-x^2)"), n).unwrap())
        });
        let f = example_pair(n).f().clone();
        g.bench_with_input(BenchmarkId::new("revert", n), &f, |b, f| {
            b.iter(|| f.revert().unwrap())
        });
    }
    g.finish();
}

fn matrices(c: &mut Criterion) {
    let mut g = c.benchmark_group("matrices");
    for n in SIZES {
        let p = example_pair(n + 2);
        g.bench_with_input(BenchmarkId::new("riordan_matrix", n), &n, |b, &n| {
            b.iter(|| p.matrix(n).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("hessenberg_finite", n), &n, |b, &n| {
            b.iter(|| row_ps_inverse_finite(&p, n).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("hessenberg_infinite", n), &n, |b, &n| {
            b.iter(|| row_ps_inverse_infinite(&p, n).unwrap())
        });
        let m = pascal_pair(n + 2).matrix(n + 1).unwrap();
        g.bench_with_input(BenchmarkId::new("production", n), &m, |b, m| {
            b.iter(|| production_matrix(m).unwrap())
        });
    }
    g.finish();
}

fn inverses(c: &mut Criterion) {
    let mut g = c.benchmark_group("inverses");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in SIZES {
        let h = random_hessenberg(&mut rng, n);
        g.bench_with_input(BenchmarkId::new("zhong", n), &h, |b, h| {
            b.iter(|| zhong_inverse(h))
        });
        g.bench_with_input(BenchmarkId::new("elimination", n), &h, |b, h| {
            b.iter(|| h.matrix().inverse())
        });
    }
    g.finish();
}

fn composites(c: &mut Criterion) {
    let mut g = c.benchmark_group("composites");
    g.sample_size(10);
    for n in [6, 12] {
        let p = example_pair(n + 3);
        g.bench_with_input(BenchmarkId::new("four_fold", n), &n, |b, &n| {
            b.iter(|| four_fold_product(&p, n).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("build_a", n), &n, |b, &n| {
            b.iter(|| build_a(n).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, series, matrices, inverses, composites);
criterion_main!(benches);

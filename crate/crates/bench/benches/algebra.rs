use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qhopf_core::chern::{idempotent, pairing};
use qhopf_core::galois::{strong_connection, strong_connection_closed};
use qhopf_core::numrep::{build_rep, numeric_trace, relation_defects, Family};
use qhopf_core::s3core::mul_via_generators;
use qhopf_core::sample::{random_element, SampleBounds};
use qhopf_core::AlgElement;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn products(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let b = SampleBounds { max_terms: 4, max_shift: 3, max_exp: 3 };
    let pairs: Vec<(AlgElement, AlgElement)> = (0..32).map(|_| (random_element(&mut rng, &b), random_element(&mut rng, &b))).collect();
    c.bench_function("mul/closed_form", |bch| {
        bch.iter(|| {
            pairs.iter().for_each(|(x, y)| {
                black_box(x.mul(y));
            })
        })
    });
    c.bench_function("mul/rewrite", |bch| {
        bch.iter(|| {
            pairs.iter().for_each(|(x, y)| {
                black_box(mul_via_generators(x, y));
            })
        })
    });
}

fn connection(c: &mut Criterion) {
    let mut g = c.benchmark_group("strong_connection");
    for k in [2i64, 4, 8] {
        g.bench_with_input(BenchmarkId::new("recursion", k), &k, |b, &k| b.iter(|| strong_connection(black_box(k))));
        g.bench_with_input(BenchmarkId::new("closed", k), &k, |b, &k| b.iter(|| strong_connection_closed(black_box(k as u32), true)));
    }
    g.finish();
}

fn chern(c: &mut Criterion) {
    let mut g = c.benchmark_group("chern");
    for mu in [-1i64, 3, -5] {
        g.bench_with_input(BenchmarkId::new("idempotent", mu), &mu, |b, &mu| b.iter(|| idempotent(black_box(mu))));
        g.bench_with_input(BenchmarkId::new("pairing", mu), &mu, |b, &mu| b.iter(|| pairing(black_box(mu))));
    }
    g.finish();
}

fn numerics(c: &mut Criterion) {
    let x = AlgElement::p_atom(2).mul(&AlgElement::q_atom(0));
    c.bench_function("numeric_trace/N=300", |b| b.iter(|| numeric_trace(black_box(&x), 300, 0.5, 1.0 / 3.0)));
    let rep = build_rep(Family::Rho1Theta { theta: 0.4 }, 200, 0.5, 1.0 / 3.0).unwrap();
    c.bench_function("relation_defects/N=200", |b| b.iter(|| relation_defects(black_box(&rep))));
}

criterion_group!(benches, products, connection, chern, numerics);
criterion_main!(benches);

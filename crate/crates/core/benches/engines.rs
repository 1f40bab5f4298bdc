use std::hint::black_box;

use braidcert::certify::certify;
use braidcert::word_problem::{is_identity_batch, Engine};
use braidcert::{BraidWord, ExampleSpec, Execution, Variant};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let words: Vec<BraidWord> = (0..256)
        .map(|_| BraidWord::random_trivial(&mut rng, 6, 96))
        .collect();
    let mut group = c.benchmark_group("word_problem_batch");
    for engine in Engine::ALL {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(engine.name(), name), &exec, |b, &exec| {
                b.iter(|| is_identity_batch(engine, exec, black_box(&words)))
            });
        }
    }
    group.finish();
}

fn certificate(c: &mut Criterion) {
    let spec = ExampleSpec::new(Variant::TwistEven, 7, (1..=7).collect()).unwrap();
    let mut group = c.benchmark_group("certify_twist_m7");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| certify(black_box(&spec), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, batch, certificate);
criterion_main!(benches);

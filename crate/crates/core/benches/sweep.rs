use ccnet::experiments::{run_experiment_with, sweep_with, Pattern};
use ccnet::patterns::generate_spiral;
use ccnet::{Execution, Scheme};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_classify(c: &mut Criterion) {
    let pattern = Pattern::new("spiral", generate_spiral(16).unwrap());
    let mut group = c.benchmark_group("classify_grid");
    for scheme in Scheme::ALL {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, scheme), &scheme, |b, &scheme| {
                b.iter(|| run_experiment_with(&pattern, scheme, 75, 1, 1, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_sweep(c: &mut Criterion) {
    let pattern = Pattern::new("spiral", generate_spiral(16).unwrap());
    let ns = [75, 65, 55, 45, 35, 25];
    let rs = [1, 2, 3, 4];
    let seeds: Vec<u64> = (1..=8).collect();
    let mut group = c.benchmark_group("sweep_quaternary");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| sweep_with(&pattern, Scheme::Quaternary, &ns, &rs, &seeds, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_sweep);
criterion_main!(benches);

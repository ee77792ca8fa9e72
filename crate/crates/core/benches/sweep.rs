use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use icpart::coalition::ic_number;
use icpart::families::{enumerate_graphs, GraphFilter};
use icpart::par;
use icpart::theorems::{run_check, TheoremId};
use icpart::Parallelism;

const MODES: [(&str, Parallelism); 2] = [
    ("sequential", Parallelism::Sequential),
    ("parallel", Parallelism::Parallel),
];

fn census_ic(c: &mut Criterion) {
    let graphs = enumerate_graphs(7, GraphFilter::unlabeled().connected()).unwrap();
    let mut group = c.benchmark_group("ic_census_order7");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| par::map(black_box(&graphs), mode, |g| ic_number(g).unwrap().value()))
        });
    }
    group.finish();
}

fn theorem_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_t_n_1");
    group.sample_size(10);
    let id = TheoremId::TNMinus1;
    for (name, mode) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| run_check(id, id.default_scope(), mode))
        });
    }
    group.finish();
}

criterion_group!(benches, census_ic, theorem_sweep);
criterion_main!(benches);

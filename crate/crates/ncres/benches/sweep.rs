use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncres::par::ExecMode;
use ncres::pipeline::OracleMode;
use ncres::report::{build_report, RunConfig};

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for oracle in [OracleMode::Exact, OracleMode::Both] {
        let config = RunConfig {
            m_min: 1,
            m_max: 4,
            oracle,
            samples: 1,
            ..RunConfig::default()
        };
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            group.bench_with_input(
                BenchmarkId::new(format!("{mode:?}"), format!("{oracle:?}")),
                &config,
                |b, cfg| b.iter(|| build_report(cfg, mode).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use udw_covariance::detector::DetectorConfig;
use udw_covariance::field::FieldState;
use udw_covariance::geometry::FrameSpec;
use udw_covariance::numerics::{Execution, QuadratureSpec};
use udw_covariance::violation::{
    trace_e_dimensionless, trace_e_ei_2d, trace_e_reduced3d, trace_e_reference_mc_exec,
};

fn standard_config() -> DetectorConfig {
    DetectorConfig::gaussian(1.0, 0.0, 1.0, 1.0, 0.9).unwrap()
}

/// Sequential vs rayon fan-out of the Monte-Carlo reference estimator.
/// Both modes produce bit-identical estimates for a fixed seed.
fn bench_mc_execution_modes(c: &mut Criterion) {
    let cfg = standard_config();
    let state = FieldState::MasslessVacuum3p1;
    let mut group = c.benchmark_group("mc_reference");
    for samples in [100_000u64, 1_000_000] {
        group.bench_with_input(
            BenchmarkId::new("sequential", samples),
            &samples,
            |b, &n| {
                b.iter(|| {
                    trace_e_reference_mc_exec(
                        &cfg,
                        &state,
                        FrameSpec::lab(),
                        n,
                        42,
                        Execution::Sequential,
                    )
                    .unwrap()
                })
            },
        );
        #[cfg(feature = "parallel")]
        group.bench_with_input(
            BenchmarkId::new("parallel", samples),
            &samples,
            |b, &n| {
                b.iter(|| {
                    trace_e_reference_mc_exec(
                        &cfg,
                        &state,
                        FrameSpec::lab(),
                        n,
                        42,
                        Execution::Parallel,
                    )
                    .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn bench_quadrature_paths(c: &mut Criterion) {
    let cfg = standard_config();
    let state = FieldState::MasslessVacuum3p1;
    let spec = QuadratureSpec::default();
    let mut group = c.benchmark_group("quadrature");
    group.bench_function("ei2d", |b| {
        b.iter(|| trace_e_ei_2d(&cfg, &state, &spec).unwrap())
    });
    group.bench_function("reduced3d", |b| {
        b.iter(|| trace_e_reduced3d(&cfg, &state, &spec).unwrap())
    });
    group.bench_function("dimensionless", |b| {
        b.iter(|| trace_e_dimensionless(0.9, 1.0, 1.0, &spec).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_mc_execution_modes, bench_quadrature_paths);
criterion_main!(benches);

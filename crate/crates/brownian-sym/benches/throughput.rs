//! Throughput benchmarks for the data-parallel kernels.
//!
//! Run twice to compare the rayon core against the sequential fallback:
//!
//! ```text
//! cargo bench -p brownian-sym -- --save-baseline parallel
//! cargo bench -p brownian-sym --no-default-features -- --baseline parallel
//! ```

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use brownian_sym::distributions::Distribution;
use brownian_sym::eigen::principal_eigenvalue;
use brownian_sym::geometry::{builtin, Domain, Point2};
use brownian_sym::gross::FourierMap;
use brownian_sym::sampler::{
    sample_disc_exit_exact, sample_exit_em, sample_exit_wos, SamplerConfig,
};
use brownian_sym::steiner::steiner_symmetrize;

fn cfg(n: usize) -> SamplerConfig {
    SamplerConfig {
        n_samples: n,
        ..SamplerConfig::default()
    }
}

fn bench_samplers(c: &mut Criterion) {
    let disc = Domain::unit_disc();
    let z = builtin("thm3-U").unwrap();
    let mut group = c.benchmark_group("samplers");
    group.sample_size(20);
    group.bench_function("wos_unit_disc_10k", |b| {
        b.iter(|| sample_exit_wos(&disc, black_box(&cfg(10_000))).unwrap())
    });
    group.bench_function("wos_z_polygon_5k", |b| {
        b.iter(|| sample_exit_wos(&z, black_box(&cfg(5_000))).unwrap())
    });
    group.bench_function("disc_exact_100k", |b| {
        b.iter(|| {
            sample_disc_exit_exact(Point2::new(0.0, -0.5), 1.0, black_box(&cfg(100_000)))
                .unwrap()
        })
    });
    group.bench_function("em_unit_disc_200_walks", |b| {
        let mut em_cfg = cfg(200);
        em_cfg.dt = 1e-4;
        b.iter(|| sample_exit_em(&disc, black_box(&em_cfg)).unwrap())
    });
    group.finish();
}

fn bench_fourier(c: &mut Criterion) {
    let kappa = Distribution::kappa_disc(0.5).unwrap();
    let samples = sample_exit_wos(&Domain::unit_disc(), &cfg(100_000)).unwrap();
    let xs: Vec<f64> = samples.iter().map(|s| s.position.x).collect();
    let empirical = Distribution::empirical(&xs).unwrap();
    let map = FourierMap::from_distribution(&kappa, 401).unwrap();
    let mut group = c.benchmark_group("fourier");
    group.sample_size(20);
    group.bench_function("quadrature_kappa_401", |b| {
        b.iter(|| FourierMap::from_distribution(black_box(&kappa), 401).unwrap())
    });
    group.bench_function("empirical_100k_401", |b| {
        b.iter(|| FourierMap::from_distribution(black_box(&empirical), 401).unwrap())
    });
    group.bench_function("boundary_curve_401_4096", |b| {
        b.iter(|| black_box(&map).boundary_curve(4096))
    });
    group.finish();
}

fn bench_geometry(c: &mut Criterion) {
    let disc = Domain::unit_disc();
    let mut group = c.benchmark_group("fields");
    group.sample_size(10);
    group.bench_function("steiner_disc_4096", |b| {
        b.iter(|| steiner_symmetrize(black_box(&disc), 4096))
    });
    group.bench_function("eigen_disc_h64", |b| {
        b.iter(|| principal_eigenvalue(black_box(&disc), 1.0 / 64.0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_samplers, bench_fourier, bench_geometry);
criterion_main!(benches);

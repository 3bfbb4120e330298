//! Exit-position samplers for planar Brownian motion started at the origin.
//!
//! Three mechanisms:
//!
//! * [`sample_exit_wos`] — walk-on-spheres: jump to a uniform point on the
//!   largest inscribed circle until within `epsilon` of the boundary, then
//!   project onto it. Samples harmonic measure exactly up to the
//!   `O(epsilon)` shell bias.
//! * [`sample_exit_em`] — Euler–Maruyama with fixed step `dt`, recording the
//!   first exterior time; the only sampler that resolves exit times. The
//!   exit position carries an `O(sqrt(dt))` bias from skipped sub-step
//!   crossings, so WoS is the precision sampler for positions.
//! * [`sample_disc_exit_exact`] — exact harmonic measure for discs: a
//!   uniform boundary angle pushed through the disc automorphism that moves
//!   the centre to the start point.
//!
//! Reproducibility contract: the sample index space is split into fixed
//! 4096-sample chunks and chunk `i` draws from an independent ChaCha stream
//! derived from `(seed, i)`, so results are bit-identical for any worker
//! count (including the sequential build).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use std::f64::consts::TAU;

use crate::exec;
use crate::geometry::{Domain, Point2};
use crate::{Error, Result};

/// Samples per RNG chunk; fixed so that parallelism never changes results.
const CHUNK: usize = 4096;
/// Per-walk cap on walk-on-spheres jumps.
const WOS_STEP_CAP: u64 = 1_000_000;
/// Per-walk cap on Euler–Maruyama increments.
const EM_STEP_CAP: u64 = 100_000_000;

/// An exit event: a boundary position and, for time-resolving samplers, the
/// exit time in Brownian time units.
#[derive(Clone, Copy, Debug)]
pub struct ExitSample {
    pub position: Point2,
    pub time: Option<f64>,
}

/// Sampler parameters.
#[derive(Clone, Debug)]
pub struct SamplerConfig {
    /// Walk-on-spheres absorption shell.
    pub epsilon: f64,
    /// Euler–Maruyama time step.
    pub dt: f64,
    pub seed: u64,
    pub n_samples: usize,
    /// Worker count recorded for manifests; `0` inherits the ambient thread
    /// pool. The chunked-stream contract makes results independent of it.
    pub workers: usize,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            epsilon: 1e-4,
            dt: 1e-5,
            seed: 0,
            n_samples: 10_000,
            workers: 0,
        }
    }
}

impl SamplerConfig {
    fn validate(&self) -> Result<()> {
        if self.epsilon.is_nan() || self.epsilon <= 0.0 || self.epsilon.is_infinite() {
            return Err(Error::InvalidConfig(format!(
                "epsilon must be positive, got {}",
                self.epsilon
            )));
        }
        if self.dt.is_nan() || self.dt <= 0.0 || self.dt.is_infinite() {
            return Err(Error::InvalidConfig(format!(
                "dt must be positive, got {}",
                self.dt
            )));
        }
        if self.n_samples == 0 {
            return Err(Error::InvalidConfig("n_samples must be positive".into()));
        }
        Ok(())
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn run_chunked<F>(n: usize, seed: u64, walk: F) -> Result<Vec<ExitSample>>
where
    F: Fn(&mut ChaCha8Rng) -> Result<ExitSample> + Send + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let per_chunk: Vec<Result<Vec<ExitSample>>> = exec::map_indices(chunks, |c| {
        let mut rng = chunk_rng(seed, c as u64);
        let count = CHUNK.min(n - c * CHUNK);
        (0..count).map(|_| walk(&mut rng)).collect()
    });
    let mut out = Vec::with_capacity(n);
    for chunk in per_chunk {
        out.extend(chunk?);
    }
    Ok(out)
}

/// Walk-on-spheres exit sampler (positions only).
pub fn sample_exit_wos(domain: &Domain, cfg: &SamplerConfig) -> Result<Vec<ExitSample>> {
    cfg.validate()?;
    let start_gap = domain.distance_to_boundary(Point2::ORIGIN)?;
    if cfg.epsilon >= start_gap {
        return Err(Error::InvalidConfig(format!(
            "epsilon {} is not below the origin's boundary distance {start_gap}",
            cfg.epsilon
        )));
    }
    run_chunked(cfg.n_samples, cfg.seed, |rng| {
        let mut p = Point2::ORIGIN;
        let mut steps: u64 = 0;
        loop {
            let d = domain.boundary_distance(p);
            if d <= cfg.epsilon {
                return Ok(ExitSample {
                    position: domain.closest_boundary_point(p),
                    time: None,
                });
            }
            let angle = rng.random::<f64>() * TAU;
            p = Point2::new(p.x + d * angle.cos(), p.y + d * angle.sin());
            steps += 1;
            if steps >= WOS_STEP_CAP {
                return Err(Error::StepCapExceeded {
                    max_steps: WOS_STEP_CAP,
                });
            }
        }
    })
}

/// Euler–Maruyama exit sampler (positions and times). Each coordinate
/// increment is `sqrt(dt) * N(0,1)`; the exit is the first lattice time at
/// which the path is outside, with the position projected to the nearest
/// boundary point.
pub fn sample_exit_em(domain: &Domain, cfg: &SamplerConfig) -> Result<Vec<ExitSample>> {
    cfg.validate()?;
    let sqrt_dt = cfg.dt.sqrt();
    run_chunked(cfg.n_samples, cfg.seed, |rng| {
        let mut p = Point2::ORIGIN;
        let mut steps: u64 = 0;
        loop {
            let gx: f64 = rng.sample(StandardNormal);
            let gy: f64 = rng.sample(StandardNormal);
            let q = Point2::new(p.x + sqrt_dt * gx, p.y + sqrt_dt * gy);
            steps += 1;
            if !domain.contains(q) {
                return Ok(ExitSample {
                    position: domain.closest_boundary_point(q),
                    time: Some(steps as f64 * cfg.dt),
                });
            }
            p = q;
            if steps >= EM_STEP_CAP {
                return Err(Error::StepCapExceeded {
                    max_steps: EM_STEP_CAP,
                });
            }
        }
    })
}

/// Exact harmonic-measure sampler for a disc seen from the origin.
///
/// In unit-disc coordinates the start point is `w = -center / radius`; the
/// exit law is the pushforward of the uniform boundary angle through the
/// automorphism `z -> (z + w) / (1 + conj(w) z)`, which maps 0 to `w`.
pub fn sample_disc_exit_exact(
    center: Point2,
    radius: f64,
    cfg: &SamplerConfig,
) -> Result<Vec<ExitSample>> {
    cfg.validate()?;
    if radius.is_nan() || radius <= 0.0 || radius.is_infinite() {
        return Err(Error::InvalidRadius(radius));
    }
    if center.norm() >= radius {
        return Err(Error::OriginNotInterior);
    }
    let w = Complex64::new(-center.x / radius, -center.y / radius);
    run_chunked(cfg.n_samples, cfg.seed, |rng| {
        let angle = rng.random::<f64>() * TAU;
        let z = Complex64::from_polar(1.0, angle);
        let m = (z + w) / (Complex64::new(1.0, 0.0) + w.conj() * z);
        Ok(ExitSample {
            position: Point2::new(center.x + radius * m.re, center.y + radius * m.im),
            time: None,
        })
    })
}

/// Sorted real parts of a batch of exit samples.
pub fn sorted_re(samples: &[ExitSample]) -> Vec<f64> {
    let mut xs: Vec<f64> = samples.iter().map(|s| s.position.x).collect();
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite positions"));
    xs
}

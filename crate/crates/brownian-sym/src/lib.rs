//! Brownian (Gross) and Steiner symmetrization of planar domains.
//!
//! Given a bounded simply connected domain `U` containing the origin, the
//! exit position of a planar Brownian motion started at the origin induces a
//! law `mu` for its real part. The Brownian symmetrization of `U` is the
//! Gross-type domain rebuilt from `mu`: expand the circle pullback of the
//! quantile function of `mu` in cosines and map the unit disc through the
//! power series with those coefficients. The Steiner symmetrization replaces
//! every vertical slice of `U` by a centred interval of the same length.
//!
//! The crate provides:
//!
//! * [`geometry`] — planar domains (simple polygons, discs) and their queries,
//! * [`distributions`] — exit laws with CDF, quantile and circle pullback,
//! * [`sampler`] — walk-on-spheres, Euler–Maruyama and exact-disc exit samplers,
//! * [`gross`] — Fourier coefficients, boundary curves and the full pipeline,
//! * [`steiner`] — profile-based Steiner symmetrization,
//! * [`eigen`] — principal Dirichlet eigenvalue by finite differences,
//! * [`stats`] — Kolmogorov–Smirnov helpers for the verification suites.
//!
//! Monte Carlo sampling and the heavy inner loops are data-parallel (rayon)
//! when the default `parallel` feature is enabled and fall back to sequential
//! loops without it; results are bit-identical either way because work is
//! split at fixed chunk boundaries and assembled by index.

pub mod distributions;
pub mod eigen;
mod error;
pub(crate) mod exec;
pub mod geometry;
pub mod gross;
pub mod sampler;
pub mod stats;
pub mod steiner;

pub use distributions::{Distribution, DistributionSpec};
pub use error::{Error, Result};
pub use exec::with_workers;
pub use geometry::{builtin, Domain, DomainSpec, Point2};
pub use gross::{brownian_symmetrize, BoundaryCurve, FourierMap};
pub use sampler::{ExitSample, SamplerConfig};
pub use steiner::{steiner_symmetrize, SymmetrizedRegion};

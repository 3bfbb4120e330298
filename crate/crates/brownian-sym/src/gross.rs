//! The Gross construction: cosine coefficients of the circle pullback
//! `phi(theta) = G(|theta|/pi)` of a quantile function, the truncated disc
//! map `psi(z) = sum phi_hat(n) z^n`, its boundary curve, and the Brownian
//! symmetrization pipeline that composes the walk-on-spheres sampler with
//! the empirical quantile and this expansion.
//!
//! Coefficients are
//!
//! ```text
//! phi_hat(n) = (2/pi) * integral_0^pi G(theta/pi) cos(n theta) dtheta
//! ```
//!
//! (`phi_hat(0)` vanishes because the law is centred and is never stored;
//! index 1 is the first element). Two integration routes:
//!
//! * smooth quantiles: composite 16-node Gauss–Legendre panels, doubled
//!   until the first 64 coefficients are stable to 1e-8;
//! * piecewise-constant quantiles (atomic laws, empirical laws): exact
//!   closed-form integration of each step, which avoids stacking quadrature
//!   error on top of Monte Carlo error.

use std::f64::consts::PI;

use crate::distributions::Distribution;
use crate::exec;
use crate::geometry::{first_self_intersection, Domain, Point2};
use crate::sampler::{sample_exit_wos, SamplerConfig};
use crate::{Error, Result};

/// 16-node Gauss–Legendre rule on [-1, 1]: positive abscissae and weights.
const GL16: [(f64, f64); 8] = [
    (0.09501250983763744, 0.1894506104550685),
    (0.2816035507792589, 0.18260341504492358),
    (0.45801677765722737, 0.16915651939500254),
    (0.6178762444026438, 0.14959598881657674),
    (0.755404408355003, 0.12462897125553388),
    (0.8656312023878318, 0.09515851168249279),
    (0.9445750230732326, 0.06225352393864789),
    (0.9894009349916499, 0.02715245941175409),
];

const QUAD_START_PANELS: usize = 512;
const QUAD_MAX_PANELS: usize = 16_384;
const QUAD_TOL: f64 = 1e-8;

/// Truncated coefficient vector of the disc map `psi`. Entry `k` holds
/// `phi_hat(k + 1)`.
#[derive(Clone, Debug)]
pub struct FourierMap {
    coeffs: Vec<f64>,
}

impl FourierMap {
    /// Cosine coefficients `phi_hat(1..=n_coeffs)` of the circle pullback of
    /// the quantile of `dist`.
    pub fn from_distribution(dist: &Distribution, n_coeffs: usize) -> Result<FourierMap> {
        assert!(n_coeffs >= 1, "need at least one coefficient");
        let coeffs = match dist.quantile_steps() {
            Some(steps) => coefficients_from_steps(&steps, n_coeffs),
            None => coefficients_by_quadrature(dist, n_coeffs)?,
        };
        FourierMap::from_coefficients(coeffs)
    }

    /// Wraps raw coefficients (index 0 is `phi_hat(1)`).
    pub fn from_coefficients(coeffs: Vec<f64>) -> Result<FourierMap> {
        if coeffs.is_empty() || coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidSpec(
                "coefficients must be a nonempty finite vector".into(),
            ));
        }
        Ok(FourierMap { coeffs })
    }

    /// `phi_hat(n)` for `n >= 1`; zero beyond the truncation order.
    pub fn coefficient(&self, n: usize) -> f64 {
        if n == 0 || n > self.coeffs.len() {
            0.0
        } else {
            self.coeffs[n - 1]
        }
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len()
    }

    /// Area of the image domain: `pi * sum n * phi_hat(n)^2`.
    pub fn area(&self) -> f64 {
        let mut s = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            s += (k + 1) as f64 * c * c;
        }
        PI * s
    }

    /// Fejér (Cesàro) smoothing: coefficient `n` scaled by `1 - n/(N+1)`.
    /// Suppresses the Gibbs oscillation at atoms at the cost of changing the
    /// area formula inputs; the raw partial sums are the default everywhere.
    pub fn cesaro(&self) -> FourierMap {
        let n_plus_1 = (self.coeffs.len() + 1) as f64;
        FourierMap {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * (1.0 - (k + 1) as f64 / n_plus_1))
                .collect(),
        }
    }

    /// Boundary curve `psi(e^{i theta})` on the uniform midpoint grid of `m`
    /// angles over `(-pi, pi)`.
    pub fn boundary_curve(&self, m: usize) -> BoundaryCurve {
        assert!(m >= 8, "need at least 8 curve points");
        let step = std::f64::consts::TAU / m as f64;
        let coeffs = &self.coeffs;
        let thetas: Vec<f64> = (0..m).map(|k| -PI + (k as f64 + 0.5) * step).collect();
        let points = exec::map_indices(m, |k| {
            let theta = thetas[k];
            let (mut x, mut y) = (0.0, 0.0);
            for (j, c) in coeffs.iter().enumerate() {
                let (s, ccos) = ((j + 1) as f64 * theta).sin_cos();
                x += c * ccos;
                y += c * s;
            }
            Point2::new(x, y)
        });
        BoundaryCurve { thetas, points }
    }
}

fn coefficients_by_quadrature(dist: &Distribution, n_coeffs: usize) -> Result<Vec<f64>> {
    let mut panels = QUAD_START_PANELS;
    let mut prev = quadrature_pass(dist, n_coeffs, panels)?;
    loop {
        let next_panels = panels * 2;
        let cur = quadrature_pass(dist, n_coeffs, next_panels)?;
        let check = n_coeffs.min(64);
        let (mut worst, mut worst_n) = (0.0f64, 1usize);
        for k in 0..check {
            let d = (cur[k] - prev[k]).abs();
            if d > worst {
                worst = d;
                worst_n = k + 1;
            }
        }
        if worst < QUAD_TOL {
            return Ok(cur);
        }
        if next_panels >= QUAD_MAX_PANELS {
            return Err(Error::QuadratureNonConvergence {
                n: worst_n,
                delta: worst,
                panels: next_panels,
            });
        }
        panels = next_panels;
        prev = cur;
    }
}

fn quadrature_pass(dist: &Distribution, n_coeffs: usize, panels: usize) -> Result<Vec<f64>> {
    let width = PI / panels as f64;
    let half = width / 2.0;
    // evaluate phi once per node; nodes are strictly inside (0, pi)
    let mut nodes = Vec::with_capacity(panels * 16);
    for p in 0..panels {
        let mid = (p as f64 + 0.5) * width;
        for &(t, w) in &GL16 {
            nodes.push((mid - half * t, w * half));
            nodes.push((mid + half * t, w * half));
        }
    }
    let mut values = Vec::with_capacity(nodes.len());
    for &(theta, _) in &nodes {
        values.push(dist.quantile(theta / PI)?);
    }
    Ok(exec::map_indices(n_coeffs, |k| {
        let n = (k + 1) as f64;
        let mut s = 0.0;
        for (i, &(theta, w)) in nodes.iter().enumerate() {
            s += w * values[i] * (n * theta).cos();
        }
        s * 2.0 / PI
    }))
}

/// Exact integration of a piecewise-constant pullback: for each step of
/// value `v` on `(theta_lo, theta_hi)`,
/// `integral v cos(n theta) = v (sin(n theta_hi) - sin(n theta_lo)) / n`.
fn coefficients_from_steps(steps: &[(f64, f64)], n_coeffs: usize) -> Vec<f64> {
    exec::map_indices(n_coeffs, |k| {
        let n = (k + 1) as f64;
        let mut s = 0.0;
        let mut sin_lo = 0.0; // sin(n * 0)
        for &(theta_hi, value) in steps {
            let sin_hi = (n * theta_hi).sin();
            s += value * (sin_hi - sin_lo);
            sin_lo = sin_hi;
        }
        s * 2.0 / (PI * n)
    })
}

/// Discretized boundary curve `psi(e^{i theta})`.
#[derive(Clone, Debug)]
pub struct BoundaryCurve {
    thetas: Vec<f64>,
    points: Vec<Point2>,
}

/// A near-vertical boundary run: common abscissa and total vertical extent.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerticalSegment {
    pub x: f64,
    pub length: f64,
}

impl BoundaryCurve {
    /// Rebuilds a curve from stored angles and points (e.g. a curve CSV);
    /// the lists must have equal nonzero length and strictly increasing
    /// angles.
    pub fn from_parts(thetas: Vec<f64>, points: Vec<Point2>) -> Result<BoundaryCurve> {
        if thetas.len() != points.len() || thetas.is_empty() {
            return Err(Error::InvalidSpec(
                "curve needs matching nonempty theta and point lists".into(),
            ));
        }
        if thetas.windows(2).any(|w| w[0] >= w[1] || w[0].is_nan() || w[1].is_nan()) {
            return Err(Error::InvalidSpec(
                "curve angles must be strictly increasing".into(),
            ));
        }
        Ok(BoundaryCurve { thetas, points })
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Length of the closed polyline through the curve points.
    pub fn length(&self) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| self.points[i].dist(self.points[(i + 1) % n]))
            .sum()
    }

    /// `true` when no two non-adjacent polyline segments intersect, plus the
    /// first offending segment pair otherwise.
    pub fn is_simple(&self) -> (bool, Option<(usize, usize)>) {
        match first_self_intersection(&self.points) {
            None => (true, None),
            Some(pair) => (false, Some(pair)),
        }
    }

    /// Detects near-vertical boundary runs. Three passes:
    ///
    /// 1. greedily group consecutive points (wrapping around the closure)
    ///    while the group's x-range stays within `2 * x_tol`;
    /// 2. keep groups whose vertical extent is at least `min_len`;
    /// 3. cluster surviving groups whose x-locations agree within
    ///    `2 * x_tol` (a wall chopped up by sampling noise or by the Gibbs
    ///    oscillation reports as one location).
    ///
    /// Returns `(x, total length)` per cluster, sorted by `x`.
    pub fn vertical_segments(&self, x_tol: f64, min_len: f64) -> Vec<VerticalSegment> {
        #[derive(Clone, Copy)]
        struct Run {
            x_lo: f64,
            x_hi: f64,
            y_lo: f64,
            y_hi: f64,
        }
        let mut runs: Vec<Run> = Vec::new();
        let mut cur: Option<Run> = None;
        for &p in &self.points {
            match cur {
                None => {
                    cur = Some(Run {
                        x_lo: p.x,
                        x_hi: p.x,
                        y_lo: p.y,
                        y_hi: p.y,
                    });
                }
                Some(mut r) => {
                    if p.x.max(r.x_hi) - p.x.min(r.x_lo) <= 2.0 * x_tol {
                        r.x_lo = r.x_lo.min(p.x);
                        r.x_hi = r.x_hi.max(p.x);
                        r.y_lo = r.y_lo.min(p.y);
                        r.y_hi = r.y_hi.max(p.y);
                        cur = Some(r);
                    } else {
                        runs.push(r);
                        cur = Some(Run {
                            x_lo: p.x,
                            x_hi: p.x,
                            y_lo: p.y,
                            y_hi: p.y,
                        });
                    }
                }
            }
        }
        if let Some(r) = cur {
            runs.push(r);
        }
        // the curve is closed: merge the first and last run when compatible
        if runs.len() >= 2 {
            let (first, last) = (runs[0], runs[runs.len() - 1]);
            if first.x_hi.max(last.x_hi) - first.x_lo.min(last.x_lo) <= 2.0 * x_tol {
                let merged = Run {
                    x_lo: first.x_lo.min(last.x_lo),
                    x_hi: first.x_hi.max(last.x_hi),
                    y_lo: first.y_lo.min(last.y_lo),
                    y_hi: first.y_hi.max(last.y_hi),
                };
                runs[0] = merged;
                runs.pop();
            }
        }
        let mut kept: Vec<(f64, f64)> = runs
            .iter()
            .filter(|r| r.y_hi - r.y_lo >= min_len)
            .map(|r| (0.5 * (r.x_lo + r.x_hi), r.y_hi - r.y_lo))
            .collect();
        kept.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite locations"));
        let mut out: Vec<VerticalSegment> = Vec::new();
        let mut i = 0;
        while i < kept.len() {
            let mut j = i + 1;
            while j < kept.len() && kept[j].0 - kept[j - 1].0 <= 2.0 * x_tol {
                j += 1;
            }
            let total: f64 = kept[i..j].iter().map(|(_, l)| l).sum();
            let weighted: f64 = kept[i..j].iter().map(|(x, l)| x * l).sum();
            out.push(VerticalSegment {
                x: weighted / total,
                length: total,
            });
            i = j;
        }
        out
    }
}

/// Symmetric Hausdorff distance between two closed polylines, using exact
/// point-to-segment distances against densely sampled vertices.
pub fn hausdorff_distance(a: &[Point2], b: &[Point2]) -> f64 {
    directed_hausdorff(a, b).max(directed_hausdorff(b, a))
}

fn directed_hausdorff(from: &[Point2], to: &[Point2]) -> f64 {
    let n = to.len();
    let dists = exec::map_indices(from.len(), |i| {
        let p = from[i];
        let mut best = f64::INFINITY;
        for j in 0..n {
            let d = point_segment_distance(p, to[j], to[(j + 1) % n]);
            if d < best {
                best = d;
            }
        }
        best
    });
    dists.into_iter().fold(0.0, f64::max)
}

fn point_segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    p.dist(Point2::new(a.x + t * dx, a.y + t * dy))
}

/// The Brownian symmetrization pipeline: sample exits by walk-on-spheres,
/// centre the empirical law of the real parts, expand its pullback in
/// cosines and evaluate the boundary curve.
pub fn brownian_symmetrize(
    domain: &Domain,
    cfg: &SamplerConfig,
    n_coeffs: usize,
    m_points: usize,
) -> Result<(FourierMap, BoundaryCurve)> {
    let samples = sample_exit_wos(domain, cfg)?;
    let xs: Vec<f64> = samples.iter().map(|s| s.position.x).collect();
    let dist = Distribution::empirical(&xs)?;
    let map = FourierMap::from_distribution(&dist, n_coeffs)?;
    let curve = map.boundary_curve(m_points);
    Ok((map, curve))
}

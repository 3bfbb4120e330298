//! Steiner symmetrization over the real axis.
//!
//! The symmetrized set is represented by its profile: for each abscissa `x`
//! of a grid spanning the horizontal extent, half the total slice length
//! `l(x)/2`. Symmetry over the real axis and vertical convexity (every
//! slice a single centred interval) hold by construction. For polygons the
//! grid is augmented with every vertex abscissa and the slice profile is
//! piecewise linear between grid points, so the trapezoid area is exact.

use crate::exec;
use crate::geometry::{Domain, Point2};
use crate::{Error, Result};

/// The profile of a Steiner-symmetrized domain: slices `{x_k} x
/// (-h_k, h_k)` with polygonal interpolation between grid abscissae.
#[derive(Clone, Debug)]
pub struct SymmetrizedRegion {
    x_grid: Vec<f64>,
    half_lengths: Vec<f64>,
}

/// Steiner symmetrization of `domain` over the real axis, on a uniform grid
/// of `grid_n` abscissae augmented with all polygon vertex abscissae. At a
/// vertex abscissa the essential (one-sided limit) slice length is used, so
/// boundary segments lying on the slicing line do not pinch the profile.
pub fn steiner_symmetrize(domain: &Domain, grid_n: usize) -> SymmetrizedRegion {
    assert!(grid_n >= 2, "need at least two grid points");
    let (x0, x1) = domain.x_extent();
    let mut xs: Vec<f64> = (0..grid_n)
        .map(|k| x0 + (x1 - x0) * k as f64 / (grid_n - 1) as f64)
        .collect();
    if let Some(vertices) = domain.vertices() {
        xs.extend(vertices.iter().map(|v| v.x));
    }
    xs.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite grid"));
    xs.dedup();
    let half_lengths =
        exec::map_indices_grained(xs.len(), 2048, |k| domain.slice_measure_upper(xs[k]) / 2.0);
    SymmetrizedRegion {
        x_grid: xs,
        half_lengths,
    }
}

impl SymmetrizedRegion {
    pub fn x_grid(&self) -> &[f64] {
        &self.x_grid
    }

    pub fn half_lengths(&self) -> &[f64] {
        &self.half_lengths
    }

    /// Trapezoid integral of the full slice lengths `2 h(x)`.
    pub fn area(&self) -> f64 {
        let mut s = 0.0;
        for k in 1..self.x_grid.len() {
            s += (self.x_grid[k] - self.x_grid[k - 1])
                * (self.half_lengths[k] + self.half_lengths[k - 1]);
        }
        s
    }

    /// Perimeter of the profile domain: the upper polyline doubled plus the
    /// vertical closures at the extent endpoints where the profile is open.
    pub fn perimeter(&self) -> f64 {
        let n = self.x_grid.len();
        let mut upper = 0.0;
        for k in 1..n {
            let dx = self.x_grid[k] - self.x_grid[k - 1];
            let dh = self.half_lengths[k] - self.half_lengths[k - 1];
            upper += (dx * dx + dh * dh).sqrt();
        }
        2.0 * upper + 2.0 * self.half_lengths[0] + 2.0 * self.half_lengths[n - 1]
    }

    /// Closed boundary polyline of the profile domain (counterclockwise:
    /// lower chain left to right, then upper chain back).
    pub fn boundary_points(&self) -> Vec<Point2> {
        let n = self.x_grid.len();
        let mut pts = Vec::with_capacity(2 * n);
        for k in 0..n {
            pts.push(Point2::new(self.x_grid[k], -self.half_lengths[k]));
        }
        for k in (0..n).rev() {
            pts.push(Point2::new(self.x_grid[k], self.half_lengths[k]));
        }
        // zero-length end slices yield duplicate corner points; drop them
        let mut dedup: Vec<Point2> = Vec::with_capacity(pts.len());
        for p in pts {
            if dedup.last() != Some(&p) {
                dedup.push(p);
            }
        }
        while dedup.len() > 1 && dedup.first() == dedup.last() {
            dedup.pop();
        }
        dedup
    }

    /// Converts the profile into a polygon domain, collapsing zero-length
    /// end slices to single vertices. Fails when the region has no interior
    /// or the origin is not inside it.
    pub fn to_domain(&self) -> Result<Domain> {
        let pts = self.boundary_points();
        if pts.len() < 3 || self.half_lengths.iter().all(|&h| h == 0.0) {
            return Err(Error::EmptyRegion);
        }
        Domain::polygon(pts)
    }
}

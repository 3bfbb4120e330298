//! Planar domains (simple polygons and discs) and the geometric queries the
//! samplers and symmetrizers are built on: membership, boundary distance,
//! vertical slice measure and area.
//!
//! Domains are validated at construction (simple boundary, origin strictly
//! interior) and immutable afterwards, so every query is a pure function that
//! can be called concurrently.

use serde::{Deserialize, Serialize};

use crate::exec;
use crate::{Error, Result};

/// A point of the plane; `x` plays the role of the real part, `y` the
/// imaginary part.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Point2 { x, y }
    }

    pub fn dist(self, other: Point2) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }

    pub fn norm(self) -> f64 {
        (self.x * self.x + self.y * self.y).sqrt()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// `p` lies on the closed segment `[a, b]` (exact arithmetic on the cross
/// product; adequate for the axis-aligned fixtures, best effort otherwise).
fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    cross(a, b, p) == 0.0
        && p.x >= a.x.min(b.x)
        && p.x <= a.x.max(b.x)
        && p.y >= a.y.min(b.y)
        && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection test, collinear overlaps included.
fn segments_intersect(a: Point2, b: Point2, c: Point2, d: Point2) -> bool {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(c, d, a))
        || (d2 == 0.0 && on_segment(c, d, b))
        || (d3 == 0.0 && on_segment(a, b, c))
        || (d4 == 0.0 && on_segment(a, b, d))
}

fn closest_on_segment(a: Point2, b: Point2, p: Point2) -> Point2 {
    let dx = b.x - a.x;
    let dy = b.y - a.y;
    let len2 = dx * dx + dy * dy;
    if len2 == 0.0 {
        return a;
    }
    let t = (((p.x - a.x) * dx + (p.y - a.y) * dy) / len2).clamp(0.0, 1.0);
    Point2::new(a.x + t * dx, a.y + t * dy)
}

/// First pair of non-adjacent segments of the closed polyline `points` that
/// intersect, scanning in index order. `None` means the polyline is simple.
pub(crate) fn first_self_intersection(points: &[Point2]) -> Option<(usize, usize)> {
    let n = points.len();
    if n < 4 {
        return None;
    }
    let seg = |i: usize| (points[i], points[(i + 1) % n]);
    // bounding boxes for cheap rejection
    let boxes: Vec<[f64; 4]> = (0..n)
        .map(|i| {
            let (a, b) = seg(i);
            [a.x.min(b.x), a.x.max(b.x), a.y.min(b.y), a.y.max(b.y)]
        })
        .collect();
    exec::find_first_index(n, |i| {
        let (a, b) = seg(i);
        let bi = &boxes[i];
        for (j, bj) in boxes.iter().enumerate().skip(i + 2) {
            if i == 0 && j == n - 1 {
                continue; // closing segment is adjacent to the first one
            }
            if bi[1] < bj[0] || bj[1] < bi[0] || bi[3] < bj[2] || bj[3] < bi[2] {
                continue;
            }
            let (c, d) = seg(j);
            if segments_intersect(a, b, c, d) {
                return Some((i, j));
            }
        }
        None
    })
}

#[derive(Clone, Debug)]
enum Shape {
    Polygon(Vec<Point2>),
    Disc { center: Point2, radius: f64 },
}

/// A bounded planar domain: a simple polygon (counterclockwise, implicitly
/// closed) or a disc. The origin is always strictly interior.
#[derive(Clone, Debug)]
pub struct Domain {
    shape: Shape,
}

impl Domain {
    /// Builds a simple polygon. The vertex order is normalized to
    /// counterclockwise; construction fails on fewer than three vertices,
    /// repeated consecutive vertices, self-intersections, or when the origin
    /// is not strictly interior.
    pub fn polygon(vertices: Vec<Point2>) -> Result<Domain> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        if let Some(k) = vertices.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPolygon(format!(
                "non-finite vertex at index {k}"
            )));
        }
        let n = vertices.len();
        for i in 0..n {
            if vertices[i] == vertices[(i + 1) % n] {
                return Err(Error::InvalidPolygon(format!(
                    "consecutive vertices {i} and {} are equal",
                    (i + 1) % n
                )));
            }
        }
        // reject spikes: three consecutive collinear vertices that backtrack
        for i in 0..n {
            let a = vertices[i];
            let b = vertices[(i + 1) % n];
            let c = vertices[(i + 2) % n];
            let turn = cross(a, b, c);
            let dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
            if turn == 0.0 && dot < 0.0 {
                return Err(Error::InvalidPolygon(format!(
                    "edge {} backtracks over edge {i}",
                    (i + 1) % n
                )));
            }
        }
        let mut vertices = vertices;
        if signed_area(&vertices) < 0.0 {
            vertices.reverse();
        }
        if let Some((i, j)) = first_self_intersection(&vertices) {
            return Err(Error::InvalidPolygon(format!(
                "edges {i} and {j} intersect"
            )));
        }
        let domain = Domain {
            shape: Shape::Polygon(vertices),
        };
        if !domain.contains(Point2::ORIGIN) {
            return Err(Error::OriginNotInterior);
        }
        Ok(domain)
    }

    /// Builds a disc with the origin strictly inside.
    pub fn disc(center: Point2, radius: f64) -> Result<Domain> {
        if radius.is_nan() || radius <= 0.0 || radius.is_infinite() {
            return Err(Error::InvalidRadius(radius));
        }
        if center.norm() >= radius {
            return Err(Error::OriginNotInterior);
        }
        Ok(Domain {
            shape: Shape::Disc { center, radius },
        })
    }

    pub fn unit_disc() -> Domain {
        Domain::disc(Point2::ORIGIN, 1.0).expect("unit disc is valid")
    }

    /// Polygon vertices in counterclockwise order, `None` for discs.
    pub fn vertices(&self) -> Option<&[Point2]> {
        match &self.shape {
            Shape::Polygon(v) => Some(v),
            Shape::Disc { .. } => None,
        }
    }

    pub fn disc_params(&self) -> Option<(Point2, f64)> {
        match &self.shape {
            Shape::Polygon(_) => None,
            Shape::Disc { center, radius } => Some((*center, *radius)),
        }
    }

    /// Strict interior membership; boundary points are outside.
    pub fn contains(&self, p: Point2) -> bool {
        match &self.shape {
            Shape::Disc { center, radius } => {
                let dx = p.x - center.x;
                let dy = p.y - center.y;
                dx * dx + dy * dy < radius * radius
            }
            Shape::Polygon(vs) => {
                let n = vs.len();
                for i in 0..n {
                    if on_segment(vs[i], vs[(i + 1) % n], p) {
                        return false;
                    }
                }
                // even-odd crossing count for the ray towards +x
                let mut inside = false;
                for i in 0..n {
                    let a = vs[i];
                    let b = vs[(i + 1) % n];
                    if (a.y > p.y) != (b.y > p.y) {
                        let t = (p.y - a.y) / (b.y - a.y);
                        if a.x + t * (b.x - a.x) > p.x {
                            inside = !inside;
                        }
                    }
                }
                inside
            }
        }
    }

    /// Unsigned Euclidean distance from `p` to the boundary.
    pub fn boundary_distance(&self, p: Point2) -> f64 {
        match &self.shape {
            Shape::Disc { center, radius } => (radius - p.dist(*center)).abs(),
            Shape::Polygon(vs) => {
                let n = vs.len();
                let mut best = f64::INFINITY;
                for i in 0..n {
                    let q = closest_on_segment(vs[i], vs[(i + 1) % n], p);
                    best = best.min(p.dist(q));
                }
                best
            }
        }
    }

    /// Distance from an interior point to the boundary; errors when `p` is
    /// not strictly interior.
    pub fn distance_to_boundary(&self, p: Point2) -> Result<f64> {
        if !self.contains(p) {
            return Err(Error::PointNotInterior(p.x, p.y));
        }
        Ok(self.boundary_distance(p))
    }

    /// Nearest boundary point to `p` (used to place walk-on-spheres exits on
    /// the boundary itself).
    pub fn closest_boundary_point(&self, p: Point2) -> Point2 {
        match &self.shape {
            Shape::Disc { center, radius } => {
                let d = p.dist(*center);
                if d == 0.0 {
                    return Point2::new(center.x + radius, center.y);
                }
                Point2::new(
                    center.x + (p.x - center.x) / d * radius,
                    center.y + (p.y - center.y) / d * radius,
                )
            }
            Shape::Polygon(vs) => {
                let n = vs.len();
                let mut best = vs[0];
                let mut best_d = f64::INFINITY;
                for i in 0..n {
                    let q = closest_on_segment(vs[i], vs[(i + 1) % n], p);
                    let d = p.dist(q);
                    if d < best_d {
                        best_d = d;
                        best = q;
                    }
                }
                best
            }
        }
    }

    /// 1D Lebesgue measure of the vertical line `{Re = x}` intersected with
    /// the open domain.
    pub fn slice_measure(&self, x: f64) -> f64 {
        match &self.shape {
            Shape::Disc { center, radius } => disc_chord(*center, *radius, x),
            Shape::Polygon(vs) => {
                let right = slice_intervals(vs, x, true);
                let left = slice_intervals(vs, x, false);
                intersect_length(&right, &left)
            }
        }
    }

    /// Larger of the two one-sided limits of the slice measure at `x`. Equal
    /// to [`Domain::slice_measure`] away from vertex abscissae; at a vertex
    /// abscissa it recovers the essential slice length (boundary segments on
    /// the line do not shrink it), which is what Steiner symmetrization
    /// integrates exactly.
    pub fn slice_measure_upper(&self, x: f64) -> f64 {
        match &self.shape {
            Shape::Disc { center, radius } => disc_chord(*center, *radius, x),
            Shape::Polygon(vs) => {
                let right: f64 = slice_intervals(vs, x, true)
                    .iter()
                    .map(|(a, b)| b - a)
                    .sum();
                let left: f64 = slice_intervals(vs, x, false)
                    .iter()
                    .map(|(a, b)| b - a)
                    .sum();
                right.max(left)
            }
        }
    }

    pub fn area(&self) -> f64 {
        match &self.shape {
            Shape::Disc { radius, .. } => std::f64::consts::PI * radius * radius,
            Shape::Polygon(vs) => signed_area(vs).abs(),
        }
    }

    pub fn perimeter(&self) -> f64 {
        match &self.shape {
            Shape::Disc { radius, .. } => std::f64::consts::TAU * radius,
            Shape::Polygon(vs) => {
                let n = vs.len();
                (0..n).map(|i| vs[i].dist(vs[(i + 1) % n])).sum()
            }
        }
    }

    /// Axis-aligned bounding box as `(min, max)` corners.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        match &self.shape {
            Shape::Disc { center, radius } => (
                Point2::new(center.x - radius, center.y - radius),
                Point2::new(center.x + radius, center.y + radius),
            ),
            Shape::Polygon(vs) => {
                let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
                let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
                for v in vs {
                    lo.x = lo.x.min(v.x);
                    lo.y = lo.y.min(v.y);
                    hi.x = hi.x.max(v.x);
                    hi.y = hi.y.max(v.y);
                }
                (lo, hi)
            }
        }
    }

    /// Horizontal extent `(x_min, x_max)`.
    pub fn x_extent(&self) -> (f64, f64) {
        let (lo, hi) = self.bounding_box();
        (lo.x, hi.x)
    }
}

fn signed_area(vs: &[Point2]) -> f64 {
    let n = vs.len();
    let mut s = 0.0;
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    s / 2.0
}

fn disc_chord(center: Point2, radius: f64, x: f64) -> f64 {
    let d = (x - center.x).abs();
    if d >= radius {
        0.0
    } else {
        2.0 * (radius * radius - d * d).sqrt()
    }
}

/// Sorted interior intervals of the vertical line at `x` under the half-open
/// crossing rule. `from_right` selects the `[min, max)` rule (the limit of
/// slices approaching from the right); the `(min, max]` rule gives the left
/// limit. Away from vertex abscissae both rules agree with the slice itself.
fn slice_intervals(vs: &[Point2], x: f64, from_right: bool) -> Vec<(f64, f64)> {
    let n = vs.len();
    let mut ys: Vec<f64> = Vec::new();
    for i in 0..n {
        let a = vs[i];
        let b = vs[(i + 1) % n];
        let (lo, hi) = (a.x.min(b.x), a.x.max(b.x));
        let crosses = if from_right {
            lo <= x && x < hi
        } else {
            lo < x && x <= hi
        };
        if crosses {
            let t = (x - a.x) / (b.x - a.x);
            ys.push(a.y + t * (b.y - a.y));
        }
    }
    ys.sort_unstable_by(|p, q| p.partial_cmp(q).expect("finite slice ordinates"));
    ys.chunks_exact(2).map(|c| (c[0], c[1])).collect()
}

fn intersect_length(a: &[(f64, f64)], b: &[(f64, f64)]) -> f64 {
    let mut total = 0.0;
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let lo = a[i].0.max(b[j].0);
        let hi = a[i].1.min(b[j].1);
        if hi > lo {
            total += hi - lo;
        }
        if a[i].1 < b[j].1 {
            i += 1;
        } else {
            j += 1;
        }
    }
    total
}

/// JSON-facing description of a domain.
///
/// `{"type":"polygon","vertices":[[x,y],...]}` or
/// `{"type":"disc","center":[x,y],"radius":r}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum DomainSpec {
    Polygon { vertices: Vec<[f64; 2]> },
    Disc { center: [f64; 2], radius: f64 },
}

impl DomainSpec {
    pub fn build(&self) -> Result<Domain> {
        match self {
            DomainSpec::Polygon { vertices } => Domain::polygon(
                vertices
                    .iter()
                    .map(|v| Point2::new(v[0], v[1]))
                    .collect(),
            ),
            DomainSpec::Disc { center, radius } => {
                Domain::disc(Point2::new(center[0], center[1]), *radius)
            }
        }
    }

    pub fn from_json(s: &str) -> Result<DomainSpec> {
        Ok(serde_json::from_str(s)?)
    }
}

/// Z-shaped union of the rectangles `(-1,0] x (-1/2,1)` and
/// `(0,1] x (-1,1/2)` glued along the gate `{x=0, |y|<1/2}`: two unit-by-1.5
/// rectangles whose exit law carries three atoms, at `x = -1, 0, 1`.
const Z_FIXTURE: [(f64, f64); 8] = [
    (-1.0, -0.5),
    (0.0, -0.5),
    (0.0, -1.0),
    (1.0, -1.0),
    (1.0, 0.5),
    (0.0, 0.5),
    (0.0, 1.0),
    (-1.0, 1.0),
];

/// Resolves a named builtin domain: `unit-disc`, `thm3-U`, or
/// `kappa-disc?kappa=K` (unit disc centred at `(0, -K)`).
pub fn builtin(name: &str) -> Result<Domain> {
    match name {
        "unit-disc" => Ok(Domain::unit_disc()),
        "thm3-U" => Domain::polygon(Z_FIXTURE.iter().map(|&(x, y)| Point2::new(x, y)).collect()),
        _ => {
            if let Some(rest) = name.strip_prefix("kappa-disc?kappa=") {
                let kappa: f64 = rest
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("bad kappa value {rest:?}")))?;
                if !(0.0..=0.99).contains(&kappa) {
                    return Err(Error::KappaOutOfRange(kappa));
                }
                Domain::disc(Point2::new(0.0, -kappa), 1.0)
            } else {
                Err(Error::InvalidSpec(format!("unknown builtin domain {name:?}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn rectangle() -> Domain {
        Domain::polygon(vec![
            Point2::new(-1.0, -0.75),
            Point2::new(1.0, -0.75),
            Point2::new(1.0, 0.75),
            Point2::new(-1.0, 0.75),
        ])
        .unwrap()
    }

    #[test]
    fn disc_contains() {
        let d = Domain::unit_disc();
        assert!(d.contains(Point2::ORIGIN));
        assert!(!d.contains(Point2::new(2.0, 0.0)));
        assert!(!d.contains(Point2::new(1.0, 0.0))); // boundary is outside
    }

    #[test]
    fn z_fixture_contains() {
        let u = builtin("thm3-U").unwrap();
        assert!(!u.contains(Point2::new(0.5, 0.75)));
        assert!(u.contains(Point2::new(0.5, -0.75)));
        assert!(u.contains(Point2::ORIGIN));
        assert!(u.contains(Point2::new(-0.5, 0.75)));
        // points of the gate line that lie on boundary edges are outside
        assert!(!u.contains(Point2::new(0.0, 0.75)));
        assert!(u.contains(Point2::new(0.0, 0.25)));
    }

    #[test]
    fn distance_to_boundary_examples() {
        let d = Domain::unit_disc();
        assert_relative_eq!(d.distance_to_boundary(Point2::ORIGIN).unwrap(), 1.0);
        assert_relative_eq!(
            d.distance_to_boundary(Point2::new(0.5, 0.0)).unwrap(),
            0.5
        );
        let r = rectangle();
        assert_relative_eq!(r.distance_to_boundary(Point2::ORIGIN).unwrap(), 0.75);
        assert!(r.distance_to_boundary(Point2::new(3.0, 0.0)).is_err());
    }

    #[test]
    fn slice_measure_examples() {
        let d = Domain::unit_disc();
        assert_relative_eq!(d.slice_measure(0.0), 2.0);
        assert_eq!(d.slice_measure(1.0), 0.0);
        assert_eq!(d.slice_measure(3.0), 0.0);
        let u = builtin("thm3-U").unwrap();
        assert_relative_eq!(u.slice_measure(-0.5), 1.5);
        assert_relative_eq!(u.slice_measure(0.5), 1.5);
        // on the gate line only the open gate is interior
        assert_relative_eq!(u.slice_measure(0.0), 1.0);
        // one-sided limits see the full essential slice there
        assert_relative_eq!(u.slice_measure_upper(0.0), 1.5);
        assert_relative_eq!(u.slice_measure_upper(-1.0), 1.5);
        assert_relative_eq!(u.slice_measure_upper(1.0), 1.5);
    }

    #[test]
    fn area_examples() {
        assert_relative_eq!(Domain::unit_disc().area(), std::f64::consts::PI);
        assert_relative_eq!(rectangle().area(), 3.0);
        assert_relative_eq!(builtin("thm3-U").unwrap().area(), 3.0);
    }

    #[test]
    fn perimeter_of_fixtures() {
        assert_relative_eq!(rectangle().perimeter(), 7.0);
        // sum of the eight polygon edges of the Z fixture
        assert_relative_eq!(builtin("thm3-U").unwrap().perimeter(), 8.0);
    }

    #[test]
    fn slice_integrates_to_area() {
        // midpoint rule over the horizontal extent, 1e4 panels
        for domain in [Domain::unit_disc(), rectangle(), builtin("thm3-U").unwrap()] {
            let (x0, x1) = domain.x_extent();
            let n = 10_000;
            let h = (x1 - x0) / n as f64;
            let total: f64 = (0..n)
                .map(|k| domain.slice_measure(x0 + (k as f64 + 0.5) * h) * h)
                .sum();
            assert_relative_eq!(total, domain.area(), max_relative = 1e-4);
        }
    }

    #[test]
    fn contains_iff_positive_distance() {
        let fixtures = [Domain::unit_disc(), builtin("thm3-U").unwrap()];
        for domain in &fixtures {
            let (lo, hi) = domain.bounding_box();
            // deterministic lattice probe over the bounding box
            for i in 0..61 {
                for j in 0..61 {
                    let p = Point2::new(
                        lo.x + (hi.x - lo.x) * i as f64 / 60.0,
                        lo.y + (hi.y - lo.y) * j as f64 / 60.0,
                    );
                    let inside = domain.contains(p);
                    let d = domain.boundary_distance(p);
                    if inside {
                        assert!(d > 0.0, "interior point at zero distance: {p:?}");
                    } else {
                        assert!(
                            domain.distance_to_boundary(p).is_err(),
                            "expected error outside at {p:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn constructor_rejects_bad_polygons() {
        assert!(Domain::polygon(vec![Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)]).is_err());
        assert!(Domain::polygon(vec![
            Point2::new(-1.0, -1.0),
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, 1.0),
        ])
        .is_err());
        // bowtie self-intersection
        assert!(Domain::polygon(vec![
            Point2::new(-1.0, -1.0),
            Point2::new(1.0, 1.0),
            Point2::new(-1.0, 1.0),
            Point2::new(1.0, -1.0),
        ])
        .is_err());
        // origin on the boundary
        assert!(matches!(
            Domain::polygon(vec![
                Point2::new(0.0, 0.0),
                Point2::new(1.0, 0.0),
                Point2::new(1.0, 1.0),
                Point2::new(0.0, 1.0),
            ]),
            Err(Error::OriginNotInterior)
        ));
        assert!(Domain::disc(Point2::ORIGIN, 0.0).is_err());
        assert!(Domain::disc(Point2::new(2.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn clockwise_input_is_normalized() {
        let ccw = rectangle();
        let cw = Domain::polygon(vec![
            Point2::new(-1.0, -0.75),
            Point2::new(-1.0, 0.75),
            Point2::new(1.0, 0.75),
            Point2::new(1.0, -0.75),
        ])
        .unwrap();
        assert_relative_eq!(ccw.area(), cw.area());
        assert_eq!(
            ccw.contains(Point2::new(0.3, 0.6)),
            cw.contains(Point2::new(0.3, 0.6))
        );
    }

    #[test]
    fn closest_boundary_point_is_on_boundary() {
        for domain in [Domain::unit_disc(), builtin("thm3-U").unwrap()] {
            for p in [
                Point2::ORIGIN,
                Point2::new(0.3, -0.2),
                Point2::new(-0.7, 0.4),
            ] {
                let q = domain.closest_boundary_point(p);
                assert!(domain.boundary_distance(q) < 1e-12);
                assert_relative_eq!(
                    p.dist(q),
                    domain.boundary_distance(p),
                    max_relative = 1e-12
                );
            }
        }
    }

    #[test]
    fn builtin_names() {
        assert!(builtin("unit-disc").is_ok());
        assert!(builtin("thm3-U").is_ok());
        let kd = builtin("kappa-disc?kappa=0.5").unwrap();
        let (c, r) = kd.disc_params().unwrap();
        assert_eq!((c.x, c.y, r), (0.0, -0.5, 1.0));
        assert!(builtin("nope").is_err());
        assert!(builtin("kappa-disc?kappa=1.5").is_err());
    }

    #[test]
    fn domain_spec_round_trip() {
        let spec = DomainSpec::from_json(r#"{"type":"disc","center":[0.0,-0.5],"radius":1.0}"#)
            .unwrap();
        let d = spec.build().unwrap();
        assert!(d.disc_params().is_some());
        let spec = DomainSpec::from_json(
            r#"{"type":"polygon","vertices":[[-1,-0.75],[1,-0.75],[1,0.75],[-1,0.75]]}"#,
        )
        .unwrap();
        assert_relative_eq!(spec.build().unwrap().area(), 3.0);
    }
}

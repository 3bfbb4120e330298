//! Kolmogorov–Smirnov distances used by the verification suites.

use crate::Distribution;

/// One-sample KS distance between a sorted sample and a reference law.
/// Tied sample values (atoms) are grouped; atoms of the reference are
/// handled through its left limits.
pub fn ks_distance(sorted: &[f64], dist: &Distribution) -> f64 {
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        let below = i;
        while i < sorted.len() && sorted[i] == x {
            i += 1;
        }
        let f = dist.cdf(x);
        d = d.max((i as f64 / n - f).abs());
        d = d.max((below as f64 / n - (f - dist.point_mass(x))).abs());
    }
    d
}

/// Two-sample KS distance between two sorted samples; ties are consumed on
/// both sides before the gap is measured.
pub fn ks_distance_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut d: f64 = 0.0;
    while i < a.len() || j < b.len() {
        let x = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => break,
        };
        while i < a.len() && a[i] == x {
            i += 1;
        }
        while j < b.len() && b[j] == x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Distribution;
    use approx::assert_relative_eq;

    #[test]
    fn ks_of_exact_quantile_grid_is_small() {
        let arc = Distribution::arcsine();
        let n = 10_000;
        let xs: Vec<f64> = (0..n)
            .map(|k| arc.quantile((k as f64 + 0.5) / n as f64).unwrap())
            .collect();
        assert!(ks_distance(&xs, &arc) < 1.0 / n as f64);
    }

    #[test]
    fn ks_detects_shift() {
        let arc = Distribution::arcsine();
        let n = 1000;
        let xs: Vec<f64> = (0..n)
            .map(|k| (arc.quantile((k as f64 + 0.5) / n as f64).unwrap() + 0.5).clamp(-1.0, 1.0))
            .collect();
        assert!(ks_distance(&xs, &arc) > 0.2);
    }

    #[test]
    fn ks_with_atoms() {
        let r = Distribution::rademacher();
        // perfectly balanced +-1 sample has zero distance
        let mut xs = vec![-1.0; 500];
        xs.extend(vec![1.0; 500]);
        assert_relative_eq!(ks_distance(&xs, &r), 0.0);
        // an unbalanced one is off by the imbalance
        let mut xs = vec![-1.0; 600];
        xs.extend(vec![1.0; 400]);
        assert_relative_eq!(ks_distance(&xs, &r), 0.1);
    }

    #[test]
    fn two_sample_identical_is_zero() {
        let xs: Vec<f64> = (0..100).map(|k| k as f64).collect();
        assert_relative_eq!(ks_distance_two_sample(&xs, &xs), 0.0);
        let ys: Vec<f64> = (0..100).map(|k| k as f64 + 50.0).collect();
        assert_relative_eq!(ks_distance_two_sample(&xs, &ys), 0.5);
    }
}

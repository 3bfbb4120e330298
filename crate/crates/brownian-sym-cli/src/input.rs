//! Resolution of `--domain` and `--dist` arguments: builtin names, inline
//! JSON, or paths to JSON files.

use std::path::Path;

use anyhow::Context;

use brownian_sym::distributions::{Distribution, DistributionSpec};
use brownian_sym::geometry::{builtin, Domain, DomainSpec, Point2};
use brownian_sym::BoundaryCurve;

pub fn resolve_domain(arg: &str) -> anyhow::Result<Domain> {
    if let Some(name) = arg.strip_prefix("builtin:") {
        return Ok(builtin(name)?);
    }
    let json = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading domain file {arg}"))?
    };
    Ok(DomainSpec::from_json(&json)?.build()?)
}

pub fn resolve_distribution(arg: &str) -> anyhow::Result<Distribution> {
    let json = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).with_context(|| format!("reading distribution file {arg}"))?
    };
    Ok(DistributionSpec::from_json(&json)?.build()?)
}

/// Reads a boundary curve written by `symmetrize --out-curve`
/// (header `theta,x,y`).
pub fn read_curve_csv(path: &Path) -> anyhow::Result<BoundaryCurve> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading curve file {}", path.display()))?;
    let mut thetas = Vec::new();
    let mut points = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (k == 0 && line.starts_with("theta")) {
            continue;
        }
        let mut cols = line.split(',');
        let theta: f64 = next_col(&mut cols, k)?;
        let x: f64 = next_col(&mut cols, k)?;
        let y: f64 = next_col(&mut cols, k)?;
        thetas.push(theta);
        points.push(Point2::new(x, y));
    }
    anyhow::ensure!(points.len() >= 8, "curve file has too few points");
    Ok(BoundaryCurve::from_parts(thetas, points)?)
}

fn next_col<'a>(cols: &mut impl Iterator<Item = &'a str>, line: usize) -> anyhow::Result<f64> {
    cols.next()
        .ok_or_else(|| anyhow::anyhow!("missing column on line {}", line + 1))?
        .trim()
        .parse()
        .with_context(|| format!("bad number on line {}", line + 1))
}

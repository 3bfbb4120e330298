//! Output writers: CSV, SVG, JSON reports and the run manifest.
//!
//! Floats are written with Rust's shortest round-trip formatting, so a
//! repeated run with the same seed produces byte-identical files.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::Context;
use serde::Serialize;
use sha2::{Digest, Sha256};

use brownian_sym::gross::{BoundaryCurve, FourierMap};
use brownian_sym::sampler::ExitSample;
use brownian_sym::steiner::SymmetrizedRegion;
use brownian_sym::Point2;

pub fn write_samples_csv(path: &Path, samples: &[ExitSample]) -> anyhow::Result<()> {
    let with_time = samples.first().is_some_and(|s| s.time.is_some());
    let mut text = String::with_capacity(samples.len() * 24);
    text.push_str(if with_time { "x,y,t\n" } else { "x,y\n" });
    for s in samples {
        match s.time {
            Some(t) => writeln!(text, "{},{},{}", s.position.x, s.position.y, t)?,
            None => writeln!(text, "{},{}", s.position.x, s.position.y)?,
        }
    }
    write_file(path, text.as_bytes())
}

pub fn write_coeffs_csv(path: &Path, map: &FourierMap) -> anyhow::Result<()> {
    let mut text = String::from("n,phi_hat\n");
    for (k, c) in map.coefficients().iter().enumerate() {
        writeln!(text, "{},{}", k + 1, c)?;
    }
    write_file(path, text.as_bytes())
}

pub fn write_curve_csv(path: &Path, curve: &BoundaryCurve) -> anyhow::Result<()> {
    let mut text = String::from("theta,x,y\n");
    for (theta, p) in curve.thetas().iter().zip(curve.points()) {
        writeln!(text, "{},{},{}", theta, p.x, p.y)?;
    }
    write_file(path, text.as_bytes())
}

pub fn write_region_csv(path: &Path, region: &SymmetrizedRegion) -> anyhow::Result<()> {
    let mut text = String::from("x,y\n");
    for p in region.boundary_points() {
        writeln!(text, "{},{}", p.x, p.y)?;
    }
    write_file(path, text.as_bytes())
}

/// Minimal static rendering: one closed polyline, viewBox from the bounding
/// box plus a 5% margin.
pub fn write_svg(path: &Path, points: &[Point2]) -> anyhow::Result<()> {
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in points {
        x0 = x0.min(p.x);
        y0 = y0.min(p.y);
        x1 = x1.max(p.x);
        y1 = y1.max(p.y);
    }
    let margin = 0.05 * ((x1 - x0).max(y1 - y0)).max(1e-9);
    let (x0, y0) = (x0 - margin, y0 - margin);
    let (w, h) = (x1 - x0 + margin, y1 - y0 + margin);
    let mut text = String::new();
    writeln!(
        text,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {h}" width="600" height="600">"#
    )?;
    // SVG y grows downward; flip so the plot reads like the plane
    write!(
        text,
        r#"<g transform="translate(0,{}) scale(1,-1)"><polyline fill="none" stroke="black" stroke-width="{}" points=""#,
        2.0 * y0 + h,
        w / 600.0
    )?;
    for p in points {
        write!(text, "{},{} ", p.x, p.y)?;
    }
    if let Some(p) = points.first() {
        write!(text, "{},{}", p.x, p.y)?;
    }
    writeln!(text, r#""/></g></svg>"#)?;
    write_file(path, text.as_bytes())
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    write_file(path, text.as_bytes())
}

fn write_file(path: &Path, bytes: &[u8]) -> anyhow::Result<()> {
    std::fs::write(path, bytes).with_context(|| format!("writing {}", path.display()))
}

#[derive(Serialize)]
pub struct VerticalSegmentOut {
    pub x: f64,
    pub length: f64,
}

#[derive(Serialize)]
pub struct BrownianReport {
    pub schema: u32,
    pub mode: &'static str,
    pub input: String,
    pub n_coeffs: usize,
    pub area: f64,
    pub curve_length: f64,
    pub simple: bool,
    pub wall_x_tol: f64,
    pub wall_min_len: f64,
    pub vertical_segments: Vec<VerticalSegmentOut>,
}

#[derive(Serialize)]
pub struct SteinerReport {
    pub schema: u32,
    pub mode: &'static str,
    pub input: String,
    pub input_area: f64,
    pub area: f64,
    pub input_perimeter: f64,
    pub perimeter: f64,
}

#[derive(Serialize)]
pub struct EigenReportOut {
    pub schema: u32,
    pub input: String,
    pub h: f64,
    pub lambda1: f64,
    pub rate: f64,
    pub iterations: usize,
    pub residual: f64,
    pub nodes: usize,
}

#[derive(Serialize)]
struct OutputDigest {
    path: String,
    sha256: String,
    bytes: u64,
}

/// One manifest per run: the full command line, seed, worker count, library
/// version and a digest of every file written. Re-running the recorded
/// command reproduces the files byte for byte.
#[derive(Serialize)]
pub struct Manifest {
    schema: u32,
    version: &'static str,
    command: Vec<String>,
    seed: u64,
    workers: usize,
    outputs: Vec<OutputDigest>,
}

impl Manifest {
    pub fn new(argv: &[String], seed: u64, workers: usize) -> Manifest {
        Manifest {
            schema: 1,
            version: env!("CARGO_PKG_VERSION"),
            command: argv.to_vec(),
            seed,
            workers,
            outputs: Vec::new(),
        }
    }

    pub fn add_output(&mut self, path: &Path) -> anyhow::Result<()> {
        let bytes = std::fs::read(path)?;
        let digest = Sha256::digest(&bytes);
        let mut hex = String::with_capacity(64);
        for b in digest {
            write!(hex, "{b:02x}")?;
        }
        self.outputs.push(OutputDigest {
            path: path.display().to_string(),
            sha256: hex,
            bytes: bytes.len() as u64,
        });
        Ok(())
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        write_json(path, self)
    }
}

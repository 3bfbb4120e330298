//! Batch front end for the symmetrization pipeline: exit sampling, the
//! Brownian and Steiner symmetrizations, eigenvalue estimation, and the
//! built-in verification suites. Emits CSV, JSON and SVG; every run writes
//! a manifest with the full parameter set and output digests so results can
//! be reproduced byte for byte.

mod input;
mod output;
mod verify;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use brownian_sym::distributions::Distribution;
use brownian_sym::eigen;
use brownian_sym::gross::{brownian_symmetrize, FourierMap};
use brownian_sym::sampler::{
    sample_disc_exit_exact, sample_exit_em, sample_exit_wos, ExitSample, SamplerConfig,
};
use brownian_sym::steiner::steiner_symmetrize;
use brownian_sym::with_workers;

#[derive(Parser)]
#[command(name = "brownian-sym", version, about = "Brownian and Steiner symmetrization of planar domains")]
struct Cli {
    /// RNG seed for all sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores). Never affects results.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Directory for output files and the run manifest.
    #[arg(long, global = true, default_value = ".")]
    out_dir: PathBuf,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Method {
    Wos,
    Em,
    DiscExact,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Mode {
    Brownian,
    Steiner,
}

#[derive(Subcommand)]
enum Command {
    /// Draw Brownian exit samples from a domain.
    Sample {
        /// Domain: `builtin:<name>`, inline JSON, or a JSON file path.
        #[arg(long)]
        domain: String,
        #[arg(long, value_enum)]
        method: Method,
        /// Number of samples.
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        /// Walk-on-spheres absorption shell.
        #[arg(long, default_value_t = 1e-4)]
        epsilon: f64,
        /// Euler-Maruyama time step.
        #[arg(long, default_value_t = 1e-5)]
        dt: f64,
        /// Output CSV (columns x,y for positions, x,y,t with exit times).
        #[arg(long, default_value = "samples.csv")]
        out: PathBuf,
    },
    /// Compute a symmetrization of a domain (or of an analytic law).
    Symmetrize {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        domain: Option<String>,
        /// Analytic law bypassing the sampler (Brownian mode only):
        /// inline JSON or a JSON file path.
        #[arg(long)]
        dist: Option<String>,
        /// Fourier truncation order.
        #[arg(long = "N", default_value_t = 401)]
        n_coeffs: usize,
        /// Boundary curve resolution.
        #[arg(long = "M", default_value_t = 4096)]
        m_points: usize,
        /// Steiner profile grid resolution.
        #[arg(long, default_value_t = 4096)]
        grid_n: usize,
        /// Exit samples for the Brownian pipeline.
        #[arg(long, default_value_t = 100_000)]
        n: usize,
        #[arg(long, default_value_t = 1e-4)]
        epsilon: f64,
        /// Apply Fejer weights to the coefficients (smooths the Gibbs
        /// oscillation at atoms; changes the reported area).
        #[arg(long)]
        cesaro: bool,
        /// Abscissa tolerance for the vertical-run report.
        #[arg(long, default_value_t = 0.02)]
        wall_x_tol: f64,
        /// Minimum vertical extent for the vertical-run report.
        #[arg(long, default_value_t = 0.06)]
        wall_min_len: f64,
        #[arg(long)]
        out_coeffs: Option<PathBuf>,
        #[arg(long)]
        out_curve: Option<PathBuf>,
        #[arg(long)]
        out_svg: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Estimate the principal Dirichlet eigenvalue of a domain or of the
    /// interior of a curve.
    Eigen {
        #[arg(long)]
        domain: Option<String>,
        /// Boundary curve CSV (columns theta,x,y) as written by symmetrize.
        #[arg(long)]
        curve: Option<PathBuf>,
        /// Mesh size.
        #[arg(long, default_value_t = 1.0 / 128.0)]
        h: f64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a verification suite: `idempotence`, `thm3`, or `kappa`.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        domain: Option<String>,
        #[arg(long)]
        kappa: Option<f64>,
        /// Exit samples per Brownian pass.
        #[arg(long, default_value_t = 100_000)]
        n: usize,
    },
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().collect();
    std::fs::create_dir_all(&cli.out_dir)
        .with_context(|| format!("creating out dir {}", cli.out_dir.display()))?;
    let workers = cli.workers;
    let ok = with_workers(workers, move || run(cli, argv))?;
    if !ok {
        std::process::exit(1);
    }
    Ok(())
}

fn run(cli: Cli, argv: Vec<String>) -> anyhow::Result<bool> {
    let mut manifest = output::Manifest::new(&argv, cli.seed, cli.workers);
    let out_dir = cli.out_dir.clone();
    match cli.command {
        Command::Sample {
            domain,
            method,
            n,
            epsilon,
            dt,
            out,
        } => {
            let domain = input::resolve_domain(&domain)?;
            let cfg = SamplerConfig {
                epsilon,
                dt,
                seed: cli.seed,
                n_samples: n,
                workers: cli.workers,
            };
            let samples: Vec<ExitSample> = match method {
                Method::Wos => sample_exit_wos(&domain, &cfg)?,
                Method::Em => sample_exit_em(&domain, &cfg)?,
                Method::DiscExact => {
                    let (center, radius) = domain
                        .disc_params()
                        .ok_or_else(|| anyhow::anyhow!("disc-exact needs a disc domain"))?;
                    sample_disc_exit_exact(center, radius, &cfg)?
                }
            };
            let path = out_dir.join(out);
            output::write_samples_csv(&path, &samples)?;
            manifest.add_output(&path)?;
            println!("wrote {} samples to {}", samples.len(), path.display());
        }
        Command::Symmetrize {
            mode,
            domain,
            dist,
            n_coeffs,
            m_points,
            grid_n,
            n,
            epsilon,
            cesaro,
            wall_x_tol,
            wall_min_len,
            out_coeffs,
            out_curve,
            out_svg,
            report,
        } => match mode {
            Mode::Brownian => {
                if n_coeffs < 1 {
                    bail!("--N must be at least 1");
                }
                if m_points < 8 {
                    bail!("--M must be at least 8");
                }
                let (map, label) = match (&dist, &domain) {
                    (Some(spec), _) => {
                        let d: Distribution = input::resolve_distribution(spec)?;
                        (FourierMap::from_distribution(&d, n_coeffs)?, spec.clone())
                    }
                    (None, Some(dom)) => {
                        let domain = input::resolve_domain(dom)?;
                        let cfg = SamplerConfig {
                            epsilon,
                            seed: cli.seed,
                            n_samples: n,
                            workers: cli.workers,
                            ..SamplerConfig::default()
                        };
                        let (map, _) = brownian_symmetrize(&domain, &cfg, n_coeffs, m_points)?;
                        (map, dom.clone())
                    }
                    (None, None) => bail!("need --domain or --dist"),
                };
                let map = if cesaro { map.cesaro() } else { map };
                let curve = map.boundary_curve(m_points);
                if let Some(p) = out_coeffs {
                    let p = out_dir.join(p);
                    output::write_coeffs_csv(&p, &map)?;
                    manifest.add_output(&p)?;
                }
                if let Some(p) = out_curve {
                    let p = out_dir.join(p);
                    output::write_curve_csv(&p, &curve)?;
                    manifest.add_output(&p)?;
                }
                if let Some(p) = out_svg {
                    let p = out_dir.join(p);
                    output::write_svg(&p, curve.points())?;
                    manifest.add_output(&p)?;
                }
                let (simple, _) = curve.is_simple();
                let segments = curve.vertical_segments(wall_x_tol, wall_min_len);
                let rep = output::BrownianReport {
                    schema: 1,
                    mode: "brownian",
                    input: label,
                    n_coeffs,
                    area: map.area(),
                    curve_length: curve.length(),
                    simple,
                    wall_x_tol,
                    wall_min_len,
                    vertical_segments: segments
                        .iter()
                        .map(|s| output::VerticalSegmentOut {
                            x: s.x,
                            length: s.length,
                        })
                        .collect(),
                };
                println!(
                    "area = {:.6}, curve length = {:.6}, simple = {}, {} vertical segment(s)",
                    rep.area,
                    rep.curve_length,
                    rep.simple,
                    rep.vertical_segments.len()
                );
                if let Some(p) = report {
                    let p = out_dir.join(p);
                    output::write_json(&p, &rep)?;
                    manifest.add_output(&p)?;
                }
            }
            Mode::Steiner => {
                if grid_n < 2 {
                    bail!("--grid-n must be at least 2");
                }
                let dom_arg = domain.ok_or_else(|| anyhow::anyhow!("steiner needs --domain"))?;
                let domain = input::resolve_domain(&dom_arg)?;
                let region = steiner_symmetrize(&domain, grid_n);
                if let Some(p) = out_curve {
                    let p = out_dir.join(p);
                    output::write_region_csv(&p, &region)?;
                    manifest.add_output(&p)?;
                }
                if let Some(p) = out_svg {
                    let p = out_dir.join(p);
                    output::write_svg(&p, &region.boundary_points())?;
                    manifest.add_output(&p)?;
                }
                let rep = output::SteinerReport {
                    schema: 1,
                    mode: "steiner",
                    input: dom_arg,
                    input_area: domain.area(),
                    area: region.area(),
                    input_perimeter: domain.perimeter(),
                    perimeter: region.perimeter(),
                };
                println!(
                    "area = {:.9} (input {:.9}), perimeter = {:.9} (input {:.9})",
                    rep.area, rep.input_area, rep.perimeter, rep.input_perimeter
                );
                if let Some(p) = report {
                    let p = out_dir.join(p);
                    output::write_json(&p, &rep)?;
                    manifest.add_output(&p)?;
                }
            }
        },
        Command::Eigen {
            domain,
            curve,
            h,
            report,
        } => {
            let (rep, label) = match (&domain, &curve) {
                (Some(dom), None) => {
                    let d = input::resolve_domain(dom)?;
                    (eigen::principal_eigenvalue(&d, h)?, dom.clone())
                }
                (None, Some(path)) => {
                    let c = input::read_curve_csv(path)?;
                    (
                        eigen::curve_eigenvalue(&c, h)?,
                        path.display().to_string(),
                    )
                }
                _ => bail!("need exactly one of --domain or --curve"),
            };
            let out = output::EigenReportOut {
                schema: 1,
                input: label,
                h,
                lambda1: rep.lambda1,
                rate: rep.lambda1 / 2.0,
                iterations: rep.iterations,
                residual: rep.residual,
                nodes: rep.nodes,
            };
            println!(
                "lambda1 = {:.6} (rate {:.6}), {} iterations, residual {:.3e}, {} nodes",
                out.lambda1, out.rate, out.iterations, out.residual, out.nodes
            );
            if let Some(p) = report {
                let p = out_dir.join(p);
                output::write_json(&p, &out)?;
                manifest.add_output(&p)?;
            }
        }
        Command::Verify {
            suite,
            domain,
            kappa,
            n,
        } => {
            let passed = verify::run_suite(&suite, domain.as_deref(), kappa, n, cli.seed, cli.workers)?;
            manifest.write(&out_dir.join("manifest.json"))?;
            return Ok(passed);
        }
    }
    manifest.write(&out_dir.join("manifest.json"))?;
    Ok(true)
}

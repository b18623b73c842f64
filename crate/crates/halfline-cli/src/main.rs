//! File-based command-line front end for the halfline library.
//!
//! Structured data travels as JSON (potentials, spectral data, S-matrix
//! samples), plottable series as CSV. Every run is deterministic for fixed
//! inputs and configuration.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use halfline::dressing::{self, DressingMode, DressingParams};
use halfline::phase::{self, Parity, SpectralData};
use halfline::potential::Potential;
use halfline::recover;
use halfline::scattering;
use halfline::smap::{self, SMatrixSamples};
use halfline::spectra;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
struct RunConfig {
    ode_steps: usize,
    grid_n: usize,
    nmax: usize,
    tolerances: BTreeMap<String, f64>,
    seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let mut tolerances = BTreeMap::new();
        tolerances.insert("roundtrip".to_string(), 1e-5);
        tolerances.insert("unitarity".to_string(), 1e-9);
        RunConfig {
            ode_steps: 4096,
            grid_n: 2049,
            nmax: 32,
            tolerances,
            seed: 0,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<()> {
        if self.ode_steps == 0 || self.grid_n < 2 || self.nmax == 0 {
            bail!("config: ode_steps, grid_n, nmax must be positive (grid_n >= 2)");
        }
        for (name, &tol) in &self.tolerances {
            if !(tol >= 1e-15) {
                bail!("config: tolerance {name} = {tol} below the 1e-15 floor");
            }
        }
        Ok(())
    }

    fn tolerance(&self, name: &str, fallback: f64) -> f64 {
        self.tolerances.get(name).copied().unwrap_or(fallback)
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "halfline",
    about = "Forward and inverse scattering on the half line with unit-interval potentials",
    version
)]
struct Cli {
    /// JSON file overriding the default run configuration.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Override the integrator resolution on [0,1].
    #[arg(long, global = true, value_name = "N")]
    steps: Option<usize>,
    /// Override the output grid resolution.
    #[arg(long, global = true, value_name = "N")]
    grid_n: Option<usize>,
    /// Override the number of spectral indices.
    #[arg(long, global = true, value_name = "N")]
    nmax: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct OutArg {
    /// Output path; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jost function, S-matrix, and phase shift over a k-range (CSV).
    Forward {
        /// Potential JSON file.
        #[arg(long, value_name = "PATH")]
        potential: PathBuf,
        #[arg(long, default_value_t = 0.5)]
        kmin: f64,
        #[arg(long, default_value_t = 50.0)]
        kmax: f64,
        /// Number of k samples.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Dirichlet and mixed eigenvalues (CSV).
    Spectrum {
        #[arg(long, value_name = "PATH")]
        potential: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Extract spectral data p_n from a potential (JSON).
    PhaseMap {
        #[arg(long, value_name = "PATH")]
        potential: PathBuf,
        /// generic or even.
        #[arg(long, default_value = "generic")]
        parity: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Reconstruct a potential from generic spectral data (JSON).
    Invert {
        /// Spectral-data JSON file.
        #[arg(long, value_name = "PATH")]
        data: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Reconstruct an even potential from its Dirichlet data (JSON).
    InvertEven {
        #[arg(long, value_name = "PATH")]
        data: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Insert a bound state at k* = ir and emit the dressed potential (CSV).
    Dress {
        #[arg(long, value_name = "PATH")]
        potential: PathBuf,
        /// Imaginary part r of k* = ir.
        #[arg(long, value_name = "R")]
        kstar_r: f64,
        /// Explicit norming constant (mutually exclusive with --support-preserving).
        #[arg(long, value_name = "C", conflicts_with = "support_preserving")]
        c: Option<f64>,
        /// Choose the norming constant that keeps the support in [0,1].
        #[arg(long)]
        support_preserving: bool,
        #[arg(long, default_value_t = 2.0)]
        xmax: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// First-order inversion of S-matrix samples (JSON in, potential JSON out).
    Linearize {
        /// Samples JSON file { "rs", "s_re", "s_im", "s0" }.
        #[arg(long, value_name = "PATH")]
        samples: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Gauss-Newton inversion of S-matrix samples (potential JSON out).
    NewtonInvert {
        #[arg(long, value_name = "PATH")]
        samples: PathBuf,
        #[arg(long, default_value_t = 20)]
        iters: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// extract -> invert -> re-extract; reports the max p_n discrepancy.
    Roundtrip {
        #[arg(long, value_name = "PATH")]
        potential: PathBuf,
    },
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        None => RunConfig::default(),
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            serde_json::from_str(&text)
                .with_context(|| format!("parsing config {}", path.display()))?
        }
    };
    for (var, slot) in [
        ("HALFLINE_ODE_STEPS", &mut cfg.ode_steps),
        ("HALFLINE_GRID_N", &mut cfg.grid_n),
        ("HALFLINE_NMAX", &mut cfg.nmax),
    ] {
        if let Ok(text) = std::env::var(var) {
            *slot = text
                .parse()
                .with_context(|| format!("{var} = {text:?} is not a positive integer"))?;
        }
    }
    if let Ok(text) = std::env::var("HALFLINE_SEED") {
        cfg.seed = text
            .parse()
            .with_context(|| format!("HALFLINE_SEED = {text:?} is not an integer"))?;
    }
    if let Some(steps) = cli.steps {
        cfg.ode_steps = steps;
    }
    if let Some(grid_n) = cli.grid_n {
        cfg.grid_n = grid_n;
    }
    if let Some(nmax) = cli.nmax {
        cfg.nmax = nmax;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn read_potential(path: &Path) -> Result<Potential> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Potential::from_json(&text).with_context(|| format!("potential: parsing {}", path.display()))
}

fn read_data(path: &Path) -> Result<SpectralData> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SpectralData::from_json(&text)
        .with_context(|| format!("phase-map: parsing {}", path.display()))
}

fn read_samples(path: &Path) -> Result<(SMatrixSamples, f64)> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    SMatrixSamples::from_json(&text)
        .with_context(|| format!("discrete-map: parsing {}", path.display()))
}

fn emit(out: &OutArg, content: &str) -> Result<()> {
    match &out.out {
        None => {
            std::io::stdout()
                .write_all(content.as_bytes())
                .context("writing stdout")?;
        }
        Some(path) => {
            fs::write(path, content).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

fn run() -> Result<()> {
    let cli = Cli::parse();
    let cfg = load_config(&cli)?;
    let steps = cfg.ode_steps;

    match &cli.command {
        Command::Forward {
            potential,
            kmin,
            kmax,
            count,
            out,
        } => {
            if !(*kmin > 0.0 && kmax > kmin && *count >= 2) {
                bail!("forward: need 0 < kmin < kmax and count >= 2");
            }
            let q = read_potential(potential)?;
            let ks: Vec<f64> = (0..*count)
                .map(|i| kmin + (kmax - kmin) * i as f64 / (*count - 1) as f64)
                .collect();
            let xis = scattering::phase_shift(&q, &ks, steps).context("scattering")?;
            let mut csv = String::from("k,re_psi,im_psi,re_s,im_s,xi\n");
            for (&k, &xi) in ks.iter().zip(&xis) {
                let jv = scattering::jost(&q, halfline::Complex64::new(k, 0.0), steps)
                    .context("scattering")?;
                let s = scattering::smatrix(&q, k, steps).context("scattering")?;
                csv.push_str(&format!(
                    "{k},{},{},{},{},{xi}\n",
                    jv.psi.re, jv.psi.im, s.re, s.im
                ));
            }
            emit(out, &csv)
        }
        Command::Spectrum { potential, out } => {
            let q = read_potential(potential)?;
            let mu = spectra::dirichlet_eigenvalues(&q, cfg.nmax, steps).context("spectra")?;
            let tau = spectra::mixed_eigenvalues(&q, cfg.nmax, steps).context("spectra")?;
            let mut csv = String::from("n,mu_n,tau_n\n");
            for n in 0..cfg.nmax {
                csv.push_str(&format!("{},{},{}\n", n + 1, mu[n], tau[n]));
            }
            emit(out, &csv)
        }
        Command::PhaseMap {
            potential,
            parity,
            out,
        } => {
            let q = read_potential(potential)?;
            let parity = match parity.as_str() {
                "generic" => Parity::Generic,
                "even" => Parity::Even,
                other => bail!("phase-map: parity must be generic or even, got {other:?}"),
            };
            let data = phase::extract_data(&q, cfg.nmax, parity, steps).context("phase-map")?;
            emit(out, &(data.to_json() + "\n"))
        }
        Command::Invert { data, out } => {
            let data = read_data(data)?;
            let q = recover::recover_generic(&data, cfg.grid_n).context("recover")?;
            emit(out, &(q.to_json() + "\n"))
        }
        Command::InvertEven { data, out } => {
            let data = read_data(data)?;
            let q = recover::recover_even(&data, cfg.grid_n).context("recover")?;
            emit(out, &(q.to_json() + "\n"))
        }
        Command::Dress {
            potential,
            kstar_r,
            c,
            support_preserving,
            xmax,
            out,
        } => {
            let q = read_potential(potential)?;
            let mode = match (c, support_preserving) {
                (Some(c), false) => DressingMode::ExplicitC(*c),
                (None, true) => DressingMode::SupportPreserving,
                (None, false) => bail!("dress: pass either --c <C> or --support-preserving"),
                (Some(_), true) => unreachable!("clap conflicts_with"),
            };
            let params = DressingParams { r: *kstar_r, mode };
            let mut csv = String::from("x,qstar\n");
            if *support_preserving {
                let qs =
                    dressing::dress_support_preserving(&q, *kstar_r, steps).context("dressing")?;
                for (i, x) in qs.nodes().enumerate() {
                    csv.push_str(&format!("{x},{}\n", qs.values()[i]));
                }
            } else {
                let d = dressing::dress(&q, &params, *xmax, steps).context("dressing")?;
                for (i, x) in d.nodes().enumerate() {
                    csv.push_str(&format!("{x},{}\n", d.values()[i]));
                }
            }
            emit(out, &csv)
        }
        Command::Linearize { samples, out } => {
            let (samples, s0) = read_samples(samples)?;
            let n = cfg.nmax.min(samples.rs.len());
            let q = smap::linearized_inverse(&samples, s0, n, cfg.grid_n)
                .context("discrete-map")?;
            emit(out, &(q.to_json() + "\n"))
        }
        Command::NewtonInvert {
            samples,
            iters,
            out,
        } => {
            let (samples, s0) = read_samples(samples)?;
            let outcome = smap::newton_invert(&samples, s0, *iters, cfg.grid_n, steps)
                .context("discrete-map")?;
            eprintln!(
                "newton-invert: residual {:.3e} after {} iterations",
                outcome.residual, outcome.iterations
            );
            emit(out, &(outcome.q.to_json() + "\n"))
        }
        Command::Roundtrip { potential } => {
            let q = read_potential(potential)?;
            let data =
                phase::extract_data(&q, cfg.nmax, Parity::Generic, steps).context("phase-map")?;
            let rec = recover::recover_generic(&data, cfg.grid_n).context("recover")?;
            let mut max_dev = 0.0f64;
            for n in 1..=cfg.nmax.min(8) {
                let p_in = phase::solve_pn(&q, n, steps).context("phase-map")?;
                let p_re = phase::solve_pn(&rec, n, steps).context("phase-map")?;
                let dev = (p_in - p_re).abs();
                println!("n={n} p_in={p_in} p_rec={p_re} dev={dev:.3e}");
                max_dev = max_dev.max(dev);
            }
            let tol = cfg.tolerance("roundtrip", 1e-5);
            println!("max |p_n(recovered) - p_n(input)| = {max_dev:.3e}");
            if max_dev >= tol {
                bail!("roundtrip: max deviation {max_dev:.3e} above tolerance {tol:.1e}");
            }
            println!("roundtrip ok (tolerance {tol:.1e})");
            Ok(())
        }
    }
}

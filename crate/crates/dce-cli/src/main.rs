//! `dce` — pair-emission rates and distributions for modulated atomic
//! arrays, with linear-kick and spinning-phase modulation.
//!
//! Output is deterministic: identical inputs give byte-identical files at
//! any thread count. Wall time is reported on stderr only.

mod commands;
mod config;
mod svg;
mod table;

use clap::{Parser, Subcommand};
use config::{OutputFormat, RunConfig};
use dce_core::DceError;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dce",
    version,
    about = "Photon-pair emission from spatio-temporally modulated atomic arrays"
)]
struct Cli {
    /// JSON config file; flags override its values field by field.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Parser)]
struct Flags {
    /// Kick magnitude cβ/Ω.
    #[arg(long, global = true)]
    kick: Option<f64>,
    /// Comma-separated kick list for sweeps.
    #[arg(long, global = true, value_delimiter = ',')]
    kicks: Option<Vec<f64>>,
    /// Photon-1 reduced frequency ω₁/Ω.
    #[arg(long, global = true)]
    omega_ratio: Option<f64>,
    /// Relative quadrature tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Worker threads (default: RAYON_NUM_THREADS or all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Output file (default: stdout).
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
    /// Also write an SVG plot.
    #[arg(long, global = true, value_name = "FILE")]
    svg: Option<PathBuf>,
    /// Topological charge ℓ.
    #[arg(long, global = true)]
    ell: Option<i64>,
    /// Disk radius 𝓡 = ΩR/c.
    #[arg(long, global = true)]
    radius: Option<f64>,
    /// Angular-momentum window half-width.
    #[arg(long, global = true)]
    m_max: Option<i64>,
    /// Lattice sites along x.
    #[arg(long, global = true)]
    nx: Option<u32>,
    /// Lattice sites along y.
    #[arg(long, global = true)]
    ny: Option<u32>,
    /// Lattice sites along z.
    #[arg(long, global = true)]
    nz: Option<u32>,
    /// In-plane lattice extent L in c/Ω.
    #[arg(long, global = true)]
    extent: Option<f64>,
    /// Polar-angle grid size.
    #[arg(long, global = true)]
    theta_points: Option<usize>,
    /// Azimuth grid size.
    #[arg(long, global = true)]
    phi_points: Option<usize>,
    /// Frequency grid size.
    #[arg(long, global = true)]
    omega_points: Option<usize>,
    /// Frequency grid size for the spinning spectrum.
    #[arg(long, global = true)]
    u_points: Option<usize>,
    /// Estimate scenario name, or "all".
    #[arg(long, global = true)]
    scenario: Option<String>,
}

impl Flags {
    fn into_config(self) -> RunConfig {
        RunConfig {
            kick: self.kick,
            kicks: self.kicks,
            omega_ratio: self.omega_ratio,
            tolerance: self.tolerance,
            threads: self.threads,
            format: self.format,
            output: self.output,
            svg: self.svg,
            ell: self.ell,
            radius: self.radius,
            m_max: self.m_max,
            nx: self.nx,
            ny: self.ny,
            nz: self.nz,
            extent: self.extent,
            theta_points: self.theta_points,
            phi_points: self.phi_points,
            omega_points: self.omega_points,
            u_points: self.u_points,
            scenario: self.scenario,
            scenarios: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
enum Command {
    /// Angular emission lobes for a finite lattice at ω₁ = ω₂ = Ω/2.
    Fig2,
    /// Angular emission-density maps for both photons over a kick sweep.
    Fig3,
    /// Spectral rates dΓ_λ/dω for a set of kick cuts.
    Fig4,
    /// Total rates Γ_TE, Γ_TM, Γ_R/L, Γ_total versus kick.
    Fig5,
    /// Angular-momentum spectrum and total rate for a spinning phase.
    Spinning,
    /// SI-unit rate estimates for experimental platforms.
    Estimate,
}

fn run(cli: Cli) -> Result<(), (u8, String)> {
    let usage = |msg: String| (EXIT_USAGE, msg);
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::load(path).map_err(usage)?,
        None => RunConfig::default(),
    };
    cfg = cfg.overlay(cli.flags.into_config());
    cfg.validate().map_err(usage)?;

    if let Some(n) = cfg.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| usage(format!("cannot configure {n} threads: {e}")))?;
    }

    let started = std::time::Instant::now();
    let custom: Vec<(String, dce_core::estimates::Scenario)> = cfg
        .scenarios
        .clone()
        .unwrap_or_default()
        .into_iter()
        .map(|s| (s.name, s.spec.into()))
        .collect();
    let result = match cli.command {
        Command::Fig2 => commands::cmd_fig2(&cfg),
        Command::Fig3 => commands::cmd_fig3(&cfg),
        Command::Fig4 => commands::cmd_fig4(&cfg),
        Command::Fig5 => commands::cmd_fig5(&cfg),
        Command::Spinning => commands::cmd_spinning(&cfg),
        Command::Estimate => commands::cmd_estimate(&cfg, &custom),
    };
    let t = result.map_err(|e| match e {
        DceError::Numerical { .. } => (EXIT_NUMERICAL, e.to_string()),
        DceError::Parameter(_) | DceError::Resource(_) => (EXIT_USAGE, e.to_string()),
    })?;
    let elapsed = started.elapsed();

    let text = match cfg.format.unwrap_or(OutputFormat::Csv) {
        OutputFormat::Csv => t.to_csv(),
        OutputFormat::Json => t.to_json(),
    };
    match &cfg.output {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
        None => {
            use std::io::Write as _;
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("cannot write stdout: {e}")))?;
        }
    }
    if let Some(path) = &cfg.svg {
        match render_svg(cli.command, &t) {
            Some(doc) => std::fs::write(path, doc)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
            None => eprintln!("note: no SVG plot defined for this command"),
        }
    }
    eprintln!(
        "dce {:?}: {} rows in {:.2} s",
        cli.command,
        t.rows.len(),
        elapsed.as_secs_f64()
    );
    Ok(())
}

/// One series per distinct combination of values in `cols`, in row order.
fn series_by<'a>(t: &table::ResultTable, cols: &[&'a str]) -> Option<Vec<svg::Series<'a>>> {
    let idx: Vec<usize> = cols
        .iter()
        .map(|c| t.column_index(c))
        .collect::<Option<_>>()?;
    let mut series: Vec<svg::Series<'a>> = Vec::new();
    for row in &t.rows {
        let keys: Vec<String> = idx.iter().map(|&i| svg::cell_key(&row[i])).collect();
        let label = keys.join(" ");
        if !series.iter().any(|s| s.label == label) {
            series.push(svg::Series {
                label,
                group: cols.iter().copied().zip(keys).collect(),
            });
        }
    }
    Some(series)
}

/// A default plot per command (convenience output; tables are authoritative).
fn render_svg(command: Command, t: &table::ResultTable) -> Option<String> {
    use svg::{line_plot, Series};
    match command {
        Command::Fig2 => {
            let series = series_by(t, &["polarization", "kick [Omega/c]"])?;
            line_plot(t, "theta [rad]", "rate [r0]", &series, "emission lobes")
        }
        Command::Fig4 => {
            let series = series_by(t, &["polarization", "kick [Omega/c]"])?;
            line_plot(
                t,
                "omega-ratio",
                "rate [Gamma0/Omega]",
                &series,
                "spectral rates",
            )
        }
        Command::Fig5 => line_plot(
            t,
            "kick [Omega/c]",
            "gamma-total [Gamma0]",
            &[Series {
                label: "total".into(),
                group: Vec::new(),
            }],
            "total pair rate",
        ),
        Command::Spinning => {
            let series = series_by(t, &["u"])?;
            line_plot(t, "m", "f [1]", &series, "angular-momentum spectrum")
        }
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}

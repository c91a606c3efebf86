//! Run configuration: JSON config file plus CLI-flag overrides.

use serde::Deserialize;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// All tunable parameters; every command reads the subset it uses.
/// Unknown JSON fields are rejected (config typos are usage errors).
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields, rename_all = "kebab-case")]
pub struct RunConfig {
    /// Single kick cβ/Ω.
    pub kick: Option<f64>,
    /// Kick list (figure sweeps).
    pub kicks: Option<Vec<f64>>,
    /// Photon-1 reduced frequency ω₁/Ω.
    pub omega_ratio: Option<f64>,
    /// Relative quadrature tolerance, in (0, 1e-2].
    pub tolerance: Option<f64>,
    /// Worker threads (default: all cores / RAYON_NUM_THREADS).
    pub threads: Option<usize>,
    pub format: Option<OutputFormat>,
    /// Output file path (default: stdout).
    pub output: Option<PathBuf>,
    /// Optional SVG plot path.
    pub svg: Option<PathBuf>,
    /// Topological charge ℓ (spinning command).
    pub ell: Option<i64>,
    /// Disk radius 𝓡 = ΩR/c (spinning command).
    pub radius: Option<f64>,
    /// Angular-momentum window half-width.
    pub m_max: Option<i64>,
    /// Lattice sites per side (fig2).
    pub nx: Option<u32>,
    pub ny: Option<u32>,
    pub nz: Option<u32>,
    /// In-plane lattice extent L (c/Ω units, fig2).
    pub extent: Option<f64>,
    /// Angular/spectral grid sizes.
    pub theta_points: Option<usize>,
    pub phi_points: Option<usize>,
    pub omega_points: Option<usize>,
    /// Frequency grid for the spinning spectrum.
    pub u_points: Option<usize>,
    /// Estimate scenario name ("perfect-mirror", "rb-metamirror",
    /// "waveguide", or "all").
    pub scenario: Option<String>,
    /// User-defined estimate scenarios (config file only).
    pub scenarios: Option<Vec<NamedScenario>>,
}

/// A user-defined estimate scenario: a name plus the scenario kind and its
/// SI parameters.
#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub struct NamedScenario {
    pub name: String,
    #[serde(flatten)]
    pub spec: crate::commands::ScenarioSpec,
}

impl RunConfig {
    pub fn load(path: &std::path::Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }

    /// CLI flags override file values field by field.
    pub fn overlay(mut self, flags: RunConfig) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if flags.$f.is_some() { self.$f = flags.$f; } )* };
        }
        take!(
            kick, kicks, omega_ratio, tolerance, threads, format, output, svg, ell, radius,
            m_max, nx, ny, nz, extent, theta_points, phi_points, omega_points, u_points,
            scenario, scenarios
        );
        self
    }

    pub fn validate(&self) -> Result<(), String> {
        if let Some(t) = self.tolerance {
            if !(t > 0.0 && t <= 1e-2) {
                return Err(format!("tolerance must lie in (0, 1e-2], got {t}"));
            }
        }
        if let Some(u) = self.omega_ratio {
            if !(0.0 < u && u < 1.0) {
                return Err(format!("omega-ratio must lie in (0, 1), got {u}"));
            }
        }
        if let Some(ks) = &self.kicks {
            if ks.is_empty() {
                return Err("kick list must be non-empty".into());
            }
        }
        for (name, v) in [
            ("theta-points", self.theta_points),
            ("phi-points", self.phi_points),
            ("omega-points", self.omega_points),
            ("u-points", self.u_points),
        ] {
            if let Some(n) = v {
                if n < 2 {
                    return Err(format!("{name} must be at least 2, got {n}"));
                }
            }
        }
        if let Some(r) = self.radius {
            if !(r > 0.0) {
                return Err(format!("radius must be positive, got {r}"));
            }
        }
        Ok(())
    }

    pub fn tolerance_or(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

//! SI-unit rate estimates for the named experimental scenarios.
//!
//! The meta-mirror coefficient (the maximal pair rate in Γ₀ units at zero
//! synthetic phase) is computed live from the emission pipeline rather than
//! hard-coded, so the headline estimate stays tied to the full quadrature.

use crate::error::{DceError, Result};
use crate::linear::{total_rate, RateChannel};
use crate::params::{norm_gamma0, AtomicSpecies, ModulationSpec, SyntheticPhase, C_LIGHT};
use std::sync::OnceLock;

/// Maximal relative deformation a solid can sustain acoustically.
pub const DELTA_MAX_ACOUSTIC: f64 = 1e-2;

/// Pair rate Γ(β=0)/Γ₀ from the full angular + frequency quadrature,
/// computed once per process.
pub fn max_rate_coefficient() -> f64 {
    static COEFF: OnceLock<f64> = OnceLock::new();
    *COEFF.get_or_init(|| {
        total_rate(0.0, RateChannel::Total, 1e-7).expect("zero-kick total rate converges")
    })
}

/// Photon creation rate of an oscillating perfectly-reflecting mirror:
/// Γ = AΩ⁵Δ²/[15(2π)²c⁴] (photons/s). A in m², Ω in rad/s, Δ in m.
pub fn mirror_rate(area: f64, omega: f64, delta: f64) -> Result<f64> {
    require_positive(&[("A", area), ("Omega", omega)])?;
    if delta < 0.0 {
        return Err(DceError::Parameter(format!("Delta must be >= 0, got {delta}")));
    }
    let two_pi = std::f64::consts::TAU;
    Ok(area * omega.powi(5) * delta * delta / (15.0 * two_pi * two_pi * C_LIGHT.powi(4)))
}

/// Maximal pair-creation rate of the modulated atomic-array meta-mirror:
/// Γ_max = [Γ(0)/Γ₀]·A·nS²·α₀²·Ω⁷·Δ²/[16(2π)³c⁶] (photons/s), with the
/// leading coefficient evaluated by `max_rate_coefficient`.
pub fn metamirror_rate(area: f64, ns: f64, alpha0: f64, omega: f64, delta: f64) -> Result<f64> {
    let spec = ModulationSpec::new(omega, delta, SyntheticPhase::NoPhase)?;
    let species = AtomicSpecies::new(alpha0)?;
    let gamma0 = norm_gamma0(&spec, ns, &species, area)?;
    Ok(max_rate_coefficient() * gamma0)
}

/// Photon rate of a modulated 1D waveguide termination:
/// Γ = (Ω/12π)(v_eff/c)² (photons/s).
pub fn waveguide_rate(omega: f64, v_eff_over_c: f64) -> Result<f64> {
    require_positive(&[("Omega", omega)])?;
    if !(0.0..1.0).contains(&v_eff_over_c) {
        return Err(DceError::Parameter(format!(
            "effective velocity must satisfy 0 <= v/c < 1, got {v_eff_over_c}"
        )));
    }
    Ok(omega / (12.0 * std::f64::consts::PI) * v_eff_over_c * v_eff_over_c)
}

/// Acoustic deformation limits: maximal boundary displacement and velocity
/// for sound speed `v_s` (m/s) driven at `omega_w` (rad/s), at the material
/// strain bound δ_max = 1e-2.
pub fn acoustic_bound(v_s: f64, omega_w: f64) -> Result<(f64, f64)> {
    require_positive(&[("v_s", v_s), ("omega_w", omega_w)])?;
    let v_max = DELTA_MAX_ACOUSTIC * v_s;
    Ok((v_max / omega_w, v_max))
}

fn require_positive(vals: &[(&str, f64)]) -> Result<()> {
    for &(name, v) in vals {
        if !(v > 0.0) {
            return Err(DceError::Parameter(format!(
                "{name} must be positive, got {v}"
            )));
        }
    }
    Ok(())
}

/// A named estimate scenario with its SI parameter bundle.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    PerfectMirror { area: f64, omega: f64, delta: f64 },
    MetaMirror { area: f64, ns: f64, alpha0: f64, omega: f64, delta: f64 },
    Waveguide1D { omega: f64, v_eff_over_c: f64 },
}

/// One evaluated scenario row.
#[derive(Debug, Clone)]
pub struct ScenarioResult {
    pub name: String,
    pub rate: f64,
    pub log10_rate: f64,
}

impl Scenario {
    pub fn evaluate(&self, name: &str) -> Result<ScenarioResult> {
        let rate = match *self {
            Scenario::PerfectMirror { area, omega, delta } => mirror_rate(area, omega, delta)?,
            Scenario::MetaMirror {
                area,
                ns,
                alpha0,
                omega,
                delta,
            } => metamirror_rate(area, ns, alpha0, omega, delta)?,
            Scenario::Waveguide1D {
                omega,
                v_eff_over_c,
            } => waveguide_rate(omega, v_eff_over_c)?,
        };
        Ok(ScenarioResult {
            name: name.to_string(),
            rate,
            log10_rate: rate.log10(),
        })
    }
}

/// The three scenarios discussed in the literature this library follows:
/// a macroscopic oscillating mirror, a cold-atom (Rb-87) meta-mirror, and a
/// superconducting-circuit waveguide termination.
pub fn builtin_scenarios() -> Vec<(String, Scenario)> {
    let two_pi = std::f64::consts::TAU;
    vec![
        (
            "perfect-mirror".into(),
            Scenario::PerfectMirror {
                area: 1e-4,          // 1 cm^2
                omega: two_pi * 1e6, // 1 MHz
                delta: 1e-7,        // 100 nm
            },
        ),
        (
            "rb-metamirror".into(),
            Scenario::MetaMirror {
                area: 50e-12,        // 50 um^2
                ns: 4e12,            // 4 atoms/um^2
                alpha0: 5.9e-28,     // Rb-87 static polarizability (m^3)
                omega: two_pi * 1e4, // 10 kHz
                delta: 1e-7,        // 100 nm
            },
        ),
        (
            "waveguide".into(),
            Scenario::Waveguide1D {
                omega: two_pi * 11e9, // 11 GHz
                v_eff_over_c: 0.05,
            },
        ),
    ]
}

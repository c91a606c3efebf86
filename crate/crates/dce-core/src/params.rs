//! Physical parameters, unit conventions, and normalization constants.
//!
//! All internal computations use c = 1, Ω = 1, lengths in units of c/Ω.
//! SI quantities appear only at the boundary: conversion into the
//! dimensionless system here, and rate estimates in [`crate::estimates`].

use crate::error::{DceError, Result};

/// Speed of light in vacuum (m/s, exact).
pub const C_LIGHT: f64 = 299_792_458.0;

/// Synthetic phase imprinted on the modulation, Φ(R).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SyntheticPhase {
    /// Uniform modulation, Φ = 0 (standard DCE).
    NoPhase,
    /// Linear phase Φ = β·r: an in-plane momentum kick (rad/m).
    Linear { beta: [f64; 2] },
    /// Spinning phase Φ = ℓφ: an integer topological charge.
    Spinning { ell: i64 },
}

/// Temporal modulation of the atomic array: frequency Ω, amplitude Δ,
/// and the synthetic phase variant.
#[derive(Debug, Clone, Copy)]
pub struct ModulationSpec {
    /// Modulation angular frequency Ω (rad/s).
    pub omega_mod: f64,
    /// Modulation amplitude Δ (m).
    pub amplitude: f64,
    pub phase: SyntheticPhase,
}

impl ModulationSpec {
    pub fn new(omega_mod: f64, amplitude: f64, phase: SyntheticPhase) -> Result<Self> {
        if !(omega_mod > 0.0) {
            return Err(DceError::Parameter(format!(
                "modulation frequency must be positive, got {omega_mod}"
            )));
        }
        if !(amplitude >= 0.0) {
            return Err(DceError::Parameter(format!(
                "modulation amplitude must be non-negative, got {amplitude}"
            )));
        }
        Ok(Self {
            omega_mod,
            amplitude,
            phase,
        })
    }

    /// ΩΔ/c, the small-amplitude expansion parameter.
    pub fn amplitude_parameter(&self) -> f64 {
        self.omega_mod * self.amplitude / C_LIGHT
    }

    /// True when the small-amplitude regime ΩΔ/c ≪ 1 is questionable.
    pub fn amplitude_warning(&self) -> bool {
        self.amplitude_parameter() > 0.1
    }
}

/// Atomic species, reduced to its ground-state static polarizability α₀ (m³).
/// The excited-state sum defining α₀ is deliberately not modelled.
#[derive(Debug, Clone, Copy)]
pub struct AtomicSpecies {
    pub alpha0: f64,
}

impl AtomicSpecies {
    pub fn new(alpha0: f64) -> Result<Self> {
        if !(alpha0 > 0.0) {
            return Err(DceError::Parameter(format!(
                "polarizability must be positive, got {alpha0}"
            )));
        }
        Ok(Self { alpha0 })
    }
}

/// Spatial arrangement of the atoms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ArrayGeometry {
    /// Finite cubic lattice, positions d·(mx, my, mz), 1 ≤ mᵢ ≤ Nᵢ.
    CubicLattice {
        nx: u32,
        ny: u32,
        nz: u32,
        /// Inter-atom distance d (m); array extent Lᵢ = d·Nᵢ.
        d: f64,
    },
    /// Infinite periodic monolayer with surface density nS (atoms/m²).
    PeriodicMonolayer { ns: f64 },
    /// Stack of Nz concentric disks of radius R, surface density nS,
    /// inter-disk distance d; axis along z (the modulation/spinning axis).
    CylindricalStack { r: f64, ns: f64, nz: u32, d: f64 },
}

impl ArrayGeometry {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            ArrayGeometry::CubicLattice { nx, ny, nz, d } => {
                nx >= 1 && ny >= 1 && nz >= 1 && d > 0.0
            }
            ArrayGeometry::PeriodicMonolayer { ns } => ns > 0.0,
            ArrayGeometry::CylindricalStack { r, ns, nz, d } => {
                r > 0.0 && ns > 0.0 && nz >= 1 && d > 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(DceError::Parameter(format!("invalid geometry: {self:?}")))
        }
    }
}

/// Parameters converted to the internal dimensionless system
/// (frequencies u = ω/Ω, momenta in Ω/c, lengths in c/Ω).
#[derive(Debug, Clone)]
pub struct DimensionlessContext {
    /// Dimensionless kick cβ/Ω (zero for non-linear phases).
    pub kick: [f64; 2],
    /// Topological charge (zero for non-spinning phases).
    pub ell: i64,
    /// Lattice extents Lᵢ·Ω/c for cubic geometry.
    pub extents: Option<[f64; 3]>,
    /// Lattice spacing d·Ω/c for discrete geometries.
    pub spacing: Option<f64>,
    /// Disk radius 𝓡 = ΩR/c for cylindrical geometry.
    pub radius: Option<f64>,
    /// ΩΔ/c, recorded for regime diagnostics.
    pub amplitude_parameter: f64,
}

/// Convert an SI parameter set into the internal dimensionless system.
pub fn to_dimensionless(spec: &ModulationSpec, geom: &ArrayGeometry) -> Result<DimensionlessContext> {
    geom.validate()?;
    let scale = C_LIGHT / spec.omega_mod; // length unit c/Ω
    let (kick, ell) = match spec.phase {
        SyntheticPhase::NoPhase => ([0.0, 0.0], 0),
        SyntheticPhase::Linear { beta } => ([beta[0] * scale, beta[1] * scale], 0),
        SyntheticPhase::Spinning { ell } => ([0.0, 0.0], ell),
    };
    let (extents, spacing, radius) = match *geom {
        ArrayGeometry::CubicLattice { nx, ny, nz, d } => (
            Some([
                d * nx as f64 / scale,
                d * ny as f64 / scale,
                d * nz as f64 / scale,
            ]),
            Some(d / scale),
            None,
        ),
        ArrayGeometry::PeriodicMonolayer { .. } => (None, None, None),
        ArrayGeometry::CylindricalStack { r, d, .. } => (None, Some(d / scale), Some(r / scale)),
    };
    Ok(DimensionlessContext {
        kick,
        ell,
        extents,
        spacing,
        radius,
        amplitude_parameter: spec.amplitude_parameter(),
    })
}

/// Lobe-rate normalization r₀ = α₀²Ω³Δ²/[16(2π)³c²Nx²Ny²Nz²] (1/s) for a
/// finite cubic lattice.
pub fn norm_r0(spec: &ModulationSpec, geom: &ArrayGeometry, species: &AtomicSpecies) -> Result<f64> {
    let ArrayGeometry::CubicLattice { nx, ny, nz, .. } = *geom else {
        return Err(DceError::Parameter(
            "r0 normalization requires a cubic lattice".into(),
        ));
    };
    let two_pi = std::f64::consts::TAU;
    let n2 = (nx as f64 * ny as f64 * nz as f64).powi(2);
    Ok(species.alpha0.powi(2) * spec.omega_mod.powi(3) * spec.amplitude.powi(2)
        / (16.0 * two_pi.powi(3) * C_LIGHT.powi(2) * n2))
}

/// Spectral-rate normalization Γ₀ = A·nS²·α₀²·Ω⁷·Δ²/[16(2π)³c⁶] (1/s) for a
/// monolayer of area A.
pub fn norm_gamma0(spec: &ModulationSpec, ns: f64, species: &AtomicSpecies, area: f64) -> Result<f64> {
    if !(ns > 0.0) || !(area > 0.0) {
        return Err(DceError::Parameter(format!(
            "density and area must be positive, got nS={ns}, A={area}"
        )));
    }
    let two_pi = std::f64::consts::TAU;
    Ok(area
        * ns.powi(2)
        * species.alpha0.powi(2)
        * spec.omega_mod.powi(7)
        * spec.amplitude.powi(2)
        / (16.0 * two_pi.powi(3) * C_LIGHT.powi(6)))
}

//! Vector-Bessel electromagnetic modes with definite total angular momentum.
//!
//! Mode labels γ = {k, k_z, η, m}: transverse momentum k ≥ 0, axial momentum
//! k_z, transverse-spin sign η = ±1, and total angular momentum m (OAM plus
//! SAM — neither is separately a good quantum number). Internal units
//! c = Ω = 1, so K = ω.

use crate::bessel::bessel_j;
use crate::error::{DceError, Result};
use num_complex::Complex64;

/// A vector-Bessel mode in the internal dimensionless system.
#[derive(Debug, Clone, Copy)]
pub struct BesselMode {
    /// Transverse momentum k ≥ 0 (units Ω/c).
    pub k: f64,
    /// Axial momentum k_z (signed, units Ω/c).
    pub kz: f64,
    /// Transverse-spin sign η = ±1.
    pub eta: i32,
    /// Total angular momentum.
    pub m: i64,
}

impl BesselMode {
    pub fn new(k: f64, kz: f64, eta: i32, m: i64) -> Result<Self> {
        if !(k >= 0.0) {
            return Err(DceError::Parameter(format!(
                "transverse momentum must be non-negative, got {k}"
            )));
        }
        if eta != 1 && eta != -1 {
            return Err(DceError::Parameter(format!("eta must be +-1, got {eta}")));
        }
        if k == 0.0 && kz == 0.0 {
            return Err(DceError::Parameter("zero-frequency mode".into()));
        }
        Ok(Self { k, kz, eta, m })
    }

    /// Mode frequency ω = √(k² + k_z²).
    pub fn omega(&self) -> f64 {
        (self.k * self.k + self.kz * self.kz).sqrt()
    }
}

/// Electric field of the mode at (ρ, φ, z), in cylindrical components
/// (E_ρ, E_φ, E_z):
///
///   E_ρ = i·N·[a·J_{m−1}(kρ) − b·J_{m+1}(kρ)]·e^{imφ}e^{ik_z z}
///   E_φ = −N·[a·J_{m−1}(kρ) + b·J_{m+1}(kρ)]·e^{imφ}e^{ik_z z}
///   E_z = N·(k/K)·J_m(kρ)·e^{imφ}e^{ik_z z}
///
/// with a = (k_z + ηK)/2K, b = (k_z − ηK)/2K and N = 1/(√2·2π).
pub fn bessel_mode_field(mode: &BesselMode, rho: f64, phi: f64, z: f64) -> [Complex64; 3] {
    let kk = mode.omega();
    let a = (mode.kz + mode.eta as f64 * kk) / (2.0 * kk);
    let b = (mode.kz - mode.eta as f64 * kk) / (2.0 * kk);
    let jm1 = bessel_j(mode.m - 1, mode.k * rho);
    let jp1 = bessel_j(mode.m + 1, mode.k * rho);
    let jm = bessel_j(mode.m, mode.k * rho);
    let norm = 1.0 / (std::f64::consts::SQRT_2 * std::f64::consts::TAU);
    let phase = Complex64::from_polar(1.0, mode.m as f64 * phi + mode.kz * z);
    let e_rho = Complex64::new(0.0, norm * (a * jm1 - b * jp1)) * phase;
    let e_phi = Complex64::new(-norm * (a * jm1 + b * jp1), 0.0) * phase;
    let e_z = Complex64::new(norm * mode.k / kk * jm, 0.0) * phase;
    [e_rho, e_phi, e_z]
}

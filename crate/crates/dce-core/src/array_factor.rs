//! Array form factors AF1/AF2 for cubic lattices, the brute-force discrete
//! oracle, and the infinite-monolayer momentum-conservation rule.
//!
//! Arguments are dimensionless (momenta in Ω/c, lengths in c/Ω).

use crate::error::{DceError, Result};
use crate::params::ArrayGeometry;
use num_complex::Complex64;

/// sin²(Nθ)/sin²(θ) with the removable singularities at θ = nπ evaluated by
/// the quadratic Taylor ratio (limit value N²).
fn dirichlet_sq(theta: f64, n: u32) -> f64 {
    let nf = n as f64;
    let t = {
        // reduce to distance from the nearest multiple of pi
        let r = theta.rem_euclid(std::f64::consts::PI);
        r.min(std::f64::consts::PI - r)
    };
    if t < 1e-6 {
        // sin(N(t+n*pi))/sin(t+n*pi) = +-sin(Nt')/sin(t') with t' the
        // distance to the node; ratio -> N(1 - (N^2-1)t'^2/6)
        let ratio = nf * (1.0 - (nf * nf - 1.0) * t * t / 6.0);
        ratio * ratio
    } else {
        let s = (nf * theta).sin() / theta.sin();
        s * s
    }
}

/// In-plane form factor
/// AF1 = Π_{i∈{x,y}} sin²[Δkᵢ Lᵢ/2]/sin²[Δkᵢ Lᵢ/2Nᵢ].
///
/// `dk_inplane` is k₁+k₂−β; `extents` are (Lx, Ly); peak value (Nx·Ny)².
pub fn af1_closed(dk_inplane: [f64; 2], nx: u32, ny: u32, lx: f64, ly: f64) -> f64 {
    let tx = dk_inplane[0] * lx / (2.0 * nx as f64);
    let ty = dk_inplane[1] * ly / (2.0 * ny as f64);
    dirichlet_sq(tx, nx) * dirichlet_sq(ty, ny)
}

/// Out-of-plane form factor AF2 = sin²[Δk_z Lz/2]/sin²[Δk_z Lz/2Nz];
/// identically 1 for a monolayer, peak value Nz².
pub fn af2_closed(dk_z: f64, nz: u32, lz: f64) -> f64 {
    if nz == 1 {
        return 1.0;
    }
    dirichlet_sq(dk_z * lz / (2.0 * nz as f64), nz)
}

/// Deterministic fixed-tree pairwise sum (reduction order independent of
/// chunking, reproducible bit-for-bit).
fn pairwise_phasor_sum(phases: &[f64]) -> Complex64 {
    match phases.len() {
        0 => Complex64::new(0.0, 0.0),
        1 => Complex64::from_polar(1.0, phases[0]),
        n => {
            let (a, b) = phases.split_at(n / 2);
            pairwise_phasor_sum(a) + pairwise_phasor_sum(b)
        }
    }
}

/// Brute-force |Σ_j e^{i·dk·R_j}|² over the cubic lattice, with positions
/// R_j = d(mx, my, mz), 1 ≤ mᵢ ≤ Nᵢ. Ground truth for the closed forms.
pub fn af_discrete_oracle(dk: [f64; 3], geometry: &ArrayGeometry) -> Result<f64> {
    let ArrayGeometry::CubicLattice { nx, ny, nz, d } = *geometry else {
        return Err(DceError::Parameter(
            "discrete form-factor oracle requires a cubic lattice".into(),
        ));
    };
    let total = nx as u64 * ny as u64 * nz as u64;
    if total > 1_000_000 {
        return Err(DceError::Resource(format!(
            "oracle limited to 1e6 atoms, requested {total}"
        )));
    }
    let mut phases = Vec::with_capacity(total as usize);
    for mx in 1..=nx {
        for my in 1..=ny {
            for mz in 1..=nz {
                phases.push(d * (dk[0] * mx as f64 + dk[1] * my as f64 + dk[2] * mz as f64));
            }
        }
    }
    Ok(pairwise_phasor_sum(&phases).norm_sqr())
}

/// Result of testing k₁ + k₂ = β + q on the infinite monolayer.
#[derive(Debug, Clone, Copy)]
pub struct ConservationReport {
    /// k₁ + k₂ − β.
    pub residual: [f64; 2],
    /// Reciprocal-lattice indices (n1, n2) nearest to residual·d/2π.
    pub q_index: [i64; 2],
    /// Residual lies on the reciprocal lattice (within tolerance).
    pub on_reciprocal_lattice: bool,
    /// The satisfying reciprocal vector is q = 0.
    pub q_zero: bool,
    /// All q ≠ 0 diffraction orders are evanescent (|q| = 2π/d exceeds the
    /// largest propagative momentum, which holds for d ≪ c/Ω).
    pub only_q0_propagative: bool,
}

/// Check the in-plane momentum-conservation condition for the periodic
/// monolayer with lattice constant `d` (units c/Ω).
pub fn lattice_momentum_rule(
    k1: [f64; 2],
    k2: [f64; 2],
    beta: [f64; 2],
    d: f64,
) -> ConservationReport {
    let residual = [k1[0] + k2[0] - beta[0], k1[1] + k2[1] - beta[1]];
    let g = std::f64::consts::TAU / d; // reciprocal-lattice spacing
    let n1 = (residual[0] / g).round() as i64;
    let n2 = (residual[1] / g).round() as i64;
    let tol = 1e-9 * g.max(1.0);
    let on_lattice = (residual[0] - n1 as f64 * g).abs() < tol
        && (residual[1] - n2 as f64 * g).abs() < tol;
    // propagative pair momenta satisfy |k1 + k2| <= 2; adding the kick
    // bound |beta| gives the largest residual a propagative order can have
    let beta_mag = (beta[0] * beta[0] + beta[1] * beta[1]).sqrt();
    ConservationReport {
        residual,
        q_index: [n1, n2],
        on_reciprocal_lattice: on_lattice,
        q_zero: on_lattice && n1 == 0 && n2 == 0,
        only_q0_propagative: g > 2.0 + beta_mag,
    }
}

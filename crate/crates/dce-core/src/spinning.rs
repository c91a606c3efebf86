//! Spinning-synthetic-phase observables: the t_a…t_e amplitude terms, the
//! angular-momentum spectrum f_ℓ(ω, m), its m-summed spectral weight, and
//! the total pair-creation rate Γ_ℓ for a modulated disk of dimensionless
//! radius 𝓡 = ΩR/c.
//!
//! Dimensionless variables: u = ω/Ω, transverse momenta κ ∈ (0, u),
//! κ′ ∈ (0, 1−u), signed axial momenta κ_z = ζ√(u²−κ²). The total rate is
//! normalized to Γ₀ evaluated at the disk area A = π𝓡²(c/Ω)²:
//!
//!   Γ_ℓ/Γ₀ = (π/8𝓡²) ∫₀¹ du Σ_m f_ℓ(u, m),
//!
//! which reproduces the linear-pipeline Γ(β=0) in the 𝓡 → ∞ limit for
//! ℓ = 0 (finite-disk values are depleted by an O(1/𝓡) rim correction; see
//! `total_rate_extrapolated`). Rates count photon pairs.

use crate::error::{DceError, Result};
use crate::quadrature::{gauss_legendre, Rule};
use crate::radial::{radial_tables, RadialIntegralSet};
use rayon::prelude::*;

/// Full kinematic label of one pair configuration.
#[derive(Debug, Clone, Copy)]
pub struct SpinningKinematics {
    pub u: f64,
    pub kappa: f64,
    pub kappa_prime: f64,
    /// Signed axial momenta (sign carries ζ, ζ′).
    pub kappa_z: f64,
    pub kappa_z_prime: f64,
    pub eta: i32,
    pub eta_prime: i32,
    pub m: i64,
    pub ell: i64,
    pub r_dimless: f64,
}

impl SpinningKinematics {
    pub fn validate(&self) -> Result<()> {
        if !(0.0 < self.u && self.u < 1.0) {
            return Err(DceError::Parameter(format!(
                "reduced frequency must lie in (0, 1), got {}",
                self.u
            )));
        }
        if self.kappa > self.u || self.kappa_prime > 1.0 - self.u {
            return Err(DceError::Parameter(
                "transverse momenta exceed the propagative domain".into(),
            ));
        }
        Ok(())
    }
}

/// The nine radial-integral values entering one t-term evaluation.
struct Nine {
    h_minus: f64,
    h_plus: f64,
    h_zero: f64,
    i_minus: f64,
    i_plus: f64,
    j_minus: f64,
    j_plus: f64,
    k_minus: f64,
    k_plus: f64,
}

/// t_a…t_e for one kinematic configuration. Relative to the published
/// expressions, three brackets are corrected so that the amplitude obeys the
/// pair-exchange symmetry (u, m, η, ζ, κ) ↔ (1−u, ℓ−m, η′, ζ′, κ′) that
/// energy and angular-momentum conservation impose (the published forms
/// break it and make the m-sum diverge):
///   * t_a/t_b weight the ℋ∓ triple products by (1−u)κ_z/u + uκ′_z/(1−u);
///   * t_c carries −2(κ_z+κ′_z)κκ′;
///   * t_d pairs (κ_z+ηu) with (κ′_z+η′(1−u)) on ℐ⁻ and the two minus-sign
///     combinations on ℐ⁺.
fn t_sum(u: f64, m: i64, ell: i64, kap: f64, kapp: f64, kz: f64, kzp: f64,
         eta: f64, etap: f64, ri: &Nine) -> [f64; 5] {
    let (k2, kp2) = (kap * kap, kapp * kapp);
    let pe = eta * u;
    let pep = etap * (1.0 - u);
    let (mu, mup) = (2.0 * u, 2.0 * (1.0 - u));
    let w3 = (1.0 - u) / u * kz + u / (1.0 - u) * kzp;
    let ta = (w3 * (kz + pe) * (kzp - pep) + kp2 * (kz + pe) / mup + k2 * (kzp - pep) / mu)
        * ri.h_minus;
    let tb = (w3 * (kzp + pep) * (kz - pe) + k2 * (kzp + pep) / mu + kp2 * (kz - pe) / mup)
        * ri.h_plus;
    let tc = -2.0 * (kz + kzp) * kap * kapp * ri.h_zero;
    let td = -(kp2 * (kz + pe) / mup + k2 * (kzp + pep) / mu) * ri.i_minus
        - (kp2 * (kz - pe) / mup + k2 * (kzp - pep) / mu) * ri.i_plus;
    let te = m as f64 * kap * (kzp + pep) / u * ri.j_minus
        + m as f64 * kap * (kzp - pep) / u * ri.j_plus
        + (ell - m) as f64 * kapp * (kz + pe) / (1.0 - u) * ri.k_minus
        + (ell - m) as f64 * kapp * (kz - pe) / (1.0 - u) * ri.k_plus;
    [ta, tb, tc, td, te]
}

/// The five amplitude terms for one kinematic configuration and its radial
/// integrals.
pub fn t_terms(kin: &SpinningKinematics, ri: &RadialIntegralSet) -> Result<[f64; 5]> {
    kin.validate()?;
    let nine = Nine {
        h_minus: ri.h_minus,
        h_plus: ri.h_plus,
        h_zero: ri.h_zero,
        i_minus: ri.i_minus,
        i_plus: ri.i_plus,
        j_minus: ri.j_minus,
        j_plus: ri.j_plus,
        k_minus: ri.k_minus,
        k_plus: ri.k_plus,
    };
    Ok(t_sum(
        kin.u,
        kin.m,
        kin.ell,
        kin.kappa,
        kin.kappa_prime,
        kin.kappa_z,
        kin.kappa_z_prime,
        kin.eta as f64,
        kin.eta_prime as f64,
        &nine,
    ))
}

/// Quadrature resolution for the spinning spectrum.
#[derive(Debug, Clone, Copy)]
pub struct SpinningOpts {
    /// Gauss order of the momentum-angle grids (κ = u sinα).
    pub nk: usize,
    /// Gauss order per radial panel (panel width ≤ 0.5 c/Ω).
    pub nper: usize,
}

impl Default for SpinningOpts {
    fn default() -> Self {
        Self { nk: 32, nper: 10 }
    }
}

fn radial_panels(r: f64) -> usize {
    ((r / 0.5).ceil() as usize).max(4)
}

/// Angular-momentum spectrum component f_ℓ(u, m): the (κ, κ′) double
/// integral over the propagative rectangle of the squared t-term sum, summed
/// over ζ, ζ′, η, η′. The substitution κ = u sinα absorbs the 1/(κ_zκ′_z)
/// measure exactly, so a tensor Gauss rule in (α, α′) converges fast.
pub fn f_ell_m(u: f64, m: i64, ell: i64, r_dimless: f64, opts: SpinningOpts) -> Result<f64> {
    if !(0.0 < u && u < 1.0) {
        return Err(DceError::Parameter(format!(
            "reduced frequency must lie in (0, 1), got {u}"
        )));
    }
    if r_dimless <= 0.0 {
        return Err(DceError::Parameter(format!(
            "disk radius must be positive, got {r_dimless}"
        )));
    }
    let (xa, wa) = gauss_legendre(opts.nk);
    let nk = opts.nk;
    let mut sn = vec![0.0; nk];
    let mut wal = vec![0.0; nk];
    let mut cs = vec![0.0; nk];
    for i in 0..nk {
        let alpha = (xa[i] + 1.0) * std::f64::consts::FRAC_PI_4;
        sn[i] = alpha.sin();
        cs[i] = alpha.cos();
        wal[i] = wa[i] * std::f64::consts::FRAC_PI_4;
    }
    let kap: Vec<f64> = sn.iter().map(|s| u * s).collect();
    let kapp: Vec<f64> = sn.iter().map(|s| (1.0 - u) * s).collect();
    let rule = Rule::new(opts.nper);
    let t = radial_tables(m, ell, &kap, &kapp, r_dimless, &rule, radial_panels(r_dimless));
    let mut tot = 0.0;
    for i in 0..nk {
        let kz0 = u * cs[i];
        for j in 0..nk {
            let kzp0 = (1.0 - u) * cs[j];
            let idx = i * t.n2 + j;
            let nine = Nine {
                h_minus: t.h_minus[idx],
                h_plus: t.h_plus[idx],
                h_zero: t.h_zero[idx],
                i_minus: t.i_minus[idx],
                i_plus: t.i_plus[idx],
                j_minus: t.j_minus[idx],
                j_plus: t.j_plus[idx],
                k_minus: t.k_minus[idx],
                k_plus: t.k_plus[idx],
            };
            let w2 = (wal[i] * sn[i]) * (wal[j] * sn[j]) * u * (1.0 - u);
            for eta in [1.0, -1.0] {
                for etap in [1.0, -1.0] {
                    for z1 in [1.0, -1.0] {
                        for z2 in [1.0, -1.0] {
                            let terms = t_sum(
                                u, m, ell, kap[i], kapp[j], z1 * kz0, z2 * kzp0, eta, etap,
                                &nine,
                            );
                            let s: f64 = terms.iter().sum();
                            tot += w2 * s * s;
                        }
                    }
                }
            }
        }
    }
    Ok(tot)
}

/// m-summed spectral weight with truncation diagnostics.
#[derive(Debug, Clone)]
pub struct SpectralWeight {
    pub value: f64,
    /// (m, f_ℓ(u, m)) for every m in the window.
    pub per_m: Vec<(i64, f64)>,
    /// Contribution of the outermost two m-shells relative to the total.
    pub tail_fraction: f64,
    /// tail_fraction < 1e-4.
    pub converged: bool,
}

/// Σ_m f_ℓ(u, m) over the window m ∈ [ℓ−m_max, ℓ+m_max] (centered on the
/// dominant shells m ∈ {0, ℓ}), with a tail estimate from the outermost two
/// shells.
pub fn f_ell(u: f64, ell: i64, r_dimless: f64, m_max: i64, opts: SpinningOpts)
             -> Result<SpectralWeight> {
    if m_max < ell.abs() + 5 {
        return Err(DceError::Parameter(format!(
            "m_max must be at least |ell| + 5, got {m_max}"
        )));
    }
    let ms: Vec<i64> = (ell - m_max..=ell + m_max).collect();
    let per_m: Vec<(i64, f64)> = ms
        .par_iter()
        .map(|&m| f_ell_m(u, m, ell, r_dimless, opts).map(|v| (m, v)))
        .collect::<Result<Vec<_>>>()?;
    let value: f64 = per_m.iter().map(|(_, v)| v).sum();
    let tail: f64 = per_m
        .iter()
        .filter(|(m, _)| (m - ell).abs() >= m_max - 1 || m.abs() >= m_max - 1)
        .map(|(_, v)| v)
        .sum();
    let tail_fraction = if value > 0.0 { tail / value } else { 0.0 };
    Ok(SpectralWeight {
        value,
        per_m,
        tail_fraction,
        converged: tail_fraction < 1e-4,
    })
}

/// Total-rate result for one topological charge and disk radius.
#[derive(Debug, Clone)]
pub struct SpinningRate {
    pub ell: i64,
    pub r_dimless: f64,
    /// Γ_ℓ/Γ₀ with Γ₀ at the disk area A = π𝓡²(c/Ω)².
    pub gamma_over_gamma0: f64,
    pub m_max: i64,
    /// Worst per-frequency m-tail fraction across the u grid.
    pub max_tail_fraction: f64,
    pub converged: bool,
}

/// m-window that meets the 1e-4 tail criterion empirically: the spectrum
/// decays super-exponentially beyond |m|, ~ the rim momentum 𝓡·κ_max.
fn default_m_max(ell: i64, r: f64) -> i64 {
    ell.abs() + 10 + (0.8 * r).ceil() as i64
}

/// Total pair-creation rate Γ_ℓ/Γ₀ = (π/8𝓡²)∫₀¹du Σ_m f_ℓ(u, m), with the
/// frequency integral on an `nu`-point Gauss rule (the integrand is smooth
/// and symmetric about u = 1/2).
pub fn total_rate_spinning(ell: i64, r_dimless: f64, nu: usize, opts: SpinningOpts)
                           -> Result<SpinningRate> {
    if r_dimless <= 0.0 {
        return Err(DceError::Parameter(format!(
            "disk radius must be positive, got {r_dimless}"
        )));
    }
    let m_max = default_m_max(ell, r_dimless);
    let (xu, wu) = gauss_legendre(nu);
    let per_u: Vec<(f64, f64)> = (0..nu)
        .into_par_iter()
        .map(|i| {
            let u = 0.5 * (xu[i] + 1.0);
            let w = 0.5 * wu[i];
            f_ell(u, ell, r_dimless, m_max, opts).map(|sw| (w * sw.value, sw.tail_fraction))
        })
        .collect::<Result<Vec<_>>>()?;
    let integral: f64 = per_u.iter().map(|(v, _)| v).sum();
    let max_tail = per_u.iter().fold(0.0f64, |a, &(_, t)| a.max(t));
    Ok(SpinningRate {
        ell,
        r_dimless,
        gamma_over_gamma0: std::f64::consts::PI / (8.0 * r_dimless * r_dimless) * integral,
        m_max,
        max_tail_fraction: max_tail,
        converged: max_tail < 1e-4,
    })
}

/// Infinite-disk limit by linear extrapolation in 1/𝓡 from the two largest
/// radii: Γ(𝓡) = Γ_∞ − c/𝓡 to leading order (rim depletion).
pub fn total_rate_extrapolated(ell: i64, radii: &[f64], nu: usize, opts: SpinningOpts)
                               -> Result<(Vec<SpinningRate>, f64)> {
    if radii.len() < 2 {
        return Err(DceError::Parameter(
            "extrapolation needs at least two disk radii".into(),
        ));
    }
    let mut rates = Vec::with_capacity(radii.len());
    for &r in radii {
        rates.push(total_rate_spinning(ell, r, nu, opts)?);
    }
    let n = rates.len();
    let (r1, g1) = (rates[n - 2].r_dimless, rates[n - 2].gamma_over_gamma0);
    let (r2, g2) = (rates[n - 1].r_dimless, rates[n - 1].gamma_over_gamma0);
    let inf = (r2 * g2 - r1 * g1) / (r2 - r1);
    Ok((rates, inf))
}

/// Angular-momentum conservation of the pair: AF3 ∝ δ_{m₁+m₂,ℓ}.
#[derive(Debug, Clone, Copy)]
pub struct Af3Conservation {
    pub m1: i64,
    pub m2: i64,
    pub ell: i64,
    pub allowed: bool,
    /// Kronecker-delta weight of the coherent disk sum (the common
    /// [∫₀^𝓡 dx·x·T(x)]² factor is mode-independent and factored out).
    pub delta: f64,
}

pub fn af3_conservation(m1: i64, m2: i64, ell: i64) -> Af3Conservation {
    let allowed = m1 + m2 == ell;
    Af3Conservation {
        m1,
        m2,
        ell,
        allowed,
        delta: if allowed { 1.0 } else { 0.0 },
    }
}

//! Linear-synthetic-phase observables: partner kinematics, emission-region
//! geometry, angular densities, finite-array lobes, spectral and total rates.
//!
//! All quantities are dimensionless (c = Ω = 1): u = ω/Ω ∈ (0, 1), in-plane
//! momenta in units Ω/c, kicks b = cβ/Ω. Spectral rates are in Γ₀/Ω and
//! total rates in Γ₀, both counting photon *pairs* (the per-photon emission
//! density integrates to exactly twice the pair rate, since every pair is
//! reached once through each of its photons).

use crate::array_factor::{af1_closed, af2_closed};
use crate::error::{DceError, Result};
use crate::params::ArrayGeometry;
use crate::polarization::{w_tilde_matrix, PlaneWaveMode, Pol};
use crate::quadrature::integrate_split;
use crate::vec3::Vec3;

/// Out-of-plane kinematics of the partner photon fixed by conservation.
#[derive(Debug, Clone)]
pub struct PartnerKinematics {
    /// In-plane momentum k₂ = β − k₁.
    pub k2: [f64; 2],
    /// |k₂z| when propagative, 0 otherwise.
    pub k2z_abs: f64,
    /// The pair has no far-field partner (|β−k₁| > 1−u or |k₁| > u).
    pub evanescent: bool,
    /// Allowed emission normals ζ₂ (both for a monolayer when propagative).
    pub allowed_zeta2: Vec<i32>,
}

/// Partner kinematics for photon 1 at reduced frequency `u` and in-plane
/// momentum `k1`, under kick `beta`.
pub fn partner(k1: [f64; 2], u: f64, beta: [f64; 2]) -> Result<PartnerKinematics> {
    if !(0.0 < u && u < 1.0) {
        return Err(DceError::Parameter(format!(
            "reduced frequency must lie in (0, 1), got {u}"
        )));
    }
    let k2 = [beta[0] - k1[0], beta[1] - k1[1]];
    let k1m2 = k1[0] * k1[0] + k1[1] * k1[1];
    let k2m2 = k2[0] * k2[0] + k2[1] * k2[1];
    let u2 = 1.0 - u;
    if k1m2 > u * u || k2m2 > u2 * u2 {
        return Ok(PartnerKinematics {
            k2,
            k2z_abs: 0.0,
            evanescent: true,
            allowed_zeta2: Vec::new(),
        });
    }
    Ok(PartnerKinematics {
        k2,
        k2z_abs: (u2 * u2 - k2m2).sqrt(),
        evanescent: false,
        allowed_zeta2: vec![1, -1],
    })
}

/// Which photon of the pair an emission region describes (the geometry is the
/// same function of that photon's own reduced frequency; the role is echoed
/// for labelling).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhotonRole {
    High,
    Low,
}

/// Allowed emission directions of one photon at reduced frequency u under
/// kick b, as per-azimuth sinθ intervals plus topology flags.
#[derive(Debug, Clone)]
pub struct EmissionRegion {
    pub u: f64,
    pub beta: f64,
    pub role: PhotonRole,
    /// Rows (φ, s_min, s_max) where the allowed sinθ interval is non-empty;
    /// azimuth measured from the kick direction.
    pub boundary: Vec<(f64, f64, f64)>,
    /// Some direction is allowed.
    pub nonempty: bool,
    /// Normal emission (θ = 0) is allowed; when false but nonempty, the
    /// allowed set is an island detached from the normal.
    pub contains_normal: bool,
    /// Every direction is allowed (no forbidden zone).
    pub covers_all: bool,
    /// The allowed set reaches grazing emission (θ = π/2).
    pub touches_grazing: bool,
}

/// Allowed sinθ interval at azimuth φ (from the kick direction), from the
/// partner reality condition |β − u·s·n̂| ≤ 1−u on the unit-s disk.
fn allowed_s_interval(u: f64, b: f64, phi: f64) -> Option<(f64, f64)> {
    // written as (1−u)² − b²sin²φ to avoid cancellation of the b² terms
    let disc = (1.0 - u) * (1.0 - u) - (b * phi.sin()).powi(2);
    if disc <= 0.0 {
        return None;
    }
    let r = disc.sqrt();
    let c = b * phi.cos();
    let lo = ((c - r) / u).max(0.0);
    // for cosφ ≤ 0 the sum c + r cancels; the equivalent product form
    // (1−u)²−b² over r − c keeps the sliver width accurate near the pinch
    let hi = if c <= 0.0 {
        (1.0 - u - b) * (1.0 - u + b) / (u * (r - c))
    } else {
        (c + r) / u
    }
    .min(1.0);
    if hi <= lo {
        None
    } else {
        Some((lo, hi))
    }
}

/// Emission-region descriptor for a photon of reduced frequency `u` under
/// kick `b` ≥ 0 (kick along φ = 0).
pub fn emission_region(u: f64, b: f64, role: PhotonRole) -> Result<EmissionRegion> {
    if !(0.0 < u && u < 1.0) {
        return Err(DceError::Parameter(format!(
            "reduced frequency must lie in (0, 1), got {u}"
        )));
    }
    let nphi = 720;
    let mut boundary = Vec::new();
    let mut nonempty = false;
    let mut covers_all = true;
    let mut touches_grazing = false;
    for i in 0..=nphi {
        let phi = std::f64::consts::PI * i as f64 / nphi as f64;
        match allowed_s_interval(u, b, phi) {
            Some((lo, hi)) => {
                nonempty = true;
                if lo > 1e-12 || hi < 1.0 - 1e-12 {
                    covers_all = false;
                }
                if hi >= 1.0 - 1e-12 {
                    touches_grazing = true;
                }
                boundary.push((phi, lo, hi));
            }
            None => covers_all = false,
        }
    }
    let contains_normal = allowed_s_interval(u, b, 0.0).is_some_and(|(lo, _)| lo <= 1e-12);
    Ok(EmissionRegion {
        u,
        beta: b,
        role,
        boundary,
        nonempty,
        contains_normal,
        covers_all,
        touches_grazing,
    })
}

/// Critical kicks of the region topology for a photon at reduced frequency
/// u, located by bisection on the sampled region flags.
#[derive(Debug, Clone, Copy)]
pub struct CriticalKicks {
    /// Kick at which the allowed set detaches from the normal (island onset)
    /// — analytically 1−u.
    pub island_onset: f64,
    /// Kick at which the island reaches grazing emission — analytically
    /// |2u−1| (grazing is reached from the start when u ≤ 1/2).
    pub grazing_contact: Option<f64>,
    /// Kick at which the allowed set vanishes — analytically 1.
    pub collapse: f64,
    /// Kick at which a forbidden zone first appears (full-disk coverage
    /// lost) — analytically 1−2u for u < 1/2, 0 otherwise.
    pub coverage_loss: Option<f64>,
}

fn bisect_flag<F: Fn(f64) -> bool>(mut lo: f64, mut hi: f64, flag_at_lo: bool, f: F) -> f64 {
    // invariant: f(lo) == flag_at_lo != f(hi)
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if f(mid) == flag_at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

pub fn critical_kicks(u: f64, role: PhotonRole) -> Result<CriticalKicks> {
    let region = |b: f64| emission_region(u, b, role).expect("u validated");
    if !(0.0 < u && u < 1.0) {
        return Err(DceError::Parameter(format!(
            "reduced frequency must lie in (0, 1), got {u}"
        )));
    }
    let island_onset = bisect_flag(0.0, 1.0, true, |b| region(b).contains_normal);
    let collapse = bisect_flag(0.5, 1.5, true, |b| region(b).nonempty);
    let grazing_contact = if region(0.0).touches_grazing {
        None
    } else {
        Some(bisect_flag(0.0, 1.0, false, |b| region(b).touches_grazing))
    };
    let coverage_loss = if region(0.0).covers_all {
        Some(bisect_flag(0.0, 1.0, true, |b| region(b).covers_all))
    } else {
        None
    };
    Ok(CriticalKicks {
        island_onset,
        grazing_contact,
        collapse,
        coverage_loss,
    })
}

/// Σ over partner polarizations of W̃² for photon-1 polarization `lam1`
/// (linear or circular), with the TE–TM cross term optionally suppressed for
/// the asymmetry-mechanism diagnostic.
fn wt2_partner_sum(lam1: Pol, m1: &PlaneWaveMode, m2: &PlaneWaveMode,
                   include_cross: bool) -> Result<f64> {
    let wm = w_tilde_matrix(m1, m2)?;
    match lam1 {
        Pol::TE | Pol::TM => {
            let row = wm[if lam1 == Pol::TE { 0 } else { 1 }];
            let cross = row[if lam1 == Pol::TE { 1 } else { 0 }];
            let same = row[if lam1 == Pol::TE { 0 } else { 1 }];
            Ok(same * same + if include_cross { cross * cross } else { 0.0 })
        }
        // ê_{R/L} = (ê_TE ± i ê_TM)/√2 per photon; the λ₂-summed modulus is
        // basis-independent, so the circular channel is half the λ₁-sum.
        Pol::R | Pol::L => {
            let sign = if lam1 == Pol::R { 1.0 } else { -1.0 };
            let mut s = 0.0;
            for j in 0..2 {
                let amp_re = std::f64::consts::FRAC_1_SQRT_2 * wm[0][j];
                let amp_im = sign * std::f64::consts::FRAC_1_SQRT_2 * wm[1][j];
                s += amp_re * amp_re + amp_im * amp_im;
            }
            Ok(s)
        }
    }
}

/// Emission density f (per unit area, r₀·Ω²/c² units) of photon 1 at polar
/// direction (θ, φ) with reduced frequency u, kick along φ = 0, summed over
/// the partner's ζ₂ and polarizations:
///   f = [u(1−u)² / |κ₂z|] Σ_{ζ₂,λ₂} AF2 · W̃².
/// Zero with the evanescent flag when no far-field partner exists. For a
/// monolayer (or `stack = None`) AF2 ≡ 1.
pub fn density_f(
    theta: f64,
    phi: f64,
    u: f64,
    b: f64,
    lam1: Pol,
    zeta1: i32,
    stack: Option<(u32, f64)>,
) -> Result<f64> {
    if zeta1 != 1 && zeta1 != -1 {
        return Err(DceError::Parameter(format!("zeta1 must be +-1, got {zeta1}")));
    }
    let s = theta.sin().abs();
    let k1 = [u * s * phi.cos(), u * s * phi.sin()];
    let pk = partner(k1, u, [b, 0.0])?;
    if pk.evanescent || pk.k2z_abs < 1e-300 {
        return Ok(0.0);
    }
    let k1z = zeta1 as f64 * (u * u - k1[0] * k1[0] - k1[1] * k1[1]).max(0.0).sqrt();
    let m1 = PlaneWaveMode::new(k1, k1z, u, lam1)?;
    let mut sum = 0.0;
    for &z2 in &pk.allowed_zeta2 {
        let k2z = z2 as f64 * pk.k2z_abs;
        let m2 = PlaneWaveMode::new(pk.k2, k2z, 1.0 - u, Pol::TE)?;
        let af2 = match stack {
            Some((nz, d)) => af2_closed(k1z + k2z, nz, nz as f64 * d),
            None => 1.0,
        };
        sum += af2 * wt2_partner_sum(lam1, &m1, &m2, true)?;
    }
    Ok(u * (1.0 - u) * (1.0 - u) / pk.k2z_abs * sum)
}

/// Fig.-2-style finite-array emission lobes in the yz-plane: partner photon
/// fixed along +z at ω₂ = Ω/2, photon 1 at polar angle θ from the z-axis in
/// the plane containing the kick (taken along ŷ, signed by `b`). Rate in r₀
/// units per atom-count-squared, i.e. AF1·AF2/(NxNyNz)² weighting.
pub fn lobes_finite_array(
    b: f64,
    lam1: Pol,
    geometry: &ArrayGeometry,
    thetas: &[f64],
) -> Result<Vec<f64>> {
    let ArrayGeometry::CubicLattice { nx, ny, nz, d } = *geometry else {
        return Err(DceError::Parameter(
            "emission lobes require a cubic-lattice geometry".into(),
        ));
    };
    let (lx, ly, lz) = (nx as f64 * d, ny as f64 * d, nz as f64 * d);
    let norm = (nx as f64 * ny as f64 * nz as f64).powi(2);
    let u = 0.5;
    let mut out = Vec::with_capacity(thetas.len());
    for &theta in thetas {
        let k1 = [0.0, u * theta.sin()];
        let k1z = u * theta.cos();
        let m1 = PlaneWaveMode::new(k1, k1z, u, lam1)?;
        let af1 = af1_closed([k1[0], k1[1] - b], nx, ny, lx, ly);
        let mut rate = 0.0;
        for z2 in [1i32, -1] {
            let k2z = z2 as f64 * u;
            let m2 = PlaneWaveMode::new([0.0, 0.0], k2z, u, Pol::TE)?;
            let af2 = af2_closed(k1z + k2z, nz, lz);
            rate += af1 * af2 * wt2_partner_sum(lam1, &m1, &m2, true)?;
        }
        // frequency prefactor ω₁ω₂/Ω² at the degenerate point
        out.push(0.25 * rate / norm);
    }
    Ok(out)
}

/// Inner polar integral of the monolayer spectral density at fixed azimuth.
///
/// The substitution s = A + (B−A)sin²χ absorbs the 1/κ₂z endpoint
/// singularities of the allowed interval exactly when the endpoints are the
/// reality roots. When an endpoint is instead the clamped boundary s = 0 or
/// s = 1, or when the photon grazes (s₊ → 1⁻), the integrand keeps a sharp
/// 1/√(ε + cos²χ)-type boundary layer of width √ε; the χ integral is
/// therefore refined adaptively with explicit breakpoints at the layer
/// transitions, where a fixed rule silently loses several digits.
fn inner_theta(u: f64, b: f64, phi: f64, lam1: Pol, include_cross: bool,
               rel_tol: f64) -> Result<f64> {
    let Some((a, bb)) = allowed_s_interval(u, b, phi) else {
        return Ok(0.0);
    };
    let disc = (1.0 - u) * (1.0 - u) - (b * phi.sin()).powi(2);
    let r = disc.sqrt();
    let c = b * phi.cos();
    let sm = (c - r) / u;
    // product form past φ = π/2, matching allowed_s_interval (the sum c + r
    // cancels near the pinch)
    let sp = if c <= 0.0 {
        (1.0 - u - b) * (1.0 - u + b) / (u * (r - c))
    } else {
        (c + r) / u
    };
    // cancellation-free distances to the unclamped roots and to grazing
    let dsm = (a - sm).max(0.0);
    let dsp = (sp - bb).max(0.0);
    // with both clamps inactive the width is 2r/u exactly; the difference
    // bb − a of O(b/u) quantities loses it entirely when the band is narrow
    let w = if dsm == 0.0 && dsp == 0.0 {
        2.0 * r / u
    } else {
        bb - a
    };
    // At the grazing azimuth both distances vanish and the θ integrand picks
    // up a non-integrable 1/cosθ endpoint; the azimuth driver holds a
    // breakpoint there but still samples within an ulp of it, so floor the
    // grazing distance — those nodes carry double-exponentially small weight.
    let mut d1 = 1.0 - bb;
    if dsp <= 0.0 {
        d1 = d1.max(1e-18 * w);
    }
    let mut breaks = Vec::new();
    if dsm > 0.0 && dsm < w {
        breaks.push((dsm / w).sqrt().asin());
    }
    if dsp > 0.0 && dsp < w {
        breaks.push(((dsp / w).sqrt()).acos());
    }
    if d1 > 0.0 && d1 < w {
        breaks.push(((d1 / w).sqrt()).acos());
    }
    // Partner normal incidence: at s* = b/(u cosφ) the partner's in-plane
    // momentum passes through ~0 and the integrand has a notch of width ~φ.
    if b > 0.0 && phi < std::f64::consts::FRAC_PI_2 {
        let s_star = b / (u * phi.cos());
        if s_star > a && s_star < bb {
            breaks.push((((s_star - a) / w).sqrt()).asin());
        }
    }
    integrate_split(0.0, std::f64::consts::FRAC_PI_2, &breaks, rel_tol, |chi| {
        let (sn, cs) = chi.sin_cos();
        let s = a + w * sn * sn;
        let ds = w * 2.0 * sn * cs;
        let one_minus_s = d1 + w * cs * cs;
        let ct = (one_minus_s * (1.0 + s)).max(0.0).sqrt();
        let s_minus_sm = dsm + w * sn * sn;
        let sp_minus_s = dsp + w * cs * cs;
        let k2z_abs = u * (sp_minus_s * s_minus_sm).max(0.0).sqrt();
        if k2z_abs == 0.0 || ct == 0.0 {
            return 0.0;
        }
        let k1 = [u * s * phi.cos(), u * s * phi.sin()];
        let k1z = u * ct;
        // k₂x = b − u·s·cosφ loses all digits against the partner scale 1−u
        // as u → 1; with a = s₋ unclamped it reduces exactly to
        // b·sin²φ + cosφ·(r − u·w·sin²χ), every term of which is O(1−u) there.
        let k2x = if a > 0.0 {
            b * phi.sin().powi(2) + phi.cos() * (r - u * w * sn * sn)
        } else {
            b - k1[0]
        };
        let k2 = [k2x, -k1[1]];
        // The partner κ₂z comes from the same root-product form as the
        // weight: evaluating √((1−u)²−|k₂|²) directly loses ~half the digits
        // near grazing and that noise floor defeats the quadrature driver.
        let inner = || -> Result<f64> {
            let m1 = PlaneWaveMode::new(k1, k1z, u, lam1)?;
            let mut val = 0.0;
            for z2 in [1i32, -1] {
                let m2 = PlaneWaveMode::new(k2, z2 as f64 * k2z_abs, 1.0 - u, Pol::TE)?;
                val += wt2_partner_sum(lam1, &m1, &m2, include_cross)?;
            }
            Ok(val)
        };
        match inner() {
            Ok(val) => ds * s / ct * val / k2z_abs,
            Err(_) => f64::NAN,
        }
    })
}

/// Per-photon spectral density g_λ(u, b) = dΓ_λ^{photon}/du in Γ₀ units:
///   g = 2u³(1−u)² ∫dφ ∫dθ sinθ (1/κ₂z) Σ_{ζ₂,λ₂} W̃²,
/// with the leading 2 counting ζ₁ = ±1 and the φ integral folded onto
/// (0, π) by the kick-axis mirror symmetry.
pub fn g_lambda(u: f64, b: f64, lam1: Pol, include_cross: bool, rel_tol: f64) -> Result<f64> {
    if !(0.0 < u && u < 1.0) {
        return Err(DceError::Parameter(format!(
            "reduced frequency must lie in (0, 1), got {u}"
        )));
    }
    // Azimuths where the inner integral is singular or kinked: the edge
    // s₊(φ) = 1 crossing (grazing of photon 1, logarithmic), and the two
    // region-closing roots of the reality discriminant (square-root kinks).
    let mut breaks = Vec::new();
    if b > 0.0 {
        let c1 = (2.0 * u - 1.0 + b * b) / (2.0 * u * b);
        if c1.abs() < 1.0 {
            breaks.push(c1.acos());
        }
        let d = b * b - (1.0 - u) * (1.0 - u);
        if d > 0.0 && d < b * b {
            let phi_c = (d.sqrt() / b).acos();
            breaks.push(phi_c);
            breaks.push(std::f64::consts::PI - phi_c);
        } else if d <= 0.0 && d > -1e-6 * b * b {
            // at u = 1−b the region closes exactly at φ = π/2, and for u
            // slightly below it pinches to a sharp notch there
            breaks.push(std::f64::consts::FRAC_PI_2);
        }
    }
    let val = integrate_split(0.0, std::f64::consts::PI, &breaks, rel_tol, |phi| {
        // Retry a failed inner integral at relaxed tolerance before giving
        // up on the node: the azimuths where it degenerates lie within an
        // ulp of the flagged breakpoints and carry double-exponentially
        // small quadrature weight, so their accuracy is immaterial.
        [0.3 * rel_tol, 1e-6, 1e-4]
            .iter()
            .find_map(|&t| inner_theta(u, b, phi, lam1, include_cross, t).ok())
            .unwrap_or(f64::NAN)
    })?;
    Ok(2.0 * u.powi(3) * (1.0 - u) * (1.0 - u) * 2.0 * val)
}

/// Spectral pair-emission rate dΓ_λ/dω in Γ₀/Ω units for the monolayer
/// (half the per-photon density g_λ). Depends only on |b|.
pub fn spectral_rate(u: f64, b: f64, lam: Pol, rel_tol: f64) -> Result<f64> {
    Ok(0.5 * g_lambda(u, b.abs(), lam, true, rel_tol)?)
}

/// As `spectral_rate` with the TE–TM cross-polarized term removed
/// (diagnostic for the spectral-asymmetry mechanism; linear λ only).
pub fn spectral_rate_no_cross(u: f64, b: f64, lam: Pol, rel_tol: f64) -> Result<f64> {
    Ok(0.5 * g_lambda(u, b.abs(), lam, false, rel_tol)?)
}

/// Polarization selector for total rates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RateChannel {
    Single(Pol),
    Total,
}

/// Total pair-creation rate Γ (Γ₀ units): frequency integral of the
/// spectral rate. Zero for kicks b ≥ 1 (no propagative pairs).
pub fn total_rate(b: f64, channel: RateChannel, rel_tol: f64) -> Result<f64> {
    let b = b.abs();
    if b >= 1.0 {
        return Ok(0.0);
    }
    let margin = 1e-9;
    // Frequencies where the emission-region topology changes at this kick:
    // grazing contact u = (1±b)/2 and island onset u = 1−b.
    let breaks = [(1.0 - b) / 2.0, (1.0 + b) / 2.0, 1.0 - b];
    let one = |lam: Pol| -> Result<f64> {
        integrate_split(margin, 1.0 - margin, &breaks, rel_tol, |u| {
            // same relaxation for frequencies within an ulp of a topology
            // threshold: the node weight there is negligible
            [rel_tol, 1e-5, 1e-4]
                .iter()
                .find_map(|&t| spectral_rate(u, b, lam, t).ok())
                .unwrap_or(f64::NAN)
        })
    };
    match channel {
        RateChannel::Single(p) => one(p),
        RateChannel::Total => Ok(one(Pol::TE)? + one(Pol::TM)?),
    }
}

/// Joint pair distribution over (u, θ, φ) for photon 1 (polarization- and
/// ζ-summed, partner fixed by conservation), normalized to unit sum over the
/// grid cells.
#[derive(Debug, Clone)]
pub struct JointDistribution {
    pub us: Vec<f64>,
    pub thetas: Vec<f64>,
    pub phis: Vec<f64>,
    /// values[(iu * nθ + it) * nφ + ip], cell-probability normalized.
    pub values: Vec<f64>,
}

pub fn joint_pair_distribution(
    b: f64,
    nu: usize,
    ntheta: usize,
    nphi: usize,
) -> Result<JointDistribution> {
    if b.abs() >= 1.0 {
        return Err(DceError::Parameter(format!(
            "no propagative pairs at kick {b}"
        )));
    }
    if nu < 2 || ntheta < 2 || nphi < 2 {
        return Err(DceError::Parameter("joint-distribution grid too small".into()));
    }
    let us: Vec<f64> = (0..nu).map(|i| (i as f64 + 0.5) / nu as f64).collect();
    let thetas: Vec<f64> = (0..ntheta)
        .map(|i| (i as f64 + 0.5) / ntheta as f64 * std::f64::consts::FRAC_PI_2)
        .collect();
    let phis: Vec<f64> = (0..nphi)
        .map(|i| (i as f64 + 0.5) / nphi as f64 * std::f64::consts::TAU)
        .collect();
    let mut values = vec![0.0; nu * ntheta * nphi];
    for (iu, &u) in us.iter().enumerate() {
        for (it, &theta) in thetas.iter().enumerate() {
            for (ip, &phi) in phis.iter().enumerate() {
                let mut f = 0.0;
                for lam in [Pol::TE, Pol::TM] {
                    f += density_f(theta, phi, u, b.abs(), lam, 1, None)?;
                }
                // measure u² sinθ from d²k = ω²/c² sinθ cosθ dθ dφ and the
                // 1/cosθ of the shell density; ζ₁ = −1 doubles, symmetric
                values[(iu * ntheta + it) * nphi + ip] = 2.0 * u * u * theta.sin() * f;
            }
        }
    }
    let total: f64 = values.iter().sum();
    if total > 0.0 {
        for v in &mut values {
            *v /= total;
        }
    }
    Ok(JointDistribution {
        us,
        thetas,
        phis,
        values,
    })
}

/// Rotating the kick in-plane rotates the density by the same azimuth; used
/// by the covariance property test.
pub fn density_f_rotated_kick(
    theta: f64,
    phi: f64,
    u: f64,
    beta: [f64; 2],
    lam1: Pol,
    zeta1: i32,
) -> Result<f64> {
    let b = (beta[0] * beta[0] + beta[1] * beta[1]).sqrt();
    let kick_azimuth = beta[1].atan2(beta[0]);
    density_f(theta, phi - kick_azimuth, u, b, lam1, zeta1, None)
}

/// Direction unit vector for (θ from z, azimuth φ), ζ selecting hemisphere.
pub fn direction(theta: f64, phi: f64, zeta: i32) -> Vec3 {
    let s = theta.sin();
    [s * phi.cos(), s * phi.sin(), zeta as f64 * theta.cos()]
}

//! Plane-wave photon modes, TE/TM/circular polarization bases, and the
//! two-photon coupling amplitude W̃.
//!
//! Internal units c = 1, Ω = 1: K = ω, all momenta in Ω/c.

use crate::error::{DceError, Result};
use crate::vec3::{cross, dot, norm, normalize, Vec3, ZHAT};
use num_complex::Complex64;

/// Polarization label. TE/TM are the fundamental linear states; R/L are
/// derived from them by a unitary transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pol {
    TE,
    TM,
    R,
    L,
}

impl Pol {
    pub fn is_linear(self) -> bool {
        matches!(self, Pol::TE | Pol::TM)
    }
}

/// A plane-wave photon mode in the internal dimensionless system.
#[derive(Debug, Clone, Copy)]
pub struct PlaneWaveMode {
    /// In-plane wavevector (units Ω/c).
    pub k: [f64; 2],
    /// Signed out-of-plane component (units Ω/c).
    pub kz: f64,
    /// Frequency ω/Ω in (0, 1].
    pub omega: f64,
    pub pol: Pol,
}

impl PlaneWaveMode {
    /// Build a mode, checking the dispersion relation ω² = |k|² + kz².
    pub fn new(k: [f64; 2], kz: f64, omega: f64, pol: Pol) -> Result<Self> {
        let m = Self { k, kz, omega, pol };
        if !m.on_shell() {
            return Err(DceError::Parameter(format!(
                "off-shell mode: omega^2 = {:.17e}, |K|^2 = {:.17e}",
                omega * omega,
                m.k_squared()
            )));
        }
        Ok(m)
    }

    fn k_squared(&self) -> f64 {
        self.k[0] * self.k[0] + self.k[1] * self.k[1] + self.kz * self.kz
    }

    pub fn on_shell(&self) -> bool {
        // tolerance relative to the largest momentum scale of the mode, so
        // that near-grazing modes (|kz| ≪ |k|) built from O(|k|) arithmetic
        // are not rejected for rounding at the |k| scale
        let w2 = self.omega * self.omega;
        let scale = w2
            .max(self.k[0] * self.k[0] + self.k[1] * self.k[1])
            .max(1e-300);
        (w2 - self.k_squared()).abs() <= 1e-12 * scale
    }

    /// Sign of the out-of-plane momentum (+1 for kz ≥ 0).
    pub fn zeta(&self) -> i32 {
        if self.kz >= 0.0 {
            1
        } else {
            -1
        }
    }

    /// Full wavevector K.
    pub fn wavevector(&self) -> Vec3 {
        [self.k[0], self.k[1], self.kz]
    }
}

/// Orthonormal (ê_TE, ê_TM) pair for propagation direction K.
///
/// ê_TE = (K̂ × ẑ)/|K̂ × ẑ|, ê_TM = ê_TE × K̂. At normal incidence
/// (K̂ = ±ẑ) the azimuth is degenerate and the convention ê_TE = x̂ is used.
pub fn polarization_basis(k_dir: Vec3) -> Result<(Vec3, Vec3)> {
    let n = norm(k_dir);
    if !(n > 0.0) {
        return Err(DceError::Parameter("zero wavevector".into()));
    }
    let khat = normalize(k_dir);
    let c = cross(khat, ZHAT);
    let cn = norm(c);
    let e_te = if cn < 1e-14 {
        [1.0, 0.0, 0.0]
    } else {
        normalize(c)
    };
    let e_tm = cross(e_te, khat);
    Ok((e_te, e_tm))
}

fn linear_vector(mode: &PlaneWaveMode, pol: Pol) -> Result<Vec3> {
    let (e_te, e_tm) = polarization_basis(mode.wavevector())?;
    match pol {
        Pol::TE => Ok(e_te),
        Pol::TM => Ok(e_tm),
        _ => Err(DceError::Parameter(
            "linear polarization (TE/TM) required".into(),
        )),
    }
}

/// Two-photon coupling amplitude W̃ for linear polarizations:
///
/// W̃ = (k₁z K₂/K₁ + k₂z K₁/K₂)(ê₁·ê₂)
///     − (K̂₂·ê₁)(ẑ·ê₂) − (K̂₁·ê₂)(ẑ·ê₁).
///
/// Symmetric under full exchange of the photon labels.
pub fn w_tilde(m1: &PlaneWaveMode, m2: &PlaneWaveMode) -> Result<f64> {
    if !m1.on_shell() || !m2.on_shell() {
        return Err(DceError::Parameter("off-shell mode in w_tilde".into()));
    }
    if !m1.pol.is_linear() || !m2.pol.is_linear() {
        return Err(DceError::Parameter(
            "w_tilde is defined in the linear basis; use w_tilde_squared_circular".into(),
        ));
    }
    let e1 = linear_vector(m1, m1.pol)?;
    let e2 = linear_vector(m2, m2.pol)?;
    Ok(w_tilde_vectors(m1, e1, m2, e2))
}

fn w_tilde_vectors(m1: &PlaneWaveMode, e1: Vec3, m2: &PlaneWaveMode, e2: Vec3) -> f64 {
    let k1hat = normalize(m1.wavevector());
    let k2hat = normalize(m2.wavevector());
    let coef = m1.kz * m2.omega / m1.omega + m2.kz * m1.omega / m2.omega;
    coef * dot(e1, e2) - dot(k2hat, e1) * dot(e2, ZHAT) - dot(k1hat, e2) * dot(e1, ZHAT)
}

/// All four linear-basis amplitudes at once, indexed [λ₁][λ₂] with
/// 0 = TE, 1 = TM. Computes each photon's basis a single time; the hot
/// quadrature loops sum several polarization combinations per direction
/// pair.
pub fn w_tilde_matrix(m1: &PlaneWaveMode, m2: &PlaneWaveMode) -> Result<[[f64; 2]; 2]> {
    if !m1.on_shell() || !m2.on_shell() {
        return Err(DceError::Parameter("off-shell mode in w_tilde".into()));
    }
    let (e1te, e1tm) = polarization_basis(m1.wavevector())?;
    let (e2te, e2tm) = polarization_basis(m2.wavevector())?;
    let k1hat = normalize(m1.wavevector());
    let k2hat = normalize(m2.wavevector());
    let coef = m1.kz * m2.omega / m1.omega + m2.kz * m1.omega / m2.omega;
    let e1 = [e1te, e1tm];
    let e2 = [e2te, e2tm];
    let mut out = [[0.0; 2]; 2];
    for (i, &a) in e1.iter().enumerate() {
        for (j, &b) in e2.iter().enumerate() {
            out[i][j] =
                coef * dot(a, b) - dot(k2hat, a) * dot(b, ZHAT) - dot(k1hat, b) * dot(a, ZHAT);
        }
    }
    Ok(out)
}

/// |W̃|² for circular polarizations, obtained from the real linear-basis
/// amplitudes by the unitary transform ê_R = (ê_TE + i ê_TM)/√2,
/// ê_L = (ê_TE − i ê_TM)/√2 applied per photon. Polarization-summed results
/// are basis-independent.
pub fn w_tilde_squared_circular(
    m1: &PlaneWaveMode,
    m2: &PlaneWaveMode,
    pol1: Pol,
    pol2: Pol,
) -> Result<f64> {
    let coeffs = |p: Pol| -> Result<(Complex64, Complex64)> {
        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        match p {
            Pol::R => Ok((
                Complex64::new(inv_sqrt2, 0.0),
                Complex64::new(0.0, inv_sqrt2),
            )),
            Pol::L => Ok((
                Complex64::new(inv_sqrt2, 0.0),
                Complex64::new(0.0, -inv_sqrt2),
            )),
            Pol::TE => Ok((Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))),
            Pol::TM => Ok((Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0))),
        }
    };
    let (a_te, a_tm) = coeffs(pol1)?;
    let (b_te, b_tm) = coeffs(pol2)?;
    let wm = w_tilde_matrix(m1, m2)?;
    let mut amp = Complex64::new(0.0, 0.0);
    for (i, c1) in [a_te, a_tm].into_iter().enumerate() {
        for (j, c2) in [b_te, b_tm].into_iter().enumerate() {
            amp += c1 * c2 * wm[i][j];
        }
    }
    Ok(amp.norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_mode(rng: &mut ChaCha8Rng, pol: Pol) -> PlaneWaveMode {
        let omega: f64 = rng.gen_range(0.05..1.0);
        let ct: f64 = rng.gen_range(-1.0..1.0);
        let st = (1.0 - ct * ct).sqrt();
        let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        PlaneWaveMode::new(
            [omega * st * phi.cos(), omega * st * phi.sin()],
            omega * ct,
            omega,
            pol,
        )
        .unwrap()
    }

    #[test]
    fn normal_incidence_tie_break() {
        let (e_te, e_tm) = polarization_basis([0.0, 0.0, 1.0]).unwrap();
        assert_eq!(e_te, [1.0, 0.0, 0.0]);
        // e_TM = e_TE x zhat = -yhat
        assert_relative_eq!(e_tm[1], -1.0, max_relative = 1e-15);
    }

    #[test]
    fn yz_plane_direction_gives_te_along_x() {
        let (e_te, _) = polarization_basis([0.0, 0.3, 0.4]).unwrap();
        assert!(e_te[0].abs() > 1.0 - 1e-14);
        assert!(e_te[2].abs() < 1e-14);
    }

    #[test]
    fn basis_orthonormal_random_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let k = [
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0f64),
            ];
            if norm(k) < 1e-3 {
                continue;
            }
            let (e_te, e_tm) = polarization_basis(k).unwrap();
            let khat = normalize(k);
            assert!(dot(e_te, khat).abs() < 1e-14);
            assert!(dot(e_tm, khat).abs() < 1e-14);
            assert!(dot(e_te, e_tm).abs() < 1e-14);
            assert!((norm(e_te) - 1.0).abs() < 1e-14);
            assert!((norm(e_tm) - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn zero_direction_rejected() {
        assert!(polarization_basis([0.0, 0.0, 0.0]).is_err());
    }

    #[test]
    fn counter_propagating_te_pair_has_unit_coupling() {
        // Both photons along +z at omega = 1/2: first term (1/2 + 1/2)*1,
        // z-projection terms vanish for TE.
        let m1 = PlaneWaveMode::new([0.0, 0.0], 0.5, 0.5, Pol::TE).unwrap();
        let m2 = PlaneWaveMode::new([0.0, 0.0], 0.5, 0.5, Pol::TE).unwrap();
        assert_relative_eq!(w_tilde(&m1, &m2).unwrap(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn cross_polarized_vanishes_for_collinear_momenta() {
        // k2 parallel to k1 in-plane: W_TE,TM ~ [z.(k1 x k2)]^2 = 0
        let k1 = [0.2, 0.1];
        let w1 = 0.6;
        let k1z = (w1 * w1 - 0.05f64).sqrt();
        let m1 = PlaneWaveMode::new(k1, k1z, w1, Pol::TE).unwrap();
        let k2 = [-0.3, -0.15];
        let w2 = 0.4;
        let k2z = (w2 * w2 - (0.09 + 0.0225f64)).sqrt();
        let m2 = PlaneWaveMode::new(k2, k2z, w2, Pol::TM).unwrap();
        assert!(w_tilde(&m1, &m2).unwrap().abs() < 1e-14);
    }

    #[test]
    fn cross_polarized_nonzero_for_generic_momenta() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut nonzero = 0;
        for _ in 0..50 {
            let m1 = random_mode(&mut rng, Pol::TE);
            let m2 = random_mode(&mut rng, Pol::TM);
            let z_k1xk2 = m1.k[0] * m2.k[1] - m1.k[1] * m2.k[0];
            let w = w_tilde(&m1, &m2).unwrap();
            if z_k1xk2.abs() > 1e-6 {
                assert!(w.abs() > 0.0);
                nonzero += 1;
            }
        }
        assert!(nonzero > 40);
    }

    #[test]
    fn exchange_symmetry() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            for (p1, p2) in [
                (Pol::TE, Pol::TE),
                (Pol::TE, Pol::TM),
                (Pol::TM, Pol::TE),
                (Pol::TM, Pol::TM),
            ] {
                let m1 = random_mode(&mut rng, p1);
                let m2 = random_mode(&mut rng, p2);
                let a = w_tilde(&m1, &m2).unwrap();
                let b = w_tilde(&m2, &m1).unwrap();
                assert_relative_eq!(a, b, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn circular_basis_partner_sum_matches_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let m1 = random_mode(&mut rng, Pol::TE);
            let m2 = random_mode(&mut rng, Pol::TE);
            let mut lin = 0.0;
            for p1 in [Pol::TE, Pol::TM] {
                for p2 in [Pol::TE, Pol::TM] {
                    let mut a = m1;
                    a.pol = p1;
                    let mut b = m2;
                    b.pol = p2;
                    lin += w_tilde(&a, &b).unwrap().powi(2);
                }
            }
            // photon-1 restricted to R: partner-summed must be half the
            // full linear sum (and same for L)
            let mut circ_r = 0.0;
            let mut circ_l = 0.0;
            for p2 in [Pol::R, Pol::L] {
                circ_r += w_tilde_squared_circular(&m1, &m2, Pol::R, p2).unwrap();
                circ_l += w_tilde_squared_circular(&m1, &m2, Pol::L, p2).unwrap();
            }
            assert_relative_eq!(circ_r, 0.5 * lin, max_relative = 1e-10);
            assert_relative_eq!(circ_l, 0.5 * lin, max_relative = 1e-10);
        }
    }

    #[test]
    fn circular_normal_incidence_matches_hand_transform() {
        // Counter-propagating normal-incidence pair: the 2x2 linear-basis
        // amplitude matrix is diag(W_tete, W_tmtm); the R/R amplitude is
        // (W_tete - W_tmtm)/2.
        let m1 = PlaneWaveMode::new([0.0, 0.0], 0.5, 0.5, Pol::TE).unwrap();
        let m2 = PlaneWaveMode::new([0.0, 0.0], -0.5, 0.5, Pol::TE).unwrap();
        let mut a = m1;
        let mut b = m2;
        let w_tete = w_tilde(&a, &b).unwrap();
        a.pol = Pol::TM;
        b.pol = Pol::TM;
        let w_tmtm = w_tilde(&a, &b).unwrap();
        let rr = w_tilde_squared_circular(&m1, &m2, Pol::R, Pol::R).unwrap();
        let expect = 0.25 * (w_tete - w_tmtm).powi(2);
        assert_relative_eq!(rr, expect, max_relative = 1e-12);
    }

    #[test]
    fn off_shell_rejected() {
        let bad = PlaneWaveMode {
            k: [0.5, 0.0],
            kz: 0.5,
            omega: 0.5,
            pol: Pol::TE,
        };
        let good = PlaneWaveMode::new([0.0, 0.0], 0.5, 0.5, Pol::TE).unwrap();
        assert!(w_tilde(&bad, &good).is_err());
        assert!(PlaneWaveMode::new([0.5, 0.0], 0.5, 0.5, Pol::TE).is_err());
    }
}

//! Finite-radius Bessel-product integrals ℋ±, ℋ⁰, ℐ±, 𝒥±, 𝒦±.
//!
//! All nine integrals are of the form
//!   ±(−1)^{m−ℓ} ∫₀^𝓡 dy [y] J_a(κy) J_b(κ′y)
//! with orders (a, b) depending on (m, ℓ) and the weight y present for the
//! ℋ/ℐ family and absent for 𝒥/𝒦. Since the emission spectrum squares a sum
//! of these terms, only relative signs matter; the prefactors are kept
//! verbatim so individual values can be compared against the defining
//! expressions.
//!
//! Quadrature: fixed Gauss–Legendre panels no longer than a quarter period
//! of the combined oscillation (rate κ+κ′), refined by doubling the panel
//! count until successive values agree to the requested relative tolerance.

use crate::bessel::{bessel_j, bessel_j_prime};
use crate::error::{DceError, Result};
use crate::quadrature::Rule;

/// The nine integrals at one (m, ℓ, κ, κ′, 𝓡).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialIntegralSet {
    pub m: i64,
    pub ell: i64,
    pub kappa: f64,
    pub kappa_prime: f64,
    pub r_dimless: f64,
    pub h_minus: f64,
    pub h_plus: f64,
    pub h_zero: f64,
    pub i_minus: f64,
    pub i_plus: f64,
    pub j_minus: f64,
    pub j_plus: f64,
    pub k_minus: f64,
    pub k_plus: f64,
}

/// Overall prefactor −(−1)^{m−ℓ} shared by the ℋ±/ℐ/𝒥 integrals
/// (ℋ⁰ and 𝒦± carry an extra minus sign).
fn family_sign(m: i64, ell: i64) -> f64 {
    if (m - ell).rem_euclid(2) == 0 {
        -1.0
    } else {
        1.0
    }
}

/// Panel count: width at most `max_width` and at most a quarter period of
/// the product oscillation.
fn panel_count(kappa: f64, kappa_prime: f64, r: f64, max_width: f64) -> usize {
    let rate = kappa + kappa_prime;
    let mut width = max_width;
    if rate > 0.0 {
        width = width.min(std::f64::consts::FRAC_PI_2 / rate);
    }
    ((r / width).ceil() as usize).max(4)
}

fn eval_set(
    m: i64,
    ell: i64,
    kappa: f64,
    kappa_prime: f64,
    r: f64,
    rule: &Rule,
    panels: usize,
) -> RadialIntegralSet {
    let (ys, ws) = rule.panel_nodes(0.0, r, panels);
    let sgn = family_sign(m, ell);
    // accumulate all nine in one pass over the nodes; each needs J at three
    // consecutive orders of both arguments
    let mut acc = [0.0f64; 9];
    for (&y, &w) in ys.iter().zip(&ws) {
        let a = [
            bessel_j(m - 1, kappa * y),
            bessel_j(m, kappa * y),
            bessel_j(m + 1, kappa * y),
        ];
        let b = [
            bessel_j(m - 1 - ell, kappa_prime * y),
            bessel_j(m - ell, kappa_prime * y),
            bessel_j(m + 1 - ell, kappa_prime * y),
        ];
        let wy = w * y;
        acc[0] += wy * a[0] * b[0]; // H-
        acc[1] += wy * a[2] * b[2]; // H+
        acc[2] += wy * a[1] * b[1]; // H0
        acc[3] += wy * a[0] * b[2]; // I-
        acc[4] += wy * a[2] * b[0]; // I+
        acc[5] += w * a[1] * b[2]; // J-
        acc[6] += w * a[1] * b[0]; // J+
        acc[7] += w * a[0] * b[1]; // K-
        acc[8] += w * a[2] * b[1]; // K+
    }
    RadialIntegralSet {
        m,
        ell,
        kappa,
        kappa_prime,
        r_dimless: r,
        h_minus: sgn * acc[0],
        h_plus: sgn * acc[1],
        h_zero: -sgn * acc[2],
        i_minus: sgn * acc[3],
        i_plus: sgn * acc[4],
        j_minus: sgn * acc[5],
        j_plus: sgn * acc[6],
        k_minus: -sgn * acc[7],
        k_plus: -sgn * acc[8],
    }
}

impl RadialIntegralSet {
    fn values(&self) -> [f64; 9] {
        [
            self.h_minus,
            self.h_plus,
            self.h_zero,
            self.i_minus,
            self.i_plus,
            self.j_minus,
            self.j_plus,
            self.k_minus,
            self.k_plus,
        ]
    }
}

/// All nine integrals, refined to `rel_tol` by panel doubling.
pub fn radial_integrals(
    m: i64,
    ell: i64,
    kappa: f64,
    kappa_prime: f64,
    r_dimless: f64,
    rel_tol: f64,
) -> Result<RadialIntegralSet> {
    if kappa < 0.0 || kappa_prime < 0.0 {
        return Err(DceError::Parameter(format!(
            "transverse momenta must be non-negative, got ({kappa}, {kappa_prime})"
        )));
    }
    if r_dimless <= 0.0 {
        return Err(DceError::Parameter(format!(
            "disk radius must be positive, got {r_dimless}"
        )));
    }
    let rule = Rule::new(8);
    let mut panels = panel_count(kappa, kappa_prime, r_dimless, 0.5);
    let mut prev = eval_set(m, ell, kappa, kappa_prime, r_dimless, &rule, panels);
    for _ in 0..8 {
        panels *= 2;
        let cur = eval_set(m, ell, kappa, kappa_prime, r_dimless, &rule, panels);
        let scale = cur
            .values()
            .iter()
            .fold(0.0f64, |a, v| a.max(v.abs()))
            .max(1e-300);
        let err = cur
            .values()
            .iter()
            .zip(prev.values())
            .fold(0.0f64, |a, (c, p)| a.max((c - p).abs()));
        if err <= rel_tol * scale {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(DceError::Numerical {
        context: format!(
            "radial integrals (m={m}, l={ell}, kappa={kappa}, kappa'={kappa_prime}, \
             R={r_dimless}) not converged at {panels} panels"
        ),
        achieved: f64::NAN,
        requested: rel_tol,
    })
}

/// Lommel closed form ∫₀^R y J_n(κy) J_n(κ′y) dy for κ ≠ κ′ (off-diagonal)
/// or the l'Hôpital diagonal limit when |κ−κ′| < 1e-8·max(κ,κ′).
pub fn lommel_equal_order(n: i64, kappa: f64, kappa_prime: f64, r: f64) -> f64 {
    let scale = kappa.abs().max(kappa_prime.abs());
    if scale == 0.0 {
        // both orders-zero constants: integral of y (n=0) or 0 (n != 0)
        return if n == 0 { 0.5 * r * r } else { 0.0 };
    }
    if (kappa - kappa_prime).abs() < 1e-8 * scale {
        let k = 0.5 * (kappa + kappa_prime);
        let j = bessel_j(n, k * r);
        let jp = bessel_j_prime(n, k * r);
        let nf = n as f64;
        return 0.5 * r * r * (jp * jp + (1.0 - nf * nf / (k * r) / (k * r)) * j * j);
    }
    r * (kappa_prime * bessel_j(n, kappa * r) * bessel_j_prime(n, kappa_prime * r)
        - kappa * bessel_j_prime(n, kappa * r) * bessel_j(n, kappa_prime * r))
        / (kappa * kappa - kappa_prime * kappa_prime)
}

/// The nine integrals tabulated over momentum grids κ ∈ `kappas`,
/// κ′ ∈ `kappa_primes` (row-major, index [i·n2 + j]). Shares the Bessel
/// evaluations across the grids, which dominates the cost of the spinning
/// spectrum.
pub struct RadialTables {
    pub n1: usize,
    pub n2: usize,
    pub h_minus: Vec<f64>,
    pub h_plus: Vec<f64>,
    pub h_zero: Vec<f64>,
    pub i_minus: Vec<f64>,
    pub i_plus: Vec<f64>,
    pub j_minus: Vec<f64>,
    pub j_plus: Vec<f64>,
    pub k_minus: Vec<f64>,
    pub k_plus: Vec<f64>,
}

pub fn radial_tables(
    m: i64,
    ell: i64,
    kappas: &[f64],
    kappa_primes: &[f64],
    r: f64,
    rule: &Rule,
    panels: usize,
) -> RadialTables {
    let (ys, ws) = rule.panel_nodes(0.0, r, panels);
    let ny = ys.len();
    let (n1, n2) = (kappas.len(), kappa_primes.len());
    let sgn = family_sign(m, ell);
    // J tables: rows are grid momenta, columns the quadrature nodes
    let order_a = [m - 1, m, m + 1];
    let order_b = [m - 1 - ell, m - ell, m + 1 - ell];
    let mut ja = vec![vec![0.0f64; ny]; 3 * n1];
    let mut jb = vec![vec![0.0f64; ny]; 3 * n2];
    for (i, &k) in kappas.iter().enumerate() {
        for (o, &ord) in order_a.iter().enumerate() {
            let row = &mut ja[3 * i + o];
            for (jy, &y) in ys.iter().enumerate() {
                row[jy] = bessel_j(ord, k * y);
            }
        }
    }
    for (i, &k) in kappa_primes.iter().enumerate() {
        for (o, &ord) in order_b.iter().enumerate() {
            let row = &mut jb[3 * i + o];
            for (jy, &y) in ys.iter().enumerate() {
                row[jy] = bessel_j(ord, k * y);
            }
        }
    }
    let wy: Vec<f64> = ws.iter().zip(&ys).map(|(w, y)| w * y).collect();
    let contract = |oa: usize, ob: usize, weighted: bool, sign: f64| -> Vec<f64> {
        let wt = if weighted { &wy } else { &ws };
        let mut out = vec![0.0f64; n1 * n2];
        for i in 0..n1 {
            let ra = &ja[3 * i + oa];
            for j in 0..n2 {
                let rb = &jb[3 * j + ob];
                let mut s = 0.0;
                for y in 0..ny {
                    s += wt[y] * ra[y] * rb[y];
                }
                out[i * n2 + j] = sign * s;
            }
        }
        out
    };
    RadialTables {
        n1,
        n2,
        h_minus: contract(0, 0, true, sgn),
        h_plus: contract(2, 2, true, sgn),
        h_zero: contract(1, 1, true, -sgn),
        i_minus: contract(0, 2, true, sgn),
        i_plus: contract(2, 0, true, sgn),
        j_minus: contract(1, 2, false, sgn),
        j_plus: contract(1, 0, false, sgn),
        k_minus: contract(0, 1, false, -sgn),
        k_plus: contract(2, 1, false, -sgn),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn vanishing_domain() {
        let s = radial_integrals(2, 1, 0.4, 0.7, 1e-8, 1e-9).unwrap();
        for v in s.values() {
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn lommel_closed_form_matches_quadrature_at_l0() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let m: i64 = rng.gen_range(-10..=10);
            let kap = rng.gen_range(0.05..10.0);
            let kapp = rng.gen_range(0.05..10.0);
            let r = rng.gen_range(0.5..20.0);
            let s = radial_integrals(m, 0, kap, kapp, r, 1e-10).unwrap();
            let sgn = family_sign(m, 0);
            let hm = sgn * lommel_equal_order(m - 1, kap, kapp, r);
            let hp = sgn * lommel_equal_order(m + 1, kap, kapp, r);
            let h0 = -sgn * lommel_equal_order(m, kap, kapp, r);
            let scale = hm.abs().max(hp.abs()).max(h0.abs()).max(1e-12);
            assert!((s.h_minus - hm).abs() < 1e-8 * scale, "Hm at m={m}");
            assert!((s.h_plus - hp).abs() < 1e-8 * scale, "Hp at m={m}");
            assert!((s.h_zero - h0).abs() < 1e-8 * scale, "H0 at m={m}");
        }
    }

    #[test]
    fn lommel_diagonal_limit_is_continuous() {
        for n in [0i64, 1, 4] {
            let near = lommel_equal_order(n, 0.8, 0.8 * (1.0 + 3e-8), 10.0);
            let diag = lommel_equal_order(n, 0.8, 0.8, 10.0);
            assert_relative_eq!(near, diag, max_relative = 1e-6);
            // and the diagonal agrees with direct quadrature
            let s = radial_integrals(n, 0, 0.8, 0.8, 10.0, 1e-10).unwrap();
            assert_relative_eq!(s.h_zero, -family_sign(n, 0) * diag, max_relative = 1e-8);
        }
    }

    #[test]
    fn grid_tables_match_scalar_sets() {
        let kappas = [0.15, 0.4];
        let kapps = [0.3, 0.55, 0.72];
        let (m, ell, r) = (2i64, 1i64, 7.5);
        let rule = Rule::new(8);
        let panels = panel_count(1.0, 1.0, r, 0.5);
        let t = radial_tables(m, ell, &kappas, &kapps, r, &rule, panels);
        for (i, &kap) in kappas.iter().enumerate() {
            for (j, &kapp) in kapps.iter().enumerate() {
                let s = radial_integrals(m, ell, kap, kapp, r, 1e-10).unwrap();
                let idx = i * t.n2 + j;
                assert_relative_eq!(t.h_minus[idx], s.h_minus, max_relative = 1e-7);
                assert_relative_eq!(t.h_zero[idx], s.h_zero, max_relative = 1e-7);
                assert_relative_eq!(t.j_plus[idx], s.j_plus, max_relative = 1e-7);
                assert_relative_eq!(t.k_minus[idx], s.k_minus, max_relative = 1e-7);
            }
        }
    }

    #[test]
    fn rejects_bad_domains() {
        assert!(radial_integrals(0, 0, -0.1, 0.5, 5.0, 1e-9).is_err());
        assert!(radial_integrals(0, 0, 0.1, 0.5, 0.0, 1e-9).is_err());
    }

    #[test]
    fn weber_schafheitlin_concentration() {
        // as R grows, the equal-order y-weighted integral concentrates near
        // kappa = kappa': diagonal grows linearly with R, off-diagonal stays bounded
        let d50 = lommel_equal_order(1, 0.6, 0.6, 50.0);
        let d200 = lommel_equal_order(1, 0.6, 0.6, 200.0);
        assert!(d200 > 3.0 * d50);
        let o50 = lommel_equal_order(1, 0.6, 0.9, 50.0).abs();
        let o200 = lommel_equal_order(1, 0.6, 0.9, 200.0).abs();
        assert!(o200 < 10.0 * o50.max(1.0));
    }
}

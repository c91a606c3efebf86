//! The figure-reproduction and estimate commands, each producing a
//! deterministic `ResultTable`.

use crate::config::RunConfig;
use crate::table::{Cell, ResultTable};
use dce_core::error::Result;
use dce_core::estimates::{builtin_scenarios, Scenario};
use dce_core::linear::{
    density_f, lobes_finite_array, partner, spectral_rate, total_rate, RateChannel,
};
use dce_core::params::ArrayGeometry;
use dce_core::polarization::Pol;
use dce_core::spinning::{f_ell_m, total_rate_spinning, SpinningOpts};
use rayon::prelude::*;
use serde::Deserialize;

const VERSION: &str = env!("CARGO_PKG_VERSION");

fn pol_name(p: Pol) -> &'static str {
    match p {
        Pol::TE => "TE",
        Pol::TM => "TM",
        Pol::R => "R",
        Pol::L => "L",
    }
}

fn base_meta(table: &mut ResultTable, command: &str, tol: f64) {
    table.meta("command", command);
    table.meta("version", VERSION);
    table.meta("tolerance", format!("{tol:e}"));
}

/// Emission lobes in the yz-plane for a finite lattice, partner along z,
/// ω₁ = ω₂ = Ω/2, over signed kicks along the lobe plane.
pub fn cmd_fig2(cfg: &RunConfig) -> Result<ResultTable> {
    let nx = cfg.nx.unwrap_or(50);
    let ny = cfg.ny.unwrap_or(50);
    let nz = cfg.nz.unwrap_or(1);
    let extent = cfg.extent.unwrap_or(20.0);
    let ntheta = cfg.theta_points.unwrap_or(181);
    let kicks: Vec<f64> = cfg.kicks.clone().unwrap_or_else(|| {
        (-4..=4).map(|i| i as f64 * 0.1).collect()
    });
    let geometry = ArrayGeometry::CubicLattice {
        nx,
        ny,
        nz,
        d: extent / nx as f64,
    };
    let thetas: Vec<f64> = (0..ntheta)
        .map(|i| -std::f64::consts::FRAC_PI_2
            + std::f64::consts::PI * i as f64 / (ntheta - 1) as f64)
        .collect();
    let jobs: Vec<(Pol, f64)> = [Pol::TE, Pol::TM]
        .iter()
        .flat_map(|&p| kicks.iter().map(move |&b| (p, b)))
        .collect();
    let curves: Vec<Vec<f64>> = jobs
        .par_iter()
        .map(|&(p, b)| lobes_finite_array(b, p, &geometry, &thetas))
        .collect::<Result<_>>()?;
    let mut t = ResultTable::new(&[
        "polarization",
        "kick [Omega/c]",
        "theta [rad]",
        "rate [r0]",
    ]);
    base_meta(&mut t, "fig2", 0.0);
    t.meta("nx", nx);
    t.meta("ny", ny);
    t.meta("nz", nz);
    t.meta("extent [c/Omega]", extent);
    for (j, &(p, b)) in jobs.iter().enumerate() {
        for (i, &theta) in thetas.iter().enumerate() {
            t.push(vec![
                Cell::Text(pol_name(p).into()),
                Cell::Float(b),
                Cell::Float(theta),
                Cell::Float(curves[j][i]),
            ]);
        }
    }
    Ok(t)
}

/// Angular emission-density maps for both photons of the pair over a kick
/// sweep, with forbidden regions emitted as explicit zeros.
pub fn cmd_fig3(cfg: &RunConfig) -> Result<ResultTable> {
    let u_high = cfg.omega_ratio.unwrap_or(0.7);
    let ntheta = cfg.theta_points.unwrap_or(45);
    let nphi = cfg.phi_points.unwrap_or(72);
    let kicks: Vec<f64> = cfg
        .kicks
        .clone()
        .unwrap_or_else(|| (0..=9).map(|i| i as f64 * 0.1).collect());
    let thetas: Vec<f64> = (0..ntheta)
        .map(|i| (i as f64 + 0.5) / ntheta as f64 * std::f64::consts::FRAC_PI_2)
        .collect();
    let phis: Vec<f64> = (0..nphi)
        .map(|i| i as f64 / nphi as f64 * std::f64::consts::TAU)
        .collect();
    let roles = [("high", u_high), ("low", 1.0 - u_high)];
    let jobs: Vec<(usize, usize)> = (0..kicks.len())
        .flat_map(|k| (0..roles.len()).map(move |r| (k, r)))
        .collect();
    let blocks: Vec<Vec<(f64, bool)>> = jobs
        .par_iter()
        .map(|&(k, r)| {
            let (_, u) = roles[r];
            let b = kicks[k];
            let mut block = Vec::with_capacity(ntheta * nphi);
            for &theta in &thetas {
                for &phi in &phis {
                    let s = theta.sin();
                    let k1 = [u * s * phi.cos(), u * s * phi.sin()];
                    let allowed = !partner(k1, u, [b, 0.0])?.evanescent;
                    let mut f = 0.0;
                    for lam in [Pol::TE, Pol::TM] {
                        f += density_f(theta, phi, u, b, lam, 1, None)?;
                    }
                    block.push((f, allowed));
                }
            }
            Ok(block)
        })
        .collect::<Result<_>>()?;
    let mut t = ResultTable::new(&[
        "photon",
        "kick [Omega/c]",
        "theta [rad]",
        "phi [rad]",
        "density [Gamma0/(A Omega)]",
        "allowed",
    ]);
    base_meta(&mut t, "fig3", 0.0);
    t.meta("omega-ratio", u_high);
    for (j, &(k, r)) in jobs.iter().enumerate() {
        let (role, _) = roles[r];
        let mut cell = blocks[j].iter();
        for &theta in &thetas {
            for &phi in &phis {
                let &(f, allowed) = cell.next().expect("block sized to grid");
                t.push(vec![
                    Cell::Text(role.into()),
                    Cell::Float(kicks[k]),
                    Cell::Float(theta),
                    Cell::Float(phi),
                    Cell::Float(f),
                    Cell::Bool(allowed),
                ]);
            }
        }
    }
    Ok(t)
}

/// Spectral rates dΓ_λ/dω over a frequency grid for kick cuts, TE and TM.
pub fn cmd_fig4(cfg: &RunConfig) -> Result<ResultTable> {
    let tol = cfg.tolerance_or(1e-8);
    let nomega = cfg.omega_points.unwrap_or(49);
    let kicks: Vec<f64> = cfg
        .kicks
        .clone()
        .unwrap_or_else(|| vec![0.0, 0.2, 0.4, 0.6, 0.8, 0.95]);
    let us: Vec<f64> = (0..nomega)
        .map(|i| (i as f64 + 1.0) / (nomega as f64 + 1.0))
        .collect();
    let mut jobs: Vec<(Pol, f64, f64)> = Vec::with_capacity(2 * kicks.len() * us.len());
    for p in [Pol::TE, Pol::TM] {
        for &b in &kicks {
            for &u in &us {
                jobs.push((p, b, u));
            }
        }
    }
    let vals: Vec<f64> = jobs
        .par_iter()
        .map(|&(p, b, u)| spectral_rate(u, b, p, tol))
        .collect::<Result<_>>()?;
    let mut t = ResultTable::new(&[
        "polarization",
        "kick [Omega/c]",
        "omega-ratio",
        "rate [Gamma0/Omega]",
    ]);
    base_meta(&mut t, "fig4", tol);
    for (j, &(p, b, u)) in jobs.iter().enumerate() {
        t.push(vec![
            Cell::Text(pol_name(p).into()),
            Cell::Float(b),
            Cell::Float(u),
            Cell::Float(vals[j]),
        ]);
    }
    Ok(t)
}

/// Total pair rates Γ_TE, Γ_TM, Γ_R/L, Γ_total versus kick.
pub fn cmd_fig5(cfg: &RunConfig) -> Result<ResultTable> {
    let tol = cfg.tolerance_or(1e-7);
    let kicks: Vec<f64> = cfg
        .kicks
        .clone()
        .unwrap_or_else(|| (0..=20).map(|i| i as f64 * 0.05).collect());
    let rows: Vec<[f64; 4]> = kicks
        .par_iter()
        .map(|&b| {
            let te = total_rate(b, RateChannel::Single(Pol::TE), tol)?;
            let tm = total_rate(b, RateChannel::Single(Pol::TM), tol)?;
            let rl = total_rate(b, RateChannel::Single(Pol::R), tol)?;
            Ok([te, tm, rl, te + tm])
        })
        .collect::<Result<_>>()?;
    let mut t = ResultTable::new(&[
        "kick [Omega/c]",
        "gamma-te [Gamma0]",
        "gamma-tm [Gamma0]",
        "gamma-rl [Gamma0]",
        "gamma-total [Gamma0]",
    ]);
    base_meta(&mut t, "fig5", tol);
    for (j, &b) in kicks.iter().enumerate() {
        let [te, tm, rl, tot] = rows[j];
        t.push(vec![
            Cell::Float(b),
            Cell::Float(te),
            Cell::Float(tm),
            Cell::Float(rl),
            Cell::Float(tot),
        ]);
    }
    Ok(t)
}

/// Angular-momentum spectrum f_ℓ(u, m) plus the total rate Γ_ℓ for a
/// modulated disk.
pub fn cmd_spinning(cfg: &RunConfig) -> Result<ResultTable> {
    let ell = cfg.ell.unwrap_or(0);
    let r = cfg.radius.unwrap_or(5.0);
    let nu = cfg.u_points.unwrap_or(9);
    let m_max = cfg
        .m_max
        .unwrap_or_else(|| ell.abs() + 10 + (0.8 * r).ceil() as i64);
    let opts = SpinningOpts::default();
    let us: Vec<f64> = (0..nu).map(|i| (i as f64 + 1.0) / (nu as f64 + 1.0)).collect();
    let ms: Vec<i64> = (ell - m_max..=ell + m_max).collect();
    let jobs: Vec<(f64, i64)> = us
        .iter()
        .flat_map(|&u| ms.iter().map(move |&m| (u, m)))
        .collect();
    let vals: Vec<f64> = jobs
        .par_iter()
        .map(|&(u, m)| f_ell_m(u, m, ell, r, opts))
        .collect::<Result<_>>()?;
    let rate = total_rate_spinning(ell, r, 24, opts)?;
    let mut t = ResultTable::new(&["u", "m", "m-partner", "f [1]"]);
    base_meta(&mut t, "spinning", 0.0);
    t.meta("ell", ell);
    t.meta("radius [c/Omega]", r);
    t.meta("m-max", m_max);
    t.meta("gamma-over-gamma0", crate::table::format_float(rate.gamma_over_gamma0));
    t.meta("m-tail-converged", rate.converged);
    for (j, &(u, m)) in jobs.iter().enumerate() {
        t.push(vec![
            Cell::Float(u),
            Cell::Int(m),
            Cell::Int(ell - m),
            Cell::Float(vals[j]),
        ]);
    }
    Ok(t)
}

/// A named scenario from the config file.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case", tag = "kind")]
pub enum ScenarioSpec {
    PerfectMirror { area: f64, omega: f64, delta: f64 },
    MetaMirror { area: f64, ns: f64, alpha0: f64, omega: f64, delta: f64 },
    Waveguide1d { omega: f64, v_eff_over_c: f64 },
}

impl From<ScenarioSpec> for Scenario {
    fn from(s: ScenarioSpec) -> Scenario {
        match s {
            ScenarioSpec::PerfectMirror { area, omega, delta } => {
                Scenario::PerfectMirror { area, omega, delta }
            }
            ScenarioSpec::MetaMirror {
                area,
                ns,
                alpha0,
                omega,
                delta,
            } => Scenario::MetaMirror {
                area,
                ns,
                alpha0,
                omega,
                delta,
            },
            ScenarioSpec::Waveguide1d {
                omega,
                v_eff_over_c,
            } => Scenario::Waveguide1D {
                omega,
                v_eff_over_c,
            },
        }
    }
}

/// SI-unit rate estimates: the built-in scenario table (or one of them by
/// name) plus any user scenarios supplied by the caller.
pub fn cmd_estimate(
    cfg: &RunConfig,
    custom: &[(String, Scenario)],
) -> Result<ResultTable> {
    let which = cfg.scenario.as_deref().unwrap_or("all");
    let mut scenarios = builtin_scenarios();
    scenarios.extend(custom.iter().cloned());
    if which != "all" {
        scenarios.retain(|(name, _)| name == which);
        if scenarios.is_empty() {
            return Err(dce_core::DceError::Parameter(format!(
                "unknown scenario '{which}'"
            )));
        }
    }
    let mut t = ResultTable::new(&["scenario", "rate [1/s]", "log10-rate"]);
    base_meta(&mut t, "estimate", 0.0);
    for (name, sc) in &scenarios {
        let row = sc.evaluate(name)?;
        // The published Rb order of magnitude is reported as a flag, not an
        // assertion: the formula with the quoted parameters decides.
        if name == "rb-metamirror" && !(-78.0..=-76.0).contains(&row.log10_rate) {
            t.meta(
                "rb-exponent-flag",
                format!("computed {:.2}, outside quoted range [-78, -76]", row.log10_rate),
            );
        }
        t.push(vec![
            Cell::Text(row.name),
            Cell::Float(row.rate),
            Cell::Float(row.log10_rate),
        ]);
    }
    Ok(t)
}


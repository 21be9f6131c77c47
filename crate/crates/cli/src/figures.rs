//! Data behind the standard figures.

use std::f64::consts::PI;

use casimir_core::constants::C;
use casimir_core::forces::ThermalScene;
use casimir_core::materials::preset;
use casimir_core::polarizability::{overlap_factor, Orientation, SpheroidSpec};
use casimir_core::thermo::{friction_curve, FrictionModel};
use rayon::prelude::*;

use crate::commands::{lateral_point, linspace};
use crate::config::RunConfig;
use crate::csv::{Cell, Table};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Figure {
    Fig3,
    Fig4,
    Fig5,
    Fig7,
}

pub fn emit(figure: Figure, cfg: &RunConfig, points: Option<usize>) -> Result<Table, CliError> {
    match figure {
        Figure::Fig3 => fig3(cfg, points.unwrap_or(cfg.overlap.points)),
        Figure::Fig4 => lateral_curve(cfg, "plate1", points.unwrap_or(100)),
        Figure::Fig5 => lateral_curve(cfg, "plate2", points.unwrap_or(100)),
        Figure::Fig7 => Ok(fig7(points.unwrap_or(200))),
    }
}

/// Overlap Im[α∥α⊥*] for three aspect ratios at the configured particle's
/// volume, normalised to the largest value shown.
fn fig3(cfg: &RunConfig, points: usize) -> Result<Table, CliError> {
    let base = cfg.spheroid()?;
    let ratios = [0.2, 0.5, 0.8];
    let vol = base.r_par * base.r_perp * base.r_perp;
    let grid = linspace(cfg.overlap.from, cfg.overlap.to, points);
    let mut curves = Vec::new();
    for q in ratios {
        let r_par = (vol / (q * q)).cbrt();
        let spec = SpheroidSpec::new(r_par, q * r_par, base.material.clone())?;
        let ys: Vec<f64> = grid
            .iter()
            .map(|&k| overlap_factor(&spec, k * 1e6 * C))
            .collect::<Result<_, _>>()?;
        curves.push(ys);
    }
    let max = curves.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    if max == 0.0 {
        return Err(CliError::Config("overlap vanishes on the whole frequency window".into()));
    }
    let mut t = Table::new(&["omega_over_c_rad_per_um", "ratio_0.2", "ratio_0.5", "ratio_0.8"]);
    for (i, &k) in grid.iter().enumerate() {
        let mut row: Vec<Cell> = vec![k.into()];
        row.extend(curves.iter().map(|c| Cell::Num(c[i] / max)));
        t.push(row);
    }
    t.notes.push(format!("normalised by {max:e} m^6; fixed volume of the configured particle"));
    Ok(t)
}

/// |F|/F_G against R⊥/R∥ for the spheroid preset, R∥ = 40 nm, d = 400 nm,
/// T = 550 K, T_p = 300 K, θ = π/4, φ = 0.
fn lateral_curve(cfg: &RunConfig, plate: &str, points: usize) -> Result<Table, CliError> {
    let scene = ThermalScene::new(550.0, 300.0, 400e-9, preset(plate)?)?;
    let o = Orientation::new(PI / 4.0, 0.0)?;
    let material = preset("spheroid")?;
    let ratios: Vec<f64> = (1..=points).map(|i| i as f64 / points as f64).collect();
    let rows: Vec<(f64, f64, f64)> = ratios
        .par_iter()
        .map(|&q| {
            let spec = SpheroidSpec::new(40e-9, 40e-9 * q, material.clone())?;
            let p = lateral_point(&spec, o, &scene, &cfg.quadrature, cfg.density)?;
            Ok((q, p.gravity, p.force.value))
        })
        .collect::<Result<_, CliError>>()?;
    let mut t = Table::new(&["r_perp_over_r_par", "force_over_gravity", "force_N"]);
    for (q, g, f) in rows {
        t.push(vec![q.into(), g.into(), f.into()]);
    }
    t.notes.push(format!("plate preset {plate}, spheroid preset, R_par 40 nm, d 400 nm, T 550 K, T_p 300 K"));
    Ok(t)
}

/// Schematic γ(t)/γ_std with Δγ = γ_std/2 and τ₂ = 100 τ₁.
fn fig7(points: usize) -> Table {
    let model = FrictionModel { heat_capacity: 100.0, conductance: 1e14, tau1: 1e-14 };
    let grid: Vec<f64> = (0..points)
        .map(|i| model.tau1 * 0.1 * 10f64.powf(5.0 * i as f64 / (points.max(2) - 1) as f64))
        .collect();
    let curve = friction_curve(1.0, 0.5, &model, &grid).expect("valid schematic model");
    let mut t = Table::new(&["t_over_tau1", "gamma_over_gamma_std"]);
    for (time, g) in curve {
        t.push(vec![(time / model.tau1).into(), g.into()]);
    }
    t.notes.push("schematic: delta_gamma = gamma_std/2, tau2 = 100 tau1".into());
    t
}

use casimir_core::constants::C;
use casimir_core::forces::{
    gravity_ratio, isolated_force_z, janus_dilute_force, lateral_force_total, two_temperature_force, ForceResult,
    LateralRoute, ThermalScene,
};
use casimir_core::materials::{fresnel_reflection, near_field_response, Polarization};
use casimir_core::polarizability::{overlap_factor, Orientation, SpheroidSpec};
use casimir_core::scattering::{mie_coefficient, BornJanus, JanusGeometry};
use casimir_core::thermo::{additional_friction, friction_curve, heating_derivative, FrictionModel, QuadratureSpec};
use casimir_core::waves::Truncation;
use rayon::prelude::*;

use crate::config::RunConfig;
use crate::csv::{Cell, Table};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SweepParam {
    RPerp,
    RPar,
    D,
    Theta,
    Phi,
    TParticle,
    TPlate,
}

impl SweepParam {
    fn apply(self, cfg: &mut RunConfig, v: f64) {
        match self {
            SweepParam::RPerp => cfg.particle.r_perp = v,
            SweepParam::RPar => cfg.particle.r_par = v,
            SweepParam::D => cfg.scene.d = v,
            SweepParam::Theta => cfg.orientation.theta = v,
            SweepParam::Phi => cfg.orientation.phi = v,
            SweepParam::TParticle => cfg.scene.t_particle = v,
            SweepParam::TPlate => cfg.scene.t_plate = v,
        }
    }
}

/// Evenly spaced points including both ends.
pub fn linspace(from: f64, to: f64, points: usize) -> Vec<f64> {
    match points {
        0 => Vec::new(),
        1 => vec![from],
        n => (0..n).map(|i| from + (to - from) * i as f64 / (n - 1) as f64).collect(),
    }
}

const LATERAL_COLUMNS: [&str; 13] = [
    "r_par_m",
    "r_perp_m",
    "theta_rad",
    "phi_rad",
    "d_m",
    "t_particle_K",
    "t_plate_K",
    "force_N",
    "quadrature_error_N",
    "force_over_gravity",
    "r_over_d",
    "d_over_lambda_T",
    "near_field_ok",
];

pub struct LateralPoint {
    pub force: ForceResult,
    pub gravity: f64,
}

pub fn lateral_point(
    spec: &SpheroidSpec,
    o: Orientation,
    scene: &ThermalScene,
    quad: &QuadratureSpec,
    density: f64,
) -> Result<LateralPoint, CliError> {
    let force = lateral_force_total(LateralRoute::Spheroid(spec, o), scene, quad)?;
    let gravity = gravity_ratio(force.value, spec, density)?;
    Ok(LateralPoint { force, gravity })
}

fn lateral_row(cfg: &RunConfig) -> Result<(Vec<Cell>, bool), CliError> {
    let spec = cfg.spheroid()?;
    let o = cfg.orientation()?;
    let scene = cfg.scene()?;
    let p = lateral_point(&spec, o, &scene, &cfg.quadrature, cfg.density)?;
    let v = p.force.validity;
    let ok = v.near_field_ok();
    let row = vec![
        spec.r_par.into(),
        spec.r_perp.into(),
        o.theta.into(),
        o.phi.into(),
        scene.d.into(),
        scene.t_particle.into(),
        scene.t_plate.into(),
        p.force.value.into(),
        p.force.quadrature_error.into(),
        p.gravity.into(),
        v.r_over_d.unwrap_or(f64::NAN).into(),
        v.d_over_lambda_t.unwrap_or(f64::NAN).into(),
        Cell::Int(ok as i64),
    ];
    Ok((row, ok))
}

fn validity_note(table: &mut Table, all_ok: bool) {
    if !all_ok {
        let msg = "warning: near-field validity ratio above 0.2 in at least one row";
        eprintln!("{msg}");
        table.notes.push(msg.to_string());
    }
}

pub fn spheroid_lateral(cfg: &RunConfig) -> Result<Table, CliError> {
    let mut t = Table::new(&LATERAL_COLUMNS);
    let (row, ok) = lateral_row(cfg)?;
    t.push(row);
    validity_note(&mut t, ok);
    Ok(t)
}

pub fn sweep(cfg: &RunConfig, param: SweepParam, from: f64, to: f64, points: usize) -> Result<Table, CliError> {
    if points == 0 {
        return Err(CliError::Config("sweep needs at least one point".into()));
    }
    let values = linspace(from, to, points);
    let cfgs: Vec<RunConfig> = values
        .iter()
        .map(|&v| {
            let mut c = cfg.clone();
            param.apply(&mut c, v);
            c
        })
        .collect();
    for c in &cfgs {
        c.validate()?;
    }
    let rows: Vec<(Vec<Cell>, bool)> = cfgs.par_iter().map(lateral_row).collect::<Result<_, _>>()?;
    let mut t = Table::new(&LATERAL_COLUMNS);
    let mut all_ok = true;
    for (row, ok) in rows {
        all_ok &= ok;
        t.push(row);
    }
    validity_note(&mut t, all_ok);
    Ok(t)
}

pub fn janus_force(cfg: &RunConfig) -> Result<Table, CliError> {
    let j = &cfg.janus;
    let lower = j.lower.resolve()?;
    let upper = j.upper.resolve()?;
    let quad = &cfg.quadrature;
    let dilute = two_temperature_force(
        |t| janus_dilute_force(&lower, &upper, j.radius, t, quad),
        j.temperature,
        j.t_env,
    )?;
    let born = BornJanus::new(
        JanusGeometry { radius: j.radius, lower, upper },
        Truncation::new(j.l_max)?,
        j.born,
    )?;
    let trace = two_temperature_force(|t| isolated_force_z(&born, t, quad), j.temperature, j.t_env)?;
    let mut t = Table::new(&[
        "radius_m",
        "temperature_K",
        "t_env_K",
        "force_dilute_N",
        "force_born_trace_N",
        "quadrature_error_N",
    ]);
    t.push(vec![
        j.radius.into(),
        j.temperature.into(),
        j.t_env.into(),
        dilute.value.into(),
        trace.value.into(),
        (dilute.quadrature_error.max(trace.quadrature_error)).into(),
    ]);
    t.notes.push("force along +z, lower half z < 0, upper half z > 0".into());
    Ok(t)
}

pub fn overlap(cfg: &RunConfig, from: f64, to: f64, points: usize) -> Result<Table, CliError> {
    let spec = cfg.spheroid()?;
    let mut t = Table::new(&["omega_over_c_rad_per_um", "omega_rad_per_s", "overlap_m6"]);
    for q in linspace(from, to, points) {
        let w = q * 1e6 * C;
        t.push(vec![q.into(), w.into(), overlap_factor(&spec, w)?.into()]);
    }
    Ok(t)
}

pub fn heating(cfg: &RunConfig) -> Result<Table, CliError> {
    let spec = cfg.spheroid()?;
    let o = cfg.orientation()?;
    let scene = cfg.scene()?;
    let h = heating_derivative(LateralRoute::Spheroid(&spec, o), &scene, &cfg.quadrature)?;
    let dg = additional_friction(h, cfg.friction.conductance, scene.t_particle)?;
    let mut t = Table::new(&[
        "t_particle_K",
        "theta_rad",
        "phi_rad",
        "d_m",
        "dH_dv_W_s_per_m",
        "conductance_W_per_K",
        "delta_gamma_N_s_per_m",
    ]);
    t.push(vec![
        scene.t_particle.into(),
        o.theta.into(),
        o.phi.into(),
        scene.d.into(),
        h.into(),
        cfg.friction.conductance.into(),
        dg.into(),
    ]);
    Ok(t)
}

pub fn friction(cfg: &RunConfig) -> Result<Table, CliError> {
    let f = &cfg.friction;
    let spec = cfg.spheroid()?;
    let heat_capacity = f.heat_capacity.unwrap_or(cfg.density * spec.volume() * f.specific_heat);
    let model = FrictionModel { heat_capacity, conductance: f.conductance, tau1: f.tau1 };
    model.validate()?;
    let dg = match f.delta_gamma {
        Some(v) => v,
        None => {
            let scene = cfg.scene()?;
            let h = heating_derivative(LateralRoute::Spheroid(&spec, cfg.orientation()?), &scene, &cfg.quadrature)?;
            additional_friction(h, f.conductance, scene.t_particle)?
        }
    };
    let grid = linspace(0.0, f.t_max_over_tau2 * model.tau2(), f.points);
    let curve = friction_curve(f.gamma_std, dg, &model, &grid)?;
    let mut t = Table::new(&["t_s", "gamma_N_s_per_m"]);
    for (time, g) in curve {
        t.push(vec![time.into(), g.into()]);
    }
    t.notes.push(format!(
        "tau1 = {:e} s, tau2 = {:e} s, gamma_std = {:e} N s/m, delta_gamma = {:e} N s/m",
        model.tau1,
        model.tau2(),
        f.gamma_std,
        dg
    ));
    Ok(t)
}

pub fn mie(cfg: &RunConfig) -> Result<Table, CliError> {
    let m = &cfg.mie;
    let mat = m.material.resolve()?;
    if !(m.radius > 0.0) || !(m.omega > 0.0) || m.l_max == 0 {
        return Err(CliError::Config("mie needs radius > 0, omega > 0 and l_max >= 1".into()));
    }
    let (eps, mu) = (mat.permittivity(m.omega), mat.permeability());
    let x = m.omega * m.radius / C;
    let mut t = Table::new(&["l", "size_parameter", "t_m_re", "t_m_im", "t_n_re", "t_n_im"]);
    for l in 1..=m.l_max {
        let tm = mie_coefficient(Polarization::M, l, x, eps, mu)?;
        let tn = mie_coefficient(Polarization::N, l, x, eps, mu)?;
        t.push(vec![Cell::Int(l as i64), x.into(), tm.re.into(), tm.im.into(), tn.re.into(), tn.im.into()]);
    }
    Ok(t)
}

pub fn fresnel(cfg: &RunConfig) -> Result<Table, CliError> {
    let f = &cfg.fresnel;
    let mat = f.material.resolve()?;
    let (eps, mu) = (mat.permittivity(f.omega), mat.permeability());
    let nf = near_field_response(eps)?;
    let mut t = Table::new(&["k_perp_per_m", "r_m_re", "r_m_im", "r_n_re", "r_n_im", "near_field_factor"]);
    for &kp in &f.k_perp {
        let rm = fresnel_reflection(Polarization::M, kp, f.omega, eps, mu)?;
        let rn = fresnel_reflection(Polarization::N, kp, f.omega, eps, mu)?;
        t.push(vec![kp.into(), rm.re.into(), rm.im.into(), rn.re.into(), rn.im.into(), nf.into()]);
    }
    Ok(t)
}

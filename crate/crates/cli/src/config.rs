//! JSON run configuration. Lengths in m, temperatures in K, frequencies in rad/s.

use std::f64::consts::PI;
use std::path::Path;

use casimir_core::constants::DEFAULT_DENSITY;
use casimir_core::forces::ThermalScene;
use casimir_core::materials::{preset, DielectricModel};
use casimir_core::polarizability::{Orientation, SpheroidSpec};
use casimir_core::scattering::BornQuadrature;
use casimir_core::thermo::QuadratureSpec;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A preset name or an inline model.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MaterialSpec {
    Preset(String),
    Model(DielectricModel),
}

impl MaterialSpec {
    pub fn resolve(&self) -> Result<DielectricModel, CliError> {
        let m = match self {
            MaterialSpec::Preset(name) => preset(name)?,
            MaterialSpec::Model(m) => m.clone(),
        };
        m.validate()?;
        Ok(m)
    }

    /// Flag values: a preset name, or a JSON object for an inline model.
    pub fn parse_flag(s: &str) -> Result<Self, CliError> {
        if s.trim_start().starts_with('{') {
            let m: DielectricModel = serde_json::from_str(s)
                .map_err(|e| CliError::Config(format!("bad inline material '{s}': {e}")))?;
            Ok(MaterialSpec::Model(m))
        } else {
            Ok(MaterialSpec::Preset(s.to_string()))
        }
    }
}

impl From<&str> for MaterialSpec {
    fn from(s: &str) -> Self {
        MaterialSpec::Preset(s.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ParticleConfig {
    pub r_par: f64,
    pub r_perp: f64,
    pub material: MaterialSpec,
}

impl Default for ParticleConfig {
    fn default() -> Self {
        ParticleConfig { r_par: 40e-9, r_perp: 10e-9, material: "spheroid".into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OrientationConfig {
    /// Tilt of the symmetry axis from the surface normal, rad.
    pub theta: f64,
    pub phi: f64,
}

impl Default for OrientationConfig {
    fn default() -> Self {
        OrientationConfig { theta: PI / 4.0, phi: 0.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SceneConfig {
    pub t_particle: f64,
    pub t_plate: f64,
    pub d: f64,
    pub plate: MaterialSpec,
}

impl Default for SceneConfig {
    fn default() -> Self {
        SceneConfig { t_particle: 550.0, t_plate: 300.0, d: 400e-9, plate: "plate1".into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct JanusConfig {
    pub radius: f64,
    /// Fills z < 0.
    pub lower: MaterialSpec,
    /// Fills z > 0.
    pub upper: MaterialSpec,
    pub temperature: f64,
    pub t_env: f64,
    pub l_max: usize,
    pub born: BornQuadrature,
}

impl Default for JanusConfig {
    fn default() -> Self {
        JanusConfig {
            radius: 0.5e-6,
            lower: MaterialSpec::Model(DielectricModel::constant(num_complex::Complex64::new(1.05, 0.0))),
            upper: MaterialSpec::Model(DielectricModel::constant(num_complex::Complex64::new(1.05, 0.02))),
            temperature: 300.0,
            t_env: 0.0,
            l_max: 3,
            born: BornQuadrature::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FrictionConfig {
    /// Standard friction coefficient, N·s/m.
    pub gamma_std: f64,
    /// Heat capacity, J/K. Defaults to ρ V c_p of the particle.
    pub heat_capacity: Option<f64>,
    /// Specific heat, J/(kg·K), used when `heat_capacity` is absent.
    pub specific_heat: f64,
    /// Heat transfer coefficient, W/K.
    pub conductance: f64,
    pub tau1: f64,
    /// Overrides the Δγ computed from the heating rate.
    pub delta_gamma: Option<f64>,
    /// Time grid end, in units of τ₂.
    pub t_max_over_tau2: f64,
    pub points: usize,
}

impl Default for FrictionConfig {
    fn default() -> Self {
        FrictionConfig {
            gamma_std: 1e-12,
            heat_capacity: None,
            specific_heat: 690.0,
            conductance: 1e-12,
            tau1: 1e-14,
            delta_gamma: None,
            t_max_over_tau2: 5.0,
            points: 101,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct MieConfig {
    pub radius: f64,
    pub material: MaterialSpec,
    pub omega: f64,
    pub l_max: usize,
}

impl Default for MieConfig {
    fn default() -> Self {
        MieConfig { radius: 50e-9, material: "spheroid".into(), omega: 1e13, l_max: 3 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FresnelConfig {
    pub material: MaterialSpec,
    pub omega: f64,
    /// Lateral wave numbers, 1/m.
    pub k_perp: Vec<f64>,
}

impl Default for FresnelConfig {
    fn default() -> Self {
        FresnelConfig { material: "plate1".into(), omega: 1e13, k_perp: vec![0.0, 1e5, 1e6, 1e7] }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OverlapConfig {
    /// ω/c range in rad/μm.
    pub from: f64,
    pub to: f64,
    pub points: usize,
}

impl Default for OverlapConfig {
    fn default() -> Self {
        OverlapConfig { from: 0.02, to: 0.06, points: 401 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub particle: ParticleConfig,
    pub orientation: OrientationConfig,
    pub scene: SceneConfig,
    pub janus: JanusConfig,
    pub friction: FrictionConfig,
    pub mie: MieConfig,
    pub fresnel: FresnelConfig,
    pub overlap: OverlapConfig,
    pub quadrature: QuadratureSpec,
    /// kg/m³, for the gravity normalisation.
    pub density: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            particle: ParticleConfig::default(),
            orientation: OrientationConfig::default(),
            scene: SceneConfig::default(),
            janus: JanusConfig::default(),
            friction: FrictionConfig::default(),
            mie: MieConfig::default(),
            fresnel: FresnelConfig::default(),
            overlap: OverlapConfig::default(),
            quadrature: QuadratureSpec::with_rel_tol(1e-8),
            density: DEFAULT_DENSITY,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn spheroid(&self) -> Result<SpheroidSpec, CliError> {
        let p = &self.particle;
        Ok(SpheroidSpec::new(p.r_par, p.r_perp, p.material.resolve()?)?)
    }

    pub fn orientation(&self) -> Result<Orientation, CliError> {
        Ok(Orientation::new(self.orientation.theta, self.orientation.phi)?)
    }

    pub fn scene(&self) -> Result<ThermalScene, CliError> {
        let s = &self.scene;
        Ok(ThermalScene::new(s.t_particle, s.t_plate, s.d, s.plate.resolve()?)?)
    }

    /// Everything every command needs, checked before any computation.
    pub fn validate(&self) -> Result<(), CliError> {
        self.spheroid()?;
        self.orientation()?;
        self.scene()?;
        self.quadrature.validate()?;
        if !(self.density > 0.0) {
            return Err(CliError::Config(format!("density must be positive, got {}", self.density)));
        }
        Ok(())
    }
}

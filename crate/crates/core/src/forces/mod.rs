//! Self-propulsion forces: isolated particles (trace formula, small-object and
//! dilute janus forms) and the lateral force near a plate (T-matrix,
//! polarizability and spheroid forms).

mod isolated;
mod lateral;

pub use isolated::{isolated_force_z, janus_dilute_force, janus_spectral_factor, small_object_force_z};
pub use lateral::{
    lateral_force, lateral_force_polarizability, lateral_force_spheroid, lateral_force_tmatrix,
    lateral_force_total, LateralRoute,
};

use serde::{Deserialize, Serialize};

use crate::constants::{thermal_wavelength, G_N};
use crate::materials::DielectricModel;
use crate::polarizability::SpheroidSpec;
use crate::{Error, Result};

/// Ratio below which a length-scale separation counts as satisfied.
pub const VALIDITY_THRESHOLD: f64 = 0.2;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThermalScene {
    pub t_particle: f64,
    pub t_plate: f64,
    /// Centre-to-surface separation, m.
    pub d: f64,
    pub plate: DielectricModel,
}

impl ThermalScene {
    pub fn new(t_particle: f64, t_plate: f64, d: f64, plate: DielectricModel) -> Result<Self> {
        let s = ThermalScene { t_particle, t_plate, d, plate };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t_particle >= 0.0) || !(self.t_plate >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "temperatures must be >= 0, got {} and {}",
                self.t_particle, self.t_plate
            )));
        }
        if !(self.d > 0.0) {
            return Err(Error::InvalidArgument(format!("separation must be positive, got {}", self.d)));
        }
        self.plate.validate()
    }

    /// Same scene with the particle at temperature `t`.
    pub fn at(&self, t: f64) -> Self {
        ThermalScene { t_particle: t, ..self.clone() }
    }
}

/// Length-scale ratios behind the near-field formulas.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Validity {
    pub r_over_d: Option<f64>,
    pub d_over_lambda_t: Option<f64>,
}

impl Validity {
    pub fn near_field(size: Option<f64>, d: f64, t: f64) -> Self {
        Validity {
            r_over_d: size.map(|r| r / d),
            d_over_lambda_t: (t > 0.0).then(|| d / thermal_wavelength(t)),
        }
    }

    pub fn near_field_ok(&self) -> bool {
        [self.r_over_d, self.d_over_lambda_t]
            .iter()
            .flatten()
            .all(|&v| v < VALIDITY_THRESHOLD)
    }

    fn worst(a: Option<f64>, b: Option<f64>) -> Option<f64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(x.max(y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn combine(&self, other: &Validity) -> Validity {
        Validity {
            r_over_d: Self::worst(self.r_over_d, other.r_over_d),
            d_over_lambda_t: Self::worst(self.d_over_lambda_t, other.d_over_lambda_t),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ForceResult {
    /// N.
    pub value: f64,
    /// N, non-negative.
    pub quadrature_error: f64,
    pub validity: Validity,
}

/// F(T_particle) − F(T_plate) from a self-part evaluator. Also serves the
/// environment-temperature subtraction of isolated forces.
pub fn two_temperature_force<F>(force_fn: F, t_particle: f64, t_plate: f64) -> Result<ForceResult>
where
    F: Fn(f64) -> Result<ForceResult>,
{
    if !(t_particle >= 0.0) || !(t_plate >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "temperatures must be >= 0, got {t_particle} and {t_plate}"
        )));
    }
    let a = force_fn(t_particle)?;
    let b = force_fn(t_plate)?;
    Ok(ForceResult {
        value: a.value - b.value,
        quadrature_error: a.quadrature_error + b.quadrature_error,
        validity: a.validity.combine(&b.validity),
    })
}

/// F / (ρ V g) with V the spheroid volume.
pub fn gravity_ratio(force: f64, spec: &SpheroidSpec, density: f64) -> Result<f64> {
    if !(density > 0.0) {
        return Err(Error::InvalidArgument(format!("density must be positive, got {density}")));
    }
    Ok(force / (density * spec.volume() * G_N))
}

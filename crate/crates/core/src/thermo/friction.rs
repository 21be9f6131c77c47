use serde::{Deserialize, Serialize};

use crate::forces::{LateralRoute, ThermalScene};
use crate::thermo::{QuadratureSpec, Weight};
use crate::{Error, Result};

/// d⟨H⟩/dv_x at v = 0 in W/(m/s): −T ∂F₁ₓ/∂T evaluated with the weight
/// T ∂n/∂T = x e^x/(e^x − 1)² in place of n.
pub fn heating_derivative(route: LateralRoute<'_>, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<f64> {
    let t = scene.t_particle;
    let r = route.integrate(scene, t, Weight::BoseDt, quad)?;
    Ok(-t * r.value)
}

/// Δγ = (dH/dv)²/(k T) in N·s/m.
pub fn additional_friction(heating_deriv: f64, k: f64, t: f64) -> Result<f64> {
    if !(k > 0.0) || !(t > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "additional friction needs k > 0 and T > 0, got {k} and {t}"
        )));
    }
    Ok(heating_deriv * heating_deriv / (k * t))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrictionModel {
    /// Heat capacity, J/K.
    pub heat_capacity: f64,
    /// Heat transfer coefficient, W/K.
    pub conductance: f64,
    /// Electronic time scale, s.
    #[serde(default = "default_tau1")]
    pub tau1: f64,
}

fn default_tau1() -> f64 {
    1e-14
}

impl FrictionModel {
    pub fn new(heat_capacity: f64, conductance: f64) -> Result<Self> {
        let m = FrictionModel { heat_capacity, conductance, tau1: default_tau1() };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.heat_capacity > 0.0) || !(self.conductance > 0.0) || !(self.tau1 > 0.0) {
            return Err(Error::InvalidArgument(format!("friction model needs C, k, tau1 > 0, got {self:?}")));
        }
        Ok(())
    }

    /// Thermal relaxation time C/k.
    pub fn tau2(&self) -> f64 {
        self.heat_capacity / self.conductance
    }
}

/// γ(t) = γ_std(1 − e^{−t/τ₁}) + Δγ(1 − e^{−t/τ₂}).
pub fn friction_curve(gamma_std: f64, delta_gamma: f64, model: &FrictionModel, t_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    model.validate()?;
    if t_grid.iter().any(|&t| !(t >= 0.0)) || t_grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidArgument("time grid must be ascending and non-negative".into()));
    }
    let tau2 = model.tau2();
    Ok(t_grid
        .iter()
        .map(|&t| {
            let g = gamma_std * -(-t / model.tau1).exp_m1() + delta_gamma * -(-t / tau2).exp_m1();
            (t, g)
        })
        .collect())
}

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use super::{two_temperature_force, ForceResult, ThermalScene, Validity};
use crate::constants::{C, HBAR};
use crate::materials::{near_field_response, Polarization, Resonance};
use crate::polarizability::{spheroid_polarizability, Orientation, OrientedSpheroid, PolarizabilityProvider, SpheroidSpec};
use crate::scattering::TMatrixProvider;
use crate::thermo::{thermal_integral, Integral, QuadratureSpec, Weight};
use crate::waves::PartialWaveIndex;
use crate::{Error, Result};

/// The three equivalent descriptions of a dipolar particle near a plate.
#[derive(Clone, Copy)]
pub enum LateralRoute<'a> {
    /// l = 1 electric block of a T-matrix.
    TMatrix(&'a dyn TMatrixProvider),
    /// Lab-frame polarizability tensor.
    Polarizability(&'a dyn PolarizabilityProvider),
    /// Prolate spheroid with its symmetry axis at the given orientation.
    Spheroid(&'a SpheroidSpec, Orientation),
}

/// Weights A_m of the T-matrix form: 1 for m = ±1, 2 for m = 0.
fn a_weight(m: i32) -> f64 {
    if m == 0 {
        2.0
    } else {
        1.0
    }
}

impl LateralRoute<'_> {
    /// Dimensional prefactor multiplying ∫dω w(ω) g(ω).
    pub fn prefactor(&self, d: f64) -> f64 {
        let base = HBAR / d.powi(7);
        match self {
            LateralRoute::TMatrix(_) => 27.0 / (128.0 * SQRT_2 * PI) * base,
            LateralRoute::Polarizability(_) => 3.0 / (32.0 * PI) * base,
            LateralRoute::Spheroid(_, o) => {
                -3.0 / (64.0 * PI) * base * (2.0 * o.theta).sin() * o.phi.cos()
            }
        }
    }

    /// Particle part g(ω) of the spectral integrand, without the plate factor.
    pub fn particle_kernel(&self, omega: f64) -> Result<f64> {
        match self {
            LateralRoute::TMatrix(p) => {
                let t = p.t_matrix(omega)?;
                let n = |m| PartialWaveIndex { pol: Polarization::N, l: 1, m };
                let el = |mp: i32, m: i32| t.get(n(mp), n(m));
                let mut s = 0.0;
                for m in -1..=1 {
                    let v: Complex64 = el(0, m) * el(1, m).conj() - el(-1, m) * el(0, m).conj();
                    s += a_weight(m) * v.re;
                }
                let k = omega / C;
                Ok(s / k.powi(6))
            }
            LateralRoute::Polarizability(p) => {
                let a = p.tensor(omega)?;
                let v = a.get(2, 0) * a.get(0, 0).conj()
                    + a.get(2, 1) * a.get(0, 1).conj()
                    + 2.0 * a.get(2, 2) * a.get(0, 2).conj();
                Ok(v.im)
            }
            LateralRoute::Spheroid(s, _) => {
                let (a, b) = spheroid_polarizability(s, omega)?;
                Ok((a * b.conj()).im)
            }
        }
    }

    pub fn resonances(&self) -> Vec<Resonance> {
        match self {
            LateralRoute::TMatrix(p) => p.resonances(),
            LateralRoute::Polarizability(p) => p.resonances(),
            LateralRoute::Spheroid(s, _) => OrientedSpheroid::resonances_of(s),
        }
    }

    pub fn size(&self) -> Option<f64> {
        match self {
            LateralRoute::TMatrix(p) => p.size(),
            LateralRoute::Polarizability(p) => p.size(),
            LateralRoute::Spheroid(s, _) => Some(s.r_par),
        }
    }

    /// K ∫dω w(ω,T) (Im r)² g(ω) at temperature T, with K = `prefactor(d)`.
    pub(crate) fn integrate(&self, scene: &ThermalScene, t: f64, weight: Weight, quad: &QuadratureSpec) -> Result<Integral> {
        scene.validate()?;
        let pref = self.prefactor(scene.d);
        if pref == 0.0 {
            return Ok(Integral { value: 0.0, error: 0.0 });
        }
        let mut hints = self.resonances();
        hints.extend(scene.plate.resonances());
        hints.extend(scene.plate.shifted_resonances(0.5));
        let f = |omega: f64| -> Result<f64> {
            let s = near_field_response(scene.plate.permittivity(omega))?;
            if s == 0.0 {
                return Ok(0.0);
            }
            Ok(s * self.particle_kernel(omega)?)
        };
        let r = thermal_integral(f, t, weight, quad, &hints)?;
        Ok(Integral { value: pref * r.value, error: pref.abs() * r.error })
    }
}

/// Self part F₁ₓ at the scene's particle temperature; the plate temperature
/// is ignored.
pub fn lateral_force(route: LateralRoute<'_>, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<ForceResult> {
    let t = scene.t_particle;
    let r = route.integrate(scene, t, Weight::Bose, quad)?;
    Ok(ForceResult {
        value: r.value,
        quadrature_error: r.error,
        validity: Validity::near_field(route.size(), scene.d, t),
    })
}

/// F₁ₓ(T_particle) − F₁ₓ(T_plate).
pub fn lateral_force_total(route: LateralRoute<'_>, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<ForceResult> {
    two_temperature_force(|t| lateral_force(route, &scene.at(t), quad), scene.t_particle, scene.t_plate)
}

pub fn lateral_force_tmatrix<P: TMatrixProvider>(provider: &P, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<ForceResult> {
    if provider.truncation().l_max < 1 {
        return Err(Error::InvalidArgument("lateral force needs the l = 1 block".into()));
    }
    lateral_force(LateralRoute::TMatrix(provider), scene, quad)
}

pub fn lateral_force_polarizability<P: PolarizabilityProvider>(provider: &P, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<ForceResult> {
    lateral_force(LateralRoute::Polarizability(provider), scene, quad)
}

pub fn lateral_force_spheroid(spec: &SpheroidSpec, o: Orientation, scene: &ThermalScene, quad: &QuadratureSpec) -> Result<ForceResult> {
    spec.validate()?;
    lateral_force(LateralRoute::Spheroid(spec, o), scene, quad)
}

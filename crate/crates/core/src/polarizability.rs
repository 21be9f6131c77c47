//! Spheroid polarizabilities, depolarisation factors and lab-frame tensors.

use std::f64::consts::PI;

use nalgebra::Matrix3;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::materials::{DielectricModel, Resonance};
use crate::{Error, Result};

/// Prolate spheroid: `r_par` along the symmetry axis, `r_perp` across it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpheroidSpec {
    pub r_par: f64,
    pub r_perp: f64,
    pub material: DielectricModel,
}

impl SpheroidSpec {
    pub fn new(r_par: f64, r_perp: f64, material: DielectricModel) -> Result<Self> {
        let s = SpheroidSpec { r_par, r_perp, material };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.r_par > 0.0) || !(self.r_perp > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "spheroid radii must be positive, got r_par={}, r_perp={}",
                self.r_par, self.r_perp
            )));
        }
        if self.r_perp > self.r_par {
            return Err(Error::InvalidArgument(format!(
                "only prolate spheroids are supported (r_perp={} > r_par={})",
                self.r_perp, self.r_par
            )));
        }
        self.material.validate()
    }

    /// η with η² = 1 − R⊥²/R∥².
    pub fn eccentricity(&self) -> f64 {
        let q = self.r_perp / self.r_par;
        (1.0 - q * q).max(0.0).sqrt()
    }

    pub fn volume(&self) -> f64 {
        4.0 / 3.0 * PI * self.r_perp * self.r_perp * self.r_par
    }

    pub fn factors(&self) -> (f64, f64) {
        geometric_factors(self.eccentricity()).expect("validated spheroid has eta < 1")
    }
}

/// Depolarisation factors (n_par, n_perp) of a prolate spheroid.
pub fn geometric_factors(eta: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&eta) {
        return Err(Error::InvalidArgument(format!("eccentricity must lie in [0, 1), got {eta}")));
    }
    if eta == 0.0 {
        return Ok((1.0 / 3.0, 1.0 / 3.0));
    }
    let e2 = eta * eta;
    let n_par = if eta < 1e-4 {
        1.0 / 3.0 - 2.0 * e2 / 15.0
    } else if eta < 0.3 {
        // (atanh η − η)/η³ as a power series
        let mut sum = 0.0;
        let mut p = 1.0;
        for k in 1..200 {
            let t = p / (2 * k + 1) as f64;
            sum += t;
            if t < 1e-18 * sum {
                break;
            }
            p *= e2;
        }
        (1.0 - e2) * sum
    } else {
        (1.0 - e2) / (e2 * eta) * (eta.atanh() - eta)
    };
    Ok((n_par, 0.5 * (1.0 - n_par)))
}

fn response(eps: Complex64, n: f64, vol3: f64) -> Result<Complex64> {
    let den = (eps - 1.0) * n + 1.0;
    if den.norm() < 1e-14 * (1.0 + (eps - 1.0).norm() * n) {
        return Err(Error::ResonantDenominator(format!(
            "(eps-1)n+1 vanishes for eps={eps}, n={n}"
        )));
    }
    Ok(vol3 * (eps - 1.0) / den)
}

/// (α∥, α⊥) in m³.
pub fn spheroid_polarizability(spec: &SpheroidSpec, omega: f64) -> Result<(Complex64, Complex64)> {
    let eps = spec.material.permittivity(omega);
    let (n_par, n_perp) = spec.factors();
    let v = spec.r_perp * spec.r_perp * spec.r_par / 3.0;
    Ok((response(eps, n_par, v)?, response(eps, n_perp, v)?))
}

/// Im[α∥ α⊥*].
pub fn overlap_factor(spec: &SpheroidSpec, omega: f64) -> Result<f64> {
    let (a, b) = spheroid_polarizability(spec, omega)?;
    Ok((a * b.conj()).im)
}

/// Tilt θ of the symmetry axis from the surface normal (z) and its azimuth φ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Orientation {
    pub theta: f64,
    pub phi: f64,
}

impl Orientation {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) || !phi.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "orientation requires theta in [0, pi] and finite phi, got ({theta}, {phi})"
            )));
        }
        Ok(Orientation { theta, phi: phi.rem_euclid(2.0 * PI) })
    }

    /// Lab-frame direction of the body symmetry axis.
    pub fn axis(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizabilityTensor(pub Matrix3<Complex64>);

impl PolarizabilityTensor {
    pub fn zeros() -> Self {
        PolarizabilityTensor(Matrix3::zeros())
    }

    pub fn isotropic(a: Complex64) -> Self {
        PolarizabilityTensor(Matrix3::from_diagonal_element(a))
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[(i, j)]
    }
}

/// α = O_zᵀ(O_yᵀ α₀ O_y)O_z with α₀ = diag(α⊥, α⊥, α∥).
pub fn lab_frame_tensor(a_par: Complex64, a_perp: Complex64, o: Orientation) -> PolarizabilityTensor {
    let (st, ct) = o.theta.sin_cos();
    let (sp, cp) = o.phi.sin_cos();
    let oy = Matrix3::new(ct, 0.0, -st, 0.0, 1.0, 0.0, st, 0.0, ct).map(|v| Complex64::new(v, 0.0));
    let oz = Matrix3::new(cp, sp, 0.0, -sp, cp, 0.0, 0.0, 0.0, 1.0).map(|v| Complex64::new(v, 0.0));
    let a0 = Matrix3::from_diagonal(&nalgebra::Vector3::new(a_perp, a_perp, a_par));
    PolarizabilityTensor(oz.transpose() * (oy.transpose() * a0 * oy) * oz)
}

/// Frequency-dependent polarizability tensor.
pub trait PolarizabilityProvider: Sync {
    fn tensor(&self, omega: f64) -> Result<PolarizabilityTensor>;

    /// Frequencies where the response peaks, used to seed quadrature panels.
    fn resonances(&self) -> Vec<Resonance> {
        Vec::new()
    }

    /// Largest linear dimension, for near-field validity flags.
    fn size(&self) -> Option<f64> {
        None
    }
}

#[derive(Debug, Clone)]
pub struct OrientedSpheroid {
    pub spec: SpheroidSpec,
    pub orientation: Orientation,
}

impl OrientedSpheroid {
    pub fn resonances_of(spec: &SpheroidSpec) -> Vec<Resonance> {
        let (np, nq) = spec.factors();
        let mut v = spec.material.resonances();
        v.extend(spec.material.shifted_resonances(np));
        v.extend(spec.material.shifted_resonances(nq));
        v
    }
}

impl PolarizabilityProvider for OrientedSpheroid {
    fn tensor(&self, omega: f64) -> Result<PolarizabilityTensor> {
        let (a, b) = spheroid_polarizability(&self.spec, omega)?;
        Ok(lab_frame_tensor(a, b, self.orientation))
    }

    fn resonances(&self) -> Vec<Resonance> {
        Self::resonances_of(&self.spec)
    }

    fn size(&self) -> Option<f64> {
        Some(self.spec.r_par)
    }
}

/// A frequency-independent tensor.
#[derive(Debug, Clone, Copy)]
pub struct FixedTensor(pub PolarizabilityTensor);

impl PolarizabilityProvider for FixedTensor {
    fn tensor(&self, _omega: f64) -> Result<PolarizabilityTensor> {
        Ok(self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::preset;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn factor_limits() {
        let (a, b) = geometric_factors(0.0).unwrap();
        assert!((a - 1.0 / 3.0).abs() < 1e-16 && (b - 1.0 / 3.0).abs() < 1e-16);
        for eta in [1e-5, 1e-3, 0.1, 0.29, 0.31, 0.9, 0.999] {
            let (a, b) = geometric_factors(eta).unwrap();
            assert!((a + 2.0 * b - 1.0).abs() < 1e-15);
        }
        assert!(geometric_factors(1.0).is_err());
        // branches agree where they meet
        let lo = geometric_factors(0.3 - 1e-12).unwrap().0;
        let hi = geometric_factors(0.3 + 1e-12).unwrap().0;
        assert!((lo - hi).abs() < 1e-12);
    }

    #[test]
    fn sphere_reduction() {
        let eps = c(2.5, 0.3);
        let s = SpheroidSpec::new(1e-8, 1e-8, DielectricModel::constant(eps)).unwrap();
        let (a, b) = spheroid_polarizability(&s, 1e13).unwrap();
        let expect = 1e-24 * (eps - 1.0) / (eps + 2.0);
        assert!((a - expect).norm() < 1e-15 * expect.norm());
        assert_eq!(a, b);
        let v = SpheroidSpec::new(2e-8, 1e-8, DielectricModel::constant(c(1.0, 0.0))).unwrap();
        assert_eq!(spheroid_polarizability(&v, 1e13).unwrap(), (c(0.0, 0.0), c(0.0, 0.0)));
        assert!(SpheroidSpec::new(1e-8, 2e-8, DielectricModel::constant(eps)).is_err());
    }

    #[test]
    fn resonant_denominator_detected() {
        // (eps-1)/3 + 1 = 0 at eps = -2
        let s = SpheroidSpec::new(1e-8, 1e-8, DielectricModel::constant(c(-2.0, 0.0))).unwrap();
        assert!(matches!(spheroid_polarizability(&s, 1e13), Err(Error::ResonantDenominator(_))));
    }

    #[test]
    fn golden_spheroid_value() {
        let s = SpheroidSpec::new(40e-9, 10e-9, preset("spheroid").unwrap()).unwrap();
        let (a, b) = spheroid_polarizability(&s, 1e13).unwrap();
        // direct evaluation of the closed forms at ε = 1 + 300i
        let eta: f64 = (1.0 - 1.0 / 16.0f64).sqrt();
        let np = (1.0 - eta * eta) / eta.powi(3) * (eta.atanh() - eta);
        let nq = 0.5 * (1.0 - np);
        let eps = c(1.0, 300.0);
        let v = 10e-9f64.powi(2) * 40e-9 / 3.0;
        let ea = v * (eps - 1.0) / ((eps - 1.0) * np + 1.0);
        let eb = v * (eps - 1.0) / ((eps - 1.0) * nq + 1.0);
        assert!((a - ea).norm() < 1e-12 * ea.norm());
        assert!((b - eb).norm() < 1e-12 * eb.norm());
        // pinned
        assert!((a.re - 1.764_728_415_945e-23).abs() < 1e-34, "{a}");
        assert!((a.im - 7.800_879_384_904e-25).abs() < 1e-36, "{a}");
    }

    #[test]
    fn lab_frame_examples() {
        let (a, b) = (c(3.0, 1.0), c(1.0, 0.5));
        let t = lab_frame_tensor(a, b, Orientation::new(0.0, 0.0).unwrap());
        assert_eq!(t.get(2, 2), a);
        assert_eq!(t.get(0, 0), b);
        let t = lab_frame_tensor(a, b, Orientation::new(PI / 2.0, 0.0).unwrap());
        assert!((t.get(0, 0) - a).norm() < 1e-15 && (t.get(2, 2) - b).norm() < 1e-15);
        assert!(t.get(0, 2).norm() < 1e-15);
        let t = lab_frame_tensor(a, b, Orientation::new(PI / 4.0, 0.0).unwrap());
        assert!((t.get(0, 2) - (a - b) / 2.0).norm() < 1e-15);
        assert!((t.get(2, 0) - (a - b) / 2.0).norm() < 1e-15);
    }

    #[test]
    fn overlap_vanishes() {
        let sphere = SpheroidSpec::new(1e-8, 1e-8, preset("spheroid").unwrap()).unwrap();
        assert_eq!(overlap_factor(&sphere, 1.2e13).unwrap(), 0.0);
        let lossless = SpheroidSpec::new(2e-8, 1e-8, DielectricModel::constant(c(4.0, 0.0))).unwrap();
        assert_eq!(overlap_factor(&lossless, 1.2e13).unwrap(), 0.0);
    }
}

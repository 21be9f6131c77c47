//! Permittivity models, Fresnel reflection and the near-field surface factor.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::C;
use crate::{Error, Result};

/// One Lorentz oscillator: ε − 1 = C ω₀²/(ω₀² − ω² − iγω).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Oscillator {
    pub strength: f64,
    pub omega0: f64,
    pub gamma: f64,
}

impl Oscillator {
    pub fn new(strength: f64, omega0: f64, gamma: f64) -> Result<Self> {
        let o = Oscillator { strength, omega0, gamma };
        o.validate()?;
        Ok(o)
    }

    fn validate(&self) -> Result<()> {
        if !(self.strength >= 0.0) || !(self.omega0 > 0.0) || !(self.gamma >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "oscillator requires C >= 0, omega0 > 0, gamma >= 0, got {self:?}"
            )));
        }
        Ok(())
    }

    fn chi(&self, omega: Complex64) -> Complex64 {
        let w02 = self.omega0 * self.omega0;
        self.strength * w02 / (w02 - omega * omega - Complex64::i() * self.gamma * omega)
    }
}

/// Spectral feature of a model: centre frequency and width, both rad/s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resonance {
    pub omega: f64,
    pub width: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DielectricModel {
    Constant {
        eps: Complex64,
        #[serde(default = "unit")]
        mu: Complex64,
    },
    Lorentz(Oscillator),
    LorentzSum { oscillators: Vec<Oscillator> },
}

fn unit() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

impl DielectricModel {
    pub fn constant(eps: Complex64) -> Self {
        DielectricModel::Constant { eps, mu: unit() }
    }

    pub fn lorentz(strength: f64, omega0: f64, gamma: f64) -> Result<Self> {
        Ok(DielectricModel::Lorentz(Oscillator::new(strength, omega0, gamma)?))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            DielectricModel::Constant { eps, mu } => {
                if !(eps.re.is_finite() && eps.im.is_finite() && mu.re.is_finite() && mu.im.is_finite()) {
                    return Err(Error::InvalidArgument("non-finite constant permittivity".into()));
                }
                Ok(())
            }
            DielectricModel::Lorentz(o) => o.validate(),
            DielectricModel::LorentzSum { oscillators: os } => os.iter().try_for_each(Oscillator::validate),
        }
    }

    /// ε at real angular frequency ω (rad/s).
    pub fn permittivity(&self, omega: f64) -> Complex64 {
        self.permittivity_at(Complex64::new(omega, 0.0))
    }

    /// The model formula continued to complex frequency.
    pub fn permittivity_at(&self, omega: Complex64) -> Complex64 {
        match self {
            DielectricModel::Constant { eps, .. } => *eps,
            DielectricModel::Lorentz(o) => 1.0 + o.chi(omega),
            DielectricModel::LorentzSum { oscillators: os } => os.iter().fold(unit(), |acc, o| acc + o.chi(omega)),
        }
    }

    pub fn permeability(&self) -> Complex64 {
        match self {
            DielectricModel::Constant { mu, .. } => *mu,
            _ => unit(),
        }
    }

    fn oscillators(&self) -> &[Oscillator] {
        match self {
            DielectricModel::Constant { .. } => &[],
            DielectricModel::Lorentz(o) => std::slice::from_ref(o),
            DielectricModel::LorentzSum { oscillators: os } => os,
        }
    }

    /// Bulk resonances ω₀ with widths γ.
    pub fn resonances(&self) -> Vec<Resonance> {
        self.oscillators()
            .iter()
            .map(|o| Resonance { omega: o.omega0, width: o.gamma })
            .collect()
    }

    /// Poles of a response with depolarisation factor n, i.e. where
    /// (ε−1)n + 1 = 0 for a single oscillator: ω₀√(1 + C n).
    /// n = 1/2 gives the planar surface mode.
    pub fn shifted_resonances(&self, n: f64) -> Vec<Resonance> {
        self.oscillators()
            .iter()
            .map(|o| Resonance {
                omega: o.omega0 * (1.0 + o.strength * n).sqrt(),
                width: o.gamma,
            })
            .collect()
    }
}

/// Named presets mirroring the oscillator parameter table: (name, C, ω₀, γ).
const PRESETS: &[(&str, f64, f64, f64)] = &[
    ("spheroid", 3.0, 1e13, 1e11),
    ("plate1", 3.0, 7e12, 7e10),
    ("plate2", 3.0, 8.76e12, 8e10),
];

pub fn preset_names() -> impl Iterator<Item = &'static str> {
    PRESETS.iter().map(|p| p.0)
}

pub fn preset(name: &str) -> Result<DielectricModel> {
    PRESETS
        .iter()
        .find(|p| p.0 == name)
        .map(|&(_, c, w0, g)| DielectricModel::Lorentz(Oscillator { strength: c, omega0: w0, gamma: g }))
        .ok_or_else(|| {
            Error::InvalidArgument(format!(
                "unknown material preset '{name}' (known: {})",
                preset_names().collect::<Vec<_>>().join(", ")
            ))
        })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarization {
    M,
    N,
}

fn decaying_sqrt(z: Complex64) -> Complex64 {
    let s = z.sqrt();
    if s.im < 0.0 || (s.im == 0.0 && s.re < 0.0) {
        -s
    } else {
        s
    }
}

/// Plane-wave reflection amplitude of a half-space at lateral wave number k⊥.
pub fn fresnel_reflection(
    pol: Polarization,
    k_perp: f64,
    omega: f64,
    eps: Complex64,
    mu: Complex64,
) -> Result<Complex64> {
    if !(omega > 0.0) || !(k_perp >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "fresnel requires omega > 0 and k_perp >= 0, got {omega}, {k_perp}"
        )));
    }
    let k = omega / C;
    let kp2 = Complex64::new(k_perp * k_perp, 0.0);
    let kz = decaying_sqrt(Complex64::new(k * k, 0.0) - kp2);
    let kz_in = decaying_sqrt(eps * mu * k * k - kp2);
    let a = match pol {
        Polarization::N => eps,
        Polarization::M => mu,
    };
    Ok((a * kz - kz_in) / (a * kz + kz_in))
}

/// Near-field surface factor (Im[(ε_p−1)/(ε_p+1)])².
pub fn near_field_response(eps_p: Complex64) -> Result<f64> {
    let den = eps_p + 1.0;
    if den.norm() < 1e-14 {
        return Err(Error::ResonantDenominator(format!(
            "plate permittivity {eps_p} sits on the surface-mode pole"
        )));
    }
    let r = (eps_p - 1.0) / den;
    Ok(r.im * r.im)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn lorentz_values() {
        let m = preset("spheroid").unwrap();
        assert!((m.permittivity(1e-3) - c(4.0, 0.0)).norm() < 1e-12);
        let p = preset("plate1").unwrap();
        let e = p.permittivity(7e12);
        assert!((e - c(1.0, 300.0)).norm() < 1e-9, "{e}");
        let k = DielectricModel::constant(c(2.0, 0.5));
        assert_eq!(k.permittivity(3e14), c(2.0, 0.5));
        assert!(preset("gold").is_err());
        assert!(DielectricModel::lorentz(-1.0, 1e13, 1e11).is_err());
    }

    #[test]
    fn lorentz_sum_adds_terms() {
        let o1 = Oscillator::new(1.0, 1e13, 1e11).unwrap();
        let o2 = Oscillator::new(2.0, 3e13, 2e11).unwrap();
        let s = DielectricModel::LorentzSum { oscillators: vec![o1, o2] };
        let w = 2e13;
        let e = s.permittivity(w);
        let e1 = DielectricModel::Lorentz(o1).permittivity(w);
        let e2 = DielectricModel::Lorentz(o2).permittivity(w);
        assert!((e - (e1 + e2 - 1.0)).norm() < 1e-12);
    }

    #[test]
    fn fresnel_normal_incidence() {
        let r = fresnel_reflection(Polarization::N, 0.0, 1e14, c(4.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((r - c(1.0 / 3.0, 0.0)).norm() < 1e-14);
        for kp in [0.0, 1e5, 1e8] {
            let r = fresnel_reflection(Polarization::M, kp, 1e14, c(1.0, 0.0), c(1.0, 0.0)).unwrap();
            assert!(r.norm() < 1e-15);
        }
    }

    #[test]
    fn fresnel_near_field_rate() {
        let w = 1e14;
        let eps = c(3.0, 0.1);
        let base = (eps - 1.0) / (eps + 1.0);
        let e1 = (fresnel_reflection(Polarization::N, 100.0 * w / C, w, eps, c(1.0, 0.0)).unwrap() - base).norm();
        let e2 = (fresnel_reflection(Polarization::N, 200.0 * w / C, w, eps, c(1.0, 0.0)).unwrap() - base).norm();
        assert!(e1 < 1e-3);
        let ratio = e1 / e2;
        assert!((ratio - 4.0).abs() < 0.05, "ratio {ratio}");
    }

    #[test]
    fn model_json_round_trip() {
        let models = [
            DielectricModel::constant(c(2.0, 0.5)),
            preset("plate1").unwrap(),
            DielectricModel::LorentzSum {
                oscillators: vec![Oscillator::new(1.0, 1e13, 1e11).unwrap(), Oscillator::new(2.0, 3e13, 1e12).unwrap()],
            },
        ];
        for m in models {
            let back: DielectricModel = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
            assert_eq!(back, m);
        }
        let k: DielectricModel = serde_json::from_str(r#"{"kind":"constant","eps":[1.05,0.02]}"#).unwrap();
        assert_eq!(k.permeability(), c(1.0, 0.0));
    }

    #[test]
    fn near_field_factor() {
        assert_eq!(near_field_response(c(3.0, 0.0)).unwrap(), 0.0);
        assert_eq!(near_field_response(c(1.0, 0.0)).unwrap(), 0.0);
        assert!((near_field_response(c(2.0, 1.0)).unwrap() - 0.04).abs() < 1e-15);
        assert!(matches!(near_field_response(c(-1.0, 0.0)), Err(Error::ResonantDenominator(_))));
        assert!(near_field_response(c(1e6, 1e3)).unwrap() < 1e-11);
    }
}

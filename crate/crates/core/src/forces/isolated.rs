use std::f64::consts::PI;

use num_complex::Complex64;

use super::{ForceResult, Validity};
use crate::constants::{C, HBAR};
use crate::materials::{DielectricModel, Polarization};
use crate::scattering::TMatrixProvider;
use crate::thermo::{thermal_integral, QuadratureSpec, Weight};
use crate::waves::{a_coeff, b_coeff, p_z_matrix, PartialWaveIndex};
use crate::{Error, Result};

/// Zero for sums that cancel down to rounding noise, which an adaptive rule
/// could never resolve to a relative tolerance.
fn chop(sum: f64, magnitude: f64) -> f64 {
    if sum.abs() <= 64.0 * f64::EPSILON * magnitude {
        0.0
    } else {
        sum
    }
}

/// z-force on an isolated body at temperature T in a zero-temperature
/// environment: (2ħ/π)∫dω n(ω,T) Im Tr{p_z T T†}.
pub fn isolated_force_z<P: TMatrixProvider + ?Sized>(provider: &P, t: f64, quad: &QuadratureSpec) -> Result<ForceResult> {
    let trunc = provider.truncation();
    let f = |omega: f64| -> Result<f64> {
        let tm = provider.t_matrix(omega)?;
        if tm.trunc != trunc {
            return Err(Error::InvalidArgument("provider truncation changed with frequency".into()));
        }
        let p = p_z_matrix(trunc, omega);
        let tt = &tm.entries * tm.entries.adjoint();
        // entries of T carry rounding noise relative to the largest one
        let n = tt.nrows() as f64;
        let tmax2 = tm.entries.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
        let mut s = 0.0;
        let mut mag = 0.0;
        for i in 0..tt.nrows() {
            for j in 0..tt.ncols() {
                s += (p[(i, j)] * tt[(j, i)]).im;
                mag += p[(i, j)].norm() * n * tmax2;
            }
        }
        Ok(chop(s, mag))
    };
    let r = thermal_integral(f, t, Weight::Bose, quad, &provider.resonances())?;
    let pref = 2.0 * HBAR / PI;
    Ok(ForceResult {
        value: pref * r.value,
        quadrature_error: pref * r.error,
        validity: Validity::default(),
    })
}

/// Lowest-order-in-size force from the dipole–dipole and dipole–quadrupole
/// elements T^{MN}_{1m,1m'}, T^{NN}_{1m,1m'} and T^{NN}_{2m,1m'} only:
/// (4ħ/πc)∫dω ω n Σ_{m,m'} (a(1,m) Re[T^{MN}_{1m,1m'} T^{NN*}_{1m,1m'}]
/// + b(1,m) Im[T^{NN}_{2m,1m'} T^{NN*}_{1m,1m'}]).
pub fn small_object_force_z<P: TMatrixProvider + ?Sized>(provider: &P, t: f64, quad: &QuadratureSpec) -> Result<ForceResult> {
    if provider.truncation().l_max < 2 {
        return Err(Error::InvalidArgument("small-object force needs l = 2 elements (l_max >= 2)".into()));
    }
    let idx = |pol, l, m| PartialWaveIndex { pol, l, m };
    let f = |omega: f64| -> Result<f64> {
        let tm = provider.t_matrix(omega)?;
        let tmax2 = tm.entries.iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
        let mut s = 0.0;
        let mut mag = 0.0;
        for m in -1..=1 {
            for mp in -1..=1 {
                let col = idx(Polarization::N, 1, mp);
                let tnn: Complex64 = tm.get(idx(Polarization::N, 1, m), col);
                let tmn = tm.get(idx(Polarization::M, 1, m), col);
                let tq = tm.get(idx(Polarization::N, 2, m), col);
                s += a_coeff(1, m) * (tmn * tnn.conj()).re + b_coeff(1, m) * (tq * tnn.conj()).im;
                mag += (a_coeff(1, m).abs() + b_coeff(1, m)) * tmax2;
            }
        }
        Ok(omega * chop(s, mag))
    };
    let r = thermal_integral(f, t, Weight::Bose, quad, &provider.resonances())?;
    let pref = 4.0 * HBAR / (PI * C);
    Ok(ForceResult {
        value: pref * r.value,
        quadrature_error: pref * r.error,
        validity: Validity::default(),
    })
}

/// Im ε₂(Re ε₁ − 1) − Im ε₁(Re ε₂ − 1).
pub fn janus_spectral_factor(e1: Complex64, e2: Complex64) -> f64 {
    e2.im * (e1.re - 1.0) - e1.im * (e2.re - 1.0)
}

/// Closed-form dilute janus force, (2ħ/πc¹⁰)∫dω ω¹⁰ n (R⁹/2700) S(ω), with
/// ε₁ filling z < 0 and ε₂ filling z > 0.
pub fn janus_dilute_force(
    eps1: &DielectricModel,
    eps2: &DielectricModel,
    radius: f64,
    t: f64,
    quad: &QuadratureSpec,
) -> Result<ForceResult> {
    if !(radius > 0.0) {
        return Err(Error::InvalidArgument(format!("radius must be positive, got {radius}")));
    }
    let f = |omega: f64| -> Result<f64> {
        let k = omega / C;
        let s = janus_spectral_factor(eps1.permittivity(omega), eps2.permittivity(omega));
        Ok(k * (k * radius).powi(9) / 2700.0 * s)
    };
    let mut hints = eps1.resonances();
    hints.extend(eps2.resonances());
    let r = thermal_integral(f, t, Weight::Bose, quad, &hints)?;
    let pref = 2.0 * HBAR / PI;
    Ok(ForceResult {
        value: pref * r.value,
        quadrature_error: pref * r.error,
        validity: Validity::default(),
    })
}

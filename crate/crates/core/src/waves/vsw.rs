use num_complex::Complex64;

use super::PartialWaveIndex;
use crate::constants::C;
use crate::materials::Polarization;
use crate::specfun::{spherical_bessel_j_all, AngularTable};
use crate::Result;

/// √((−1)^m k)/√(l(l+1)) with the principal root, k = ω/c.
pub fn wave_prefactor(l: usize, m: i32, k: f64) -> Complex64 {
    let s = if m.rem_euclid(2) == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    s * (k / (l * (l + 1)) as f64).sqrt()
}

/// Radial factors (j_l(x), j_l(x)/x, [x j_l(x)]'/x), finite at x = 0.
pub(crate) fn radial_factors(l: usize, x: f64) -> Result<(f64, f64, f64)> {
    if x == 0.0 {
        return Ok(if l == 1 { (0.0, 1.0 / 3.0, 2.0 / 3.0) } else { (0.0, 0.0, 0.0) });
    }
    let j = spherical_bessel_j_all(l, Complex64::new(x, 0.0))?;
    let jl = j[l].re;
    let jx = jl / x;
    Ok((jl, jx, j[l - 1].re - l as f64 * jx))
}

/// Regular vector spherical wave E^reg_μ at position r (metres).
pub fn evaluate_regular_wave(mu: PartialWaveIndex, omega: f64, r: [f64; 3]) -> Result<[Complex64; 3]> {
    let k = omega / C;
    let rad = (r[0] * r[0] + r[1] * r[1] + r[2] * r[2]).sqrt();
    let (ct, st, phi) = if rad == 0.0 {
        (1.0, 0.0, 0.0)
    } else {
        let ct = (r[2] / rad).clamp(-1.0, 1.0);
        (ct, (1.0 - ct * ct).max(0.0).sqrt(), r[1].atan2(r[0]))
    };
    let (cp, sp) = (phi.cos(), phi.sin());
    let rhat = [st * cp, st * sp, ct];
    let that = [ct * cp, ct * sp, -st];
    let phat = [-sp, cp, 0.0];

    let l = mu.l;
    let am = mu.m.unsigned_abs() as usize;
    let tab = AngularTable::new(l, ct);
    let cm = if mu.m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
    let e = Complex64::from_polar(cm, mu.m as f64 * phi);
    let y = e * tab.y(l, am);
    let pi = Complex64::new(0.0, mu.m as f64) * e * tab.y_over_sin(l, am);
    let tau = e * tab.dy(l, am);

    let (jl, jx, dl) = radial_factors(l, k * rad)?;
    let pref = wave_prefactor(l, mu.m, k);
    let mut out = [Complex64::new(0.0, 0.0); 3];
    for i in 0..3 {
        out[i] = match mu.pol {
            Polarization::M => pref * jl * (pi * that[i] - tau * phat[i]),
            Polarization::N => {
                pref * ((l * (l + 1)) as f64 * jx * y * rhat[i] + dl * (tau * that[i] + pi * phat[i]))
            }
        };
    }
    Ok(out)
}

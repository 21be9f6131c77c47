use num_complex::Complex64;

use crate::{Error, Result};

/// Below this modulus the power series is used directly.
const SERIES_RADIUS: f64 = 0.5;
/// sin/cos of arguments with larger imaginary part overflow.
const MAX_IMAG: f64 = 700.0;
const RESCALE_AT: f64 = 1e200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    J,
    H,
}

/// Spherical Bessel function j_l(x) for complex argument.
pub fn spherical_bessel_j(l: usize, x: Complex64) -> Result<Complex64> {
    Ok(spherical_bessel_j_all(l, x)?[l])
}

/// j_0(x), …, j_lmax(x).
pub fn spherical_bessel_j_all(lmax: usize, x: Complex64) -> Result<Vec<Complex64>> {
    check_arg(x)?;
    let ax = x.norm();
    let mut out = vec![Complex64::new(0.0, 0.0); lmax + 1];
    if ax == 0.0 {
        out[0] = Complex64::new(1.0, 0.0);
        return Ok(out);
    }
    if ax < SERIES_RADIUS {
        for (l, v) in out.iter_mut().enumerate() {
            *v = series(l, x);
        }
        return Ok(out);
    }
    let (s, c) = (x.sin(), x.cos());
    let j0 = s / x;
    let j1 = s / (x * x) - c / x;
    if (lmax as f64) < ax {
        out[0] = j0;
        if lmax >= 1 {
            out[1] = j1;
        }
        for l in 1..lmax {
            out[l + 1] = (2 * l + 1) as f64 / x * out[l] - out[l - 1];
        }
        return Ok(out);
    }
    // Miller's downward recurrence, normalised against j_0 or j_1.
    let start = lmax + 20 + ax.ceil() as usize;
    let mut above = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1e-30, 0.0);
    for n in (1..=start).rev() {
        if n <= lmax {
            out[n] = cur;
        }
        let below = (2 * n + 1) as f64 / x * cur - above;
        above = cur;
        cur = below;
        if cur.norm() > RESCALE_AT {
            let f = 1.0 / RESCALE_AT;
            cur *= f;
            above *= f;
            for v in out.iter_mut().skip(n.min(lmax + 1)) {
                *v *= f;
            }
        }
    }
    out[0] = cur;
    let scale = if lmax == 0 || out[0].norm() >= out[1].norm() {
        j0 / out[0]
    } else {
        j1 / out[1]
    };
    for v in out.iter_mut() {
        *v *= scale;
    }
    Ok(out)
}

/// y_0(x), …, y_lmax(x) for real positive x by upward recurrence.
pub fn spherical_bessel_y_all(lmax: usize, x: f64) -> Result<Vec<f64>> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "spherical y_l requires real x > 0, got {x}"
        )));
    }
    let mut out = vec![0.0; lmax + 1];
    out[0] = -x.cos() / x;
    if lmax >= 1 {
        out[1] = -x.cos() / (x * x) - x.sin() / x;
    }
    for l in 1..lmax {
        out[l + 1] = (2 * l + 1) as f64 / x * out[l] - out[l - 1];
    }
    Ok(out)
}

/// Spherical Hankel function of the first kind h_l(x) = j_l(x) + i y_l(x).
pub fn spherical_hankel1(l: usize, x: f64) -> Result<Complex64> {
    Ok(spherical_hankel1_all(l, x)?[l])
}

pub fn spherical_hankel1_all(lmax: usize, x: f64) -> Result<Vec<Complex64>> {
    let y = spherical_bessel_y_all(lmax, x)?;
    let j = spherical_bessel_j_all(lmax, Complex64::new(x, 0.0))?;
    Ok(j.iter()
        .zip(&y)
        .map(|(j, y)| Complex64::new(j.re, *y))
        .collect())
}

/// d/dx [x z_l(x)] = x z_{l-1}(x) - l z_l(x).
pub fn riccati_derivative(kind: BesselKind, l: usize, x: Complex64) -> Result<Complex64> {
    match kind {
        BesselKind::J => {
            check_arg(x)?;
            if l == 0 {
                return Ok(x.cos());
            }
            let j = spherical_bessel_j_all(l, x)?;
            Ok(x * j[l - 1] - l as f64 * j[l])
        }
        BesselKind::H => {
            if x.im != 0.0 {
                return Err(Error::InvalidArgument(
                    "Hankel argument must be real".into(),
                ));
            }
            if l == 0 {
                // x h_0(x) = -i e^{ix}
                if !(x.re > 0.0) {
                    return Err(Error::InvalidArgument(format!(
                        "Hankel argument must be positive, got {}",
                        x.re
                    )));
                }
                return Ok(Complex64::new(0.0, x.re).exp());
            }
            let h = spherical_hankel1_all(l, x.re)?;
            Ok(x * h[l - 1] - l as f64 * h[l])
        }
    }
}

fn check_arg(x: Complex64) -> Result<()> {
    if !x.re.is_finite() || !x.im.is_finite() {
        return Err(Error::OutOfRange(format!("non-finite argument {x}")));
    }
    if x.im.abs() > MAX_IMAG {
        return Err(Error::OutOfRange(format!(
            "|Im x| = {} exceeds {MAX_IMAG}",
            x.im.abs()
        )));
    }
    Ok(())
}

fn series(l: usize, x: Complex64) -> Complex64 {
    let mut pref = Complex64::new(1.0, 0.0);
    for i in 1..=l {
        pref *= x / (2 * i + 1) as f64;
    }
    let z = -x * x / 2.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..60 {
        term *= z / (k * (2 * l + 2 * k + 1)) as f64;
        sum += term;
        if term.norm() < 1e-18 * sum.norm() {
            break;
        }
    }
    pref * sum
}

use num_complex::Complex64;

use super::{CMatrix, Truncation};
use crate::constants::C;
use crate::specfun::{spherical_bessel_j_all, spherical_bessel_y_all, spherical_hankel1_all, wigner3j};
use crate::{Error, Result};

/// a(l, m) = m/(l(l+1)).
pub fn a_coeff(l: usize, m: i32) -> f64 {
    m as f64 / (l * (l + 1)) as f64
}

/// b(l, m) = (1/(l+1))·√(l(l+2)(l−m+1)(l+m+1)/((2l+1)(2l+3))).
pub fn b_coeff(l: usize, m: i32) -> f64 {
    let l = l as f64;
    let m = m as f64;
    let num = l * (l + 2.0) * (l - m + 1.0) * (l + m + 1.0);
    if num <= 0.0 {
        return 0.0;
    }
    (num / ((2.0 * l + 1.0) * (2.0 * l + 3.0))).sqrt() / (l + 1.0)
}

/// Generator of infinitesimal translations along z, p_z = −∂_d V(d)|_{d=0}.
///
/// Rows are indexed by (P, l, m), columns by (P', l', m'). The M↔N block is
/// `−(ω/c)·(−i a(l,m))`, the l ↔ l±1 block carries the b coefficients.
pub fn p_z_matrix(trunc: Truncation, omega: f64) -> CMatrix {
    let k = omega / C;
    let n = trunc.len();
    let mut p = CMatrix::zeros(n, n);
    for (i, mu) in trunc.indices().enumerate() {
        for (j, nu) in trunc.indices().enumerate() {
            if mu.m != nu.m {
                continue;
            }
            let mut v = Complex64::new(0.0, 0.0);
            if mu.pol != nu.pol && mu.l == nu.l {
                v += Complex64::new(0.0, -a_coeff(mu.l, mu.m));
            }
            if mu.pol == nu.pol {
                if nu.l == mu.l + 1 {
                    v -= b_coeff(mu.l, mu.m);
                }
                if nu.l + 1 == mu.l {
                    v += b_coeff(nu.l, mu.m);
                }
            }
            p[(i, j)] = -k * v;
        }
    }
    p
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadialKind {
    /// j_ν: regular translation.
    Regular,
    /// h_ν: outgoing translation.
    Outgoing,
    /// y_ν: the singular part, U = V + iY.
    Singular,
}

/// Regular translation matrix V(d) along +z. Rows are (P', l', m),
/// columns (P, l, m). Any real d is accepted.
pub fn regular_translation_matrix(d: f64, omega: f64, trunc: Truncation) -> Result<CMatrix> {
    translation_matrix_with(RadialKind::Regular, d, omega, trunc)
}

/// Outgoing translation matrix U(d), d > 0.
pub fn outgoing_translation_matrix(d: f64, omega: f64, trunc: Truncation) -> Result<CMatrix> {
    translation_matrix_with(RadialKind::Outgoing, d, omega, trunc)
}

pub fn translation_matrix_with(
    kind: RadialKind,
    d: f64,
    omega: f64,
    trunc: Truncation,
) -> Result<CMatrix> {
    if !(omega > 0.0) {
        return Err(Error::InvalidArgument(format!("omega must be positive, got {omega}")));
    }
    if kind != RadialKind::Regular && !(d > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "outgoing translation requires d > 0, got {d}"
        )));
    }
    let k = omega / C;
    let x = d * k;
    let nu_max = 2 * trunc.l_max;
    let z: Vec<Complex64> = match kind {
        RadialKind::Regular => spherical_bessel_j_all(nu_max, Complex64::new(x, 0.0))?,
        RadialKind::Outgoing => spherical_hankel1_all(nu_max, x)?,
        RadialKind::Singular => spherical_bessel_y_all(nu_max, x)?
            .into_iter()
            .map(|v| Complex64::new(v, 0.0))
            .collect(),
    };
    let n = trunc.len();
    let mut u = CMatrix::zeros(n, n);
    for (a, row) in trunc.indices().enumerate() {
        for (b, col) in trunc.indices().enumerate() {
            if row.m != col.m {
                continue;
            }
            let (lp, l, m) = (row.l as i32, col.l as i32, col.m);
            let same = row.pol == col.pol;
            let norm = (((2 * l + 1) * (2 * lp + 1)) as f64 / ((l * (l + 1) * lp * (lp + 1)) as f64)).sqrt();
            let sign = if m.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            let mut s = Complex64::new(0.0, 0.0);
            for nu in (l - lp).abs()..=(l + lp) {
                let w0 = wigner3j(l, lp, nu, 0, 0, 0);
                if w0 == 0.0 {
                    continue;
                }
                let w = wigner3j(l, lp, nu, m, -m, 0);
                if w == 0.0 {
                    continue;
                }
                let fac = if same {
                    Complex64::new((l * (l + 1) + lp * (lp + 1) - nu * (nu + 1)) as f64 / 2.0, 0.0)
                } else {
                    Complex64::new(0.0, -(m as f64) * x)
                };
                let a = sign * i_pow(l - lp + nu) * (2 * nu + 1) as f64 * norm * w0 * w * z[nu as usize];
                s += fac * a;
            }
            u[(a, b)] = s;
        }
    }
    Ok(u)
}

fn i_pow(n: i32) -> Complex64 {
    match n.rem_euclid(4) {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

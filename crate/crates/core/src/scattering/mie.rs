use num_complex::Complex64;

use super::{TMatrixBlock, TMatrixProvider};
use crate::constants::C;
use crate::materials::{DielectricModel, Polarization, Resonance};
use crate::specfun::{spherical_bessel_j_all, spherical_hankel1_all};
use crate::waves::Truncation;
use crate::{Error, Result};

/// Mie coefficient T^P_l of a homogeneous sphere with size parameter x = ωR/c.
pub fn mie_coefficient(pol: Polarization, l: usize, x: f64, eps: Complex64, mu: Complex64) -> Result<Complex64> {
    let (eps, mu) = match pol {
        Polarization::M => (eps, mu),
        Polarization::N => (mu, eps),
    };
    let xt = (eps * mu).sqrt() * x;
    let j = spherical_bessel_j_all(l, Complex64::new(x, 0.0))?;
    let h = spherical_hankel1_all(l, x)?;
    let jt = spherical_bessel_j_all(l, xt)?;
    let dj = x * j[l - 1] - l as f64 * j[l];
    let dh = x * h[l - 1] - l as f64 * h[l];
    let djt = xt * jt[l - 1] - l as f64 * jt[l];
    let num = mu * jt[l] * dj - j[l] * djt;
    let den = mu * jt[l] * dh - h[l] * djt;
    Ok(-num / den)
}

/// Diagonal, m-independent T-matrix of a homogeneous sphere.
pub fn mie_t_matrix(radius: f64, eps: Complex64, mu: Complex64, omega: f64, trunc: Truncation) -> Result<TMatrixBlock> {
    if !(radius > 0.0) || !(omega > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "mie requires R > 0 and omega > 0, got {radius}, {omega}"
        )));
    }
    let x = omega * radius / C;
    let mut t = TMatrixBlock::zeros(omega, trunc);
    let mut cache = Vec::new();
    for l in 1..=trunc.l_max {
        cache.push((
            mie_coefficient(Polarization::M, l, x, eps, mu)?,
            mie_coefficient(Polarization::N, l, x, eps, mu)?,
        ));
    }
    for (i, mu_idx) in trunc.indices().enumerate() {
        let (tm, tn) = cache[mu_idx.l - 1];
        t.entries[(i, i)] = match mu_idx.pol {
            Polarization::M => tm,
            Polarization::N => tn,
        };
    }
    Ok(t)
}

#[derive(Debug, Clone)]
pub struct MieSphere {
    pub radius: f64,
    pub material: DielectricModel,
    pub trunc: Truncation,
}

impl TMatrixProvider for MieSphere {
    fn truncation(&self) -> Truncation {
        self.trunc
    }

    fn t_matrix(&self, omega: f64) -> Result<TMatrixBlock> {
        mie_t_matrix(
            self.radius,
            self.material.permittivity(omega),
            self.material.permeability(),
            omega,
            self.trunc,
        )
    }

    fn resonances(&self) -> Vec<Resonance> {
        let mut v = self.material.resonances();
        v.extend(self.material.shifted_resonances(1.0 / 3.0));
        v
    }

    fn size(&self) -> Option<f64> {
        Some(self.radius)
    }
}

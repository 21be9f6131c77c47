use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{TMatrixBlock, TMatrixProvider};
use crate::constants::C;
use crate::materials::{DielectricModel, Polarization, Resonance};
use crate::specfun::{gauss_legendre_on, AngularTable};
use crate::waves::{wave_prefactor, Truncation};
use crate::{Error, Result};

use crate::waves::vsw_radial as radial_factors;

/// Sphere of radius R with permittivity `lower` for z < 0 and `upper` for z > 0.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JanusGeometry {
    pub radius: f64,
    pub lower: DielectricModel,
    pub upper: DielectricModel,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BornQuadrature {
    /// Gauss–Legendre nodes on [0, R].
    pub radial: usize,
    /// Gauss–Legendre nodes in cosθ, split evenly between the hemispheres.
    pub polar: usize,
    /// Trapezoid nodes in φ.
    pub azimuthal: usize,
    /// Allowed relative change when the radial order is raised by 8.
    pub tol: f64,
}

impl Default for BornQuadrature {
    fn default() -> Self {
        BornQuadrature { radial: 16, polar: 32, azimuthal: 64, tol: 1e-6 }
    }
}

impl BornQuadrature {
    fn validate(&self) -> Result<()> {
        if self.radial < 16 || self.polar < 32 || self.azimuthal < 64 || self.polar % 2 == 1 {
            return Err(Error::InvalidArgument(format!(
                "Born quadrature orders must be at least (16, 32, 64) with even polar order, got {self:?}"
            )));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument("Born quadrature tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// Index of (l, m) in the scalar list l = 1..=l_max, m = −l..=l.
fn lm_index(l: usize, m: i32) -> usize {
    l * l - 1 + (m + l as i32) as usize
}

/// Solid-angle integrals over one hemisphere for all pairs of scalar
/// harmonics a, b: S1 = ∫(π̃_aπ̃_b + τ̃_aτ̃_b), S2 = ∫(π̃_aτ̃_b − τ̃_aπ̃_b),
/// S3 = ∫Y_aY_b, with π̃ = imY/sinθ and τ̃ = ∂_θY.
#[derive(Debug, Clone)]
struct HemisphereIntegrals {
    n: usize,
    s1: Vec<Complex64>,
    s2: Vec<Complex64>,
    s3: Vec<Complex64>,
}

impl HemisphereIntegrals {
    fn new(l_max: usize, upper: bool, polar: usize, azimuthal: usize) -> Self {
        let n = l_max * (l_max + 2);
        let (a, b) = if upper { (0.0, 1.0) } else { (-1.0, 0.0) };
        let (cts, wts) = gauss_legendre_on(polar, a, b);
        let mut r1 = vec![0.0; n * n];
        let mut r2 = vec![0.0; n * n];
        let mut r3 = vec![0.0; n * n];
        let mut y = vec![0.0; n];
        let mut p = vec![0.0; n];
        let mut t = vec![0.0; n];
        for (&ct, &w) in cts.iter().zip(&wts) {
            let tab = AngularTable::new(l_max, ct);
            for l in 1..=l_max {
                for m in -(l as i32)..=l as i32 {
                    let am = m.unsigned_abs() as usize;
                    let cm = if m < 0 && am % 2 == 1 { -1.0 } else { 1.0 };
                    let k = lm_index(l, m);
                    y[k] = cm * tab.y(l, am);
                    p[k] = cm * m as f64 * tab.y_over_sin(l, am);
                    t[k] = cm * tab.dy(l, am);
                }
            }
            for i in 0..n {
                for j in 0..n {
                    let k = i * n + j;
                    r1[k] += w * (t[i] * t[j] - p[i] * p[j]);
                    r2[k] += w * (p[i] * t[j] - t[i] * p[j]);
                    r3[k] += w * y[i] * y[j];
                }
            }
        }
        let ms: Vec<i32> = (1..=l_max).flat_map(|l| -(l as i32)..=l as i32).collect();
        let mut s1 = vec![Complex64::new(0.0, 0.0); n * n];
        let mut s2 = s1.clone();
        let mut s3 = s1.clone();
        for i in 0..n {
            for j in 0..n {
                let phi = azimuthal_sum(ms[i] + ms[j], azimuthal);
                let k = i * n + j;
                s1[k] = Complex64::new(phi * r1[k], 0.0);
                s2[k] = Complex64::new(0.0, 1.0) * phi * r2[k];
                s3[k] = Complex64::new(phi * r3[k], 0.0);
            }
        }
        HemisphereIntegrals { n, s1, s2, s3 }
    }

    fn at(&self, a: usize, b: usize) -> (Complex64, Complex64, Complex64) {
        let k = a * self.n + b;
        (self.s1[k], self.s2[k], self.s3[k])
    }
}

/// Trapezoid sum of e^{iqφ} over `n` equispaced nodes: exactly 2π when q is a
/// multiple of n, otherwise exactly 0.
fn azimuthal_sum(q: i32, n: usize) -> f64 {
    if q.rem_euclid(n as i32) == 0 {
        2.0 * PI
    } else {
        0.0
    }
}

/// Radial moments ∫₀^R r² f_l(kr) g_l'(kr) dr for f, g ∈ {j, j/x, (xj)'/x}.
struct RadialMoments {
    n: usize,
    jj: Vec<f64>,
    jd: Vec<f64>,
    dd: Vec<f64>,
    xx: Vec<f64>,
}

impl RadialMoments {
    fn new(l_max: usize, k: f64, radius: f64, order: usize) -> Result<Self> {
        let n = l_max;
        let mut m = RadialMoments {
            n,
            jj: vec![0.0; n * n],
            jd: vec![0.0; n * n],
            dd: vec![0.0; n * n],
            xx: vec![0.0; n * n],
        };
        let (rs, ws) = gauss_legendre_on(order, 0.0, radius);
        let mut f = vec![(0.0, 0.0, 0.0); n];
        for (&r, &w) in rs.iter().zip(&ws) {
            for l in 1..=l_max {
                f[l - 1] = radial_factors(l, k * r)?;
            }
            let w = w * r * r;
            for a in 0..n {
                for b in 0..n {
                    let i = a * n + b;
                    m.jj[i] += w * f[a].0 * f[b].0;
                    m.jd[i] += w * f[a].0 * f[b].2;
                    m.dd[i] += w * f[a].2 * f[b].2;
                    m.xx[i] += w * f[a].1 * f[b].1;
                }
            }
        }
        Ok(m)
    }

    fn at(&self, la: usize, lb: usize) -> (f64, f64, f64, f64, f64) {
        let i = (la - 1) * self.n + (lb - 1);
        let t = (lb - 1) * self.n + (la - 1);
        (self.jj[i], self.jd[i], self.jd[t], self.dd[i], self.xx[i])
    }
}

/// Born-approximation T-matrix of a janus sphere. Angular integrals are
/// frequency independent and computed once.
#[derive(Debug, Clone)]
pub struct BornJanus {
    pub geometry: JanusGeometry,
    pub trunc: Truncation,
    pub quad: BornQuadrature,
    lower: HemisphereIntegrals,
    upper: HemisphereIntegrals,
}

impl BornJanus {
    pub fn new(geometry: JanusGeometry, trunc: Truncation, quad: BornQuadrature) -> Result<Self> {
        quad.validate()?;
        if !(geometry.radius > 0.0) {
            return Err(Error::InvalidArgument(format!("janus radius must be positive, got {}", geometry.radius)));
        }
        geometry.lower.validate()?;
        geometry.upper.validate()?;
        let half = quad.polar / 2;
        Ok(BornJanus {
            lower: HemisphereIntegrals::new(trunc.l_max, false, half, quad.azimuthal),
            upper: HemisphereIntegrals::new(trunc.l_max, true, half, quad.azimuthal),
            geometry,
            trunc,
            quad,
        })
    }

    fn assemble(&self, omega: f64, radial: &RadialMoments) -> TMatrixBlock {
        let k = omega / C;
        let chi = [
            self.geometry.lower.permittivity(omega) - 1.0,
            self.geometry.upper.permittivity(omega) - 1.0,
        ];
        let mut t = TMatrixBlock::zeros(omega, self.trunc);
        for (i, row) in self.trunc.indices().enumerate() {
            let a = lm_index(row.l, -row.m);
            for (j, col) in self.trunc.indices().enumerate() {
                let b = lm_index(col.l, col.m);
                let (jj, jd, dj, dd, xx) = radial.at(row.l, col.l);
                let ll = (row.l * (row.l + 1) * col.l * (col.l + 1)) as f64;
                let mut s = Complex64::new(0.0, 0.0);
                for (h, x) in [&self.lower, &self.upper].iter().zip(chi) {
                    let (s1, s2, s3) = h.at(a, b);
                    let v = match (row.pol, col.pol) {
                        (Polarization::M, Polarization::M) => jj * s1,
                        (Polarization::M, Polarization::N) => jd * s2,
                        (Polarization::N, Polarization::M) => -dj * s2,
                        (Polarization::N, Polarization::N) => ll * xx * s3 + dd * s1,
                    };
                    s += x * v;
                }
                let pref = Complex64::new(0.0, k * k)
                    * wave_prefactor(row.l, -row.m, k)
                    * wave_prefactor(col.l, col.m, k);
                t.entries[(i, j)] = pref * s;
            }
        }
        t
    }
}

impl TMatrixProvider for BornJanus {
    fn truncation(&self) -> Truncation {
        self.trunc
    }

    fn t_matrix(&self, omega: f64) -> Result<TMatrixBlock> {
        if !(omega > 0.0) {
            return Err(Error::InvalidArgument(format!("omega must be positive, got {omega}")));
        }
        let k = omega / C;
        let lo = self.assemble(omega, &RadialMoments::new(self.trunc.l_max, k, self.geometry.radius, self.quad.radial)?);
        let hi = self.assemble(
            omega,
            &RadialMoments::new(self.trunc.l_max, k, self.geometry.radius, self.quad.radial + 8)?,
        );
        let scale = hi.entries.iter().map(|v| v.norm()).fold(0.0, f64::max);
        if scale > 0.0 {
            let change = (&hi.entries - &lo.entries).iter().map(|v| v.norm()).fold(0.0, f64::max) / scale;
            if change > self.quad.tol {
                return Err(Error::QuadratureOrder { change, tol: self.quad.tol });
            }
        }
        Ok(hi)
    }

    fn resonances(&self) -> Vec<Resonance> {
        let mut v = self.geometry.lower.resonances();
        v.extend(self.geometry.upper.resonances());
        v
    }

    fn size(&self) -> Option<f64> {
        Some(self.geometry.radius)
    }
}

/// One-shot Born T-matrix of a janus sphere at frequency ω.
pub fn born_t_matrix(
    geometry: &JanusGeometry,
    omega: f64,
    trunc: Truncation,
    quad: BornQuadrature,
) -> Result<TMatrixBlock> {
    BornJanus::new(geometry.clone(), trunc, quad)?.t_matrix(omega)
}

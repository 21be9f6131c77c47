use std::f64::consts::PI;

use num_complex::Complex64;

use super::{TMatrixBlock, TMatrixProvider};
use crate::constants::C;
use crate::materials::{Polarization, Resonance};
use crate::polarizability::{PolarizabilityProvider, PolarizabilityTensor};
use crate::waves::{evaluate_regular_wave, PartialWaveIndex, Truncation};
use crate::Result;

/// Dipole-limit T-matrix: T^{NN}_{1m,1m'} = 4π i k² E_{N1,−m}(0)·α·E_{N1m'}(0),
/// the point-particle form of the volume integral. Truncated at l_max = 1.
pub fn dipole_t_from_polarizability(alpha: &PolarizabilityTensor, omega: f64) -> Result<TMatrixBlock> {
    let trunc = Truncation::new(1)?;
    let k = omega / C;
    let mut t = TMatrixBlock::zeros(omega, trunc);
    let mut fields = Vec::with_capacity(3);
    for m in -1..=1 {
        let mu = PartialWaveIndex::new(Polarization::N, 1, m)?;
        fields.push((mu, evaluate_regular_wave(mu, omega, [0.0; 3])?));
    }
    let pref = Complex64::new(0.0, 4.0 * PI * k * k);
    for (row, _) in &fields {
        let (_, e_row) = fields.iter().find(|(mu, _)| *mu == row.sigma()).expect("sigma partner");
        for (col, e_col) in &fields {
            let mut s = Complex64::new(0.0, 0.0);
            for (i, a) in e_row.iter().enumerate() {
                for (j, b) in e_col.iter().enumerate() {
                    s += a * alpha.get(i, j) * b;
                }
            }
            t.set(*row, *col, pref * s);
        }
    }
    Ok(t)
}

/// T-matrix provider wrapping a polarizability provider.
pub struct DipoleParticle<P> {
    pub alpha: P,
}

impl<P: PolarizabilityProvider> TMatrixProvider for DipoleParticle<P> {
    fn truncation(&self) -> Truncation {
        Truncation { l_max: 1 }
    }

    fn t_matrix(&self, omega: f64) -> Result<TMatrixBlock> {
        dipole_t_from_polarizability(&self.alpha.tensor(omega)?, omega)
    }

    fn resonances(&self) -> Vec<Resonance> {
        self.alpha.resonances()
    }

    fn size(&self) -> Option<f64> {
        self.alpha.size()
    }
}

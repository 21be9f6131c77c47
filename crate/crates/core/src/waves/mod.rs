//! Partial-wave bookkeeping, translation along z and regular vector spherical
//! waves.
//!
//! Matrices over the truncated basis use one canonical order: all M waves
//! first, then all N waves; inside each block l ascends, and inside each l the
//! index m runs from −l to l.

mod translation;
mod vsw;

pub use translation::{
    a_coeff, b_coeff, outgoing_translation_matrix, p_z_matrix, regular_translation_matrix,
    translation_matrix_with, RadialKind,
};
pub use vsw::{evaluate_regular_wave, wave_prefactor};
pub(crate) use vsw::radial_factors as vsw_radial;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use crate::materials::Polarization;
use crate::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PartialWaveIndex {
    pub pol: Polarization,
    pub l: usize,
    pub m: i32,
}

impl PartialWaveIndex {
    pub fn new(pol: Polarization, l: usize, m: i32) -> Result<Self> {
        if l == 0 || m.unsigned_abs() as usize > l {
            return Err(Error::InvalidArgument(format!(
                "invalid partial wave index l={l}, m={m}"
            )));
        }
        Ok(PartialWaveIndex { pol, l, m })
    }

    /// σ(μ): m → −m.
    pub fn sigma(self) -> Self {
        PartialWaveIndex { m: -self.m, ..self }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub l_max: usize,
}

impl Truncation {
    pub fn new(l_max: usize) -> Result<Self> {
        if l_max == 0 {
            return Err(Error::InvalidArgument("l_max must be >= 1".into()));
        }
        Ok(Truncation { l_max })
    }

    fn half(&self) -> usize {
        self.l_max * (self.l_max + 2)
    }

    pub fn len(&self) -> usize {
        2 * self.half()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, mu: PartialWaveIndex) -> Option<usize> {
        if mu.l == 0 || mu.l > self.l_max || mu.m.unsigned_abs() as usize > mu.l {
            return None;
        }
        let off = match mu.pol {
            Polarization::M => 0,
            Polarization::N => self.half(),
        };
        Some(off + mu.l * mu.l - 1 + (mu.m + mu.l as i32) as usize)
    }

    pub fn index_at(&self, i: usize) -> PartialWaveIndex {
        assert!(i < self.len(), "index {i} outside truncation");
        let (pol, r) = if i < self.half() {
            (Polarization::M, i)
        } else {
            (Polarization::N, i - self.half())
        };
        let l = ((r + 1) as f64).sqrt().floor() as usize;
        let l = if (l + 1) * (l + 1) <= r + 1 { l + 1 } else { l };
        let m = r as i32 - (l * l - 1) as i32 - l as i32;
        PartialWaveIndex { pol, l, m }
    }

    pub fn indices(&self) -> impl Iterator<Item = PartialWaveIndex> + '_ {
        (0..self.len()).map(move |i| self.index_at(i))
    }
}

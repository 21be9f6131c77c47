//! T-matrices: Mie spheres, dipole-limit particles and Born-approximation
//! janus spheres.
//!
//! Elements follow T_{μμ'} = i ∫ E^reg_{σ(μ)} · V · E^reg_{μ'} d³r with
//! V = (ω/c)²(ε − 1), which makes T symmetric under T_{μμ'} = T_{σ(μ')σ(μ)}.

mod born;
mod dipole;
mod mie;

pub use born::{born_t_matrix, BornJanus, BornQuadrature, JanusGeometry};
pub use dipole::{dipole_t_from_polarizability, DipoleParticle};
pub use mie::{mie_coefficient, mie_t_matrix, MieSphere};

use num_complex::Complex64;

use crate::materials::Resonance;
use crate::waves::{CMatrix, PartialWaveIndex, Truncation};
use crate::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct TMatrixBlock {
    pub omega: f64,
    pub trunc: Truncation,
    pub entries: CMatrix,
}

impl TMatrixBlock {
    pub fn zeros(omega: f64, trunc: Truncation) -> Self {
        let n = trunc.len();
        TMatrixBlock { omega, trunc, entries: CMatrix::zeros(n, n) }
    }

    /// T_{μν}; zero outside the truncation.
    pub fn get(&self, mu: PartialWaveIndex, nu: PartialWaveIndex) -> Complex64 {
        match (self.trunc.index_of(mu), self.trunc.index_of(nu)) {
            (Some(i), Some(j)) => self.entries[(i, j)],
            _ => Complex64::new(0.0, 0.0),
        }
    }

    pub fn set(&mut self, mu: PartialWaveIndex, nu: PartialWaveIndex, v: Complex64) {
        let i = self.trunc.index_of(mu).expect("row outside truncation");
        let j = self.trunc.index_of(nu).expect("column outside truncation");
        self.entries[(i, j)] = v;
    }
}

/// Largest |T_{μν} − T_{σ(ν)σ(μ)}| relative to the largest entry.
pub fn check_t_symmetry(t: &TMatrixBlock) -> f64 {
    let scale = t.entries.iter().map(|v| v.norm()).fold(0.0, f64::max);
    if scale == 0.0 {
        return 0.0;
    }
    let mut worst: f64 = 0.0;
    for (i, mu) in t.trunc.indices().enumerate() {
        for (j, nu) in t.trunc.indices().enumerate() {
            let a = t.entries[(i, j)];
            let b = t.get(nu.sigma(), mu.sigma());
            worst = worst.max((a - b).norm());
        }
    }
    worst / scale
}

/// Frequency-dependent T-matrix source.
pub trait TMatrixProvider: Sync {
    fn truncation(&self) -> Truncation;

    fn t_matrix(&self, omega: f64) -> Result<TMatrixBlock>;

    /// Frequencies where the response peaks, used to seed quadrature panels.
    fn resonances(&self) -> Vec<Resonance> {
        Vec::new()
    }

    /// Largest linear dimension, for near-field validity flags.
    fn size(&self) -> Option<f64> {
        None
    }
}

/// Adapts a closure into a provider.
pub struct FnProvider<F> {
    pub trunc: Truncation,
    pub f: F,
}

impl<F> TMatrixProvider for FnProvider<F>
where
    F: Fn(f64) -> Result<TMatrixBlock> + Sync,
{
    fn truncation(&self) -> Truncation {
        self.trunc
    }

    fn t_matrix(&self, omega: f64) -> Result<TMatrixBlock> {
        (self.f)(omega)
    }
}

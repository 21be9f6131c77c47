//! Special functions: spherical Bessel/Hankel functions, associated Legendre
//! functions, Wigner 3j symbols and Bose–Einstein weights.

mod bessel;
mod bose;
mod gauss;
mod legendre;
mod wigner;

pub use bessel::{
    riccati_derivative, spherical_bessel_j, spherical_bessel_j_all, spherical_bessel_y_all,
    spherical_hankel1, spherical_hankel1_all, BesselKind,
};
pub use bose::{bose_weight, bose_weight_dt, bose_weight_x, bose_weight_dt_x};
pub use gauss::{gauss_legendre, gauss_legendre_on};
pub use legendre::{assoc_legendre, harmonic_norm, AngularTable};
pub use wigner::{ln_factorial, wigner3j};

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for v in iter {
            s.add(v);
        }
        s
    }
}

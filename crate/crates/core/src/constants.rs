//! Physical constants (SI).

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380_649e-23;
/// Speed of light in vacuum, m/s.
pub const C: f64 = 2.997_924_58e8;
/// Standard gravity, m/s².
pub const G_N: f64 = 9.806_65;
/// Default particle mass density, kg/m³.
pub const DEFAULT_DENSITY: f64 = 3210.0;

/// Thermal wavelength ħc/(k_B T) in metres.
pub fn thermal_wavelength(t: f64) -> f64 {
    HBAR * C / (K_B * t)
}

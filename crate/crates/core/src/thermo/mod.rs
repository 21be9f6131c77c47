//! Frequency quadrature, Onsager heating and the additional friction model.

mod friction;
mod quadrature;

pub use friction::{additional_friction, friction_curve, heating_derivative, FrictionModel};
pub use quadrature::{adaptive_integrate, thermal_integral, Integral, QuadratureSpec, Weight};

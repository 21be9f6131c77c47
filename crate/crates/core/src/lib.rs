//! Non-equilibrium Casimir self-propulsion of anisotropic particles.
//!
//! The crate is organised bottom-up: special functions, material models,
//! vector spherical waves, T-matrices, polarizabilities, frequency quadrature
//! and finally the force formulas built on top of them.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod constants;
pub mod error;
pub mod forces;
pub mod materials;
pub mod polarizability;
pub mod scattering;
pub mod specfun;
pub mod thermo;
pub mod waves;

pub use error::{Error, Result};

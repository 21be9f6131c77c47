use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument out of supported range: {0}")]
    OutOfRange(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resonant denominator: {0}")]
    ResonantDenominator(String),
    #[error("integrand too sharp - narrow resonance detected in x = [{lo:.6e}, {hi:.6e}] (estimated error {error:.3e})")]
    QuadratureNotConverged { lo: f64, hi: f64, error: f64 },
    #[error("increase quadrature order: successive-order change {change:.3e} exceeds tolerance {tol:.1e}")]
    QuadratureOrder { change: f64, tol: f64 },
}

impl Error {
    /// True for failures originating in numerical quadrature.
    pub fn is_quadrature(&self) -> bool {
        matches!(self, Error::QuadratureNotConverged { .. } | Error::QuadratureOrder { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

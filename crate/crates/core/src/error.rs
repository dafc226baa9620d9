use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    /// Monomials (including constants) have |p| independent of the angle, so
    /// the maximum modulus set is the whole plane.
    #[error("polynomial is a monomial; its maximum modulus set is the whole plane")]
    Monomial,

    #[error("invalid targets: {0}")]
    InvalidTargets(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(
        "root finder did not converge at radius {radius} (polynomial coefficients {coeffs:?})"
    )]
    RootFinding { radius: f64, coeffs: Vec<[f64; 2]> },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Whether this error is a numerical failure rather than bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::RootFinding { .. })
    }
}

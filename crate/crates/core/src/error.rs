use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A physical or numerical input violates its domain.
    #[error("invalid {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// The conductivity integral does not converge (Re w <= 0 with diffuse scattering).
    #[error("conductivity integral does not converge for w = {w} with p = {p}")]
    NonConvergentIntegral { w: Complex64, p: f64 },

    /// The requested accuracy could not be reached; `best` carries the closest estimate.
    #[error("accuracy {tol:e} not reached: best estimate {best} with error {error_estimate:e}")]
    Accuracy {
        best: Complex64,
        error_estimate: f64,
        tol: f64,
    },

    /// The impedance denominator vanishes (plasma resonance).
    #[error("plasma resonance at omega/omega_p = {omega}: |denominator| = {magnitude:e}")]
    ResonanceSingularity { omega: f64, magnitude: f64 },

    /// The scan found more boundaries than a single existence band can have.
    #[error("ambiguous critical band: crossings at {crossings:?}")]
    AmbiguousBand { crossings: Vec<f64> },

    #[error("malformed sweep data: {0}")]
    Format(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs or the I/O.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonConvergentIntegral { .. }
                | Error::Accuracy { .. }
                | Error::ResonanceSingularity { .. }
                | Error::AmbiguousBand { .. }
        )
    }

    /// Short machine-readable tag, used in the `error` column of sweep output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidParameter { .. } => "invalid-parameter",
            Error::NonConvergentIntegral { .. } => "non-convergent",
            Error::Accuracy { .. } => "accuracy",
            Error::ResonanceSingularity { .. } => "resonance",
            Error::AmbiguousBand { .. } => "ambiguous-band",
            Error::Format(_) => "format",
            Error::Csv(_) => "csv",
            Error::Io(_) => "io",
        }
    }
}

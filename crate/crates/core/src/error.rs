use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the error identifiers written into reports, see
/// [`Error::kind`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element has zero semi-norm and cannot be inverted")]
    NullElement,

    #[error("field is null (|F.F| = {invariant:e} <= {threshold:e}); it has no spinor decomposition")]
    NullField { invariant: f64, threshold: f64 },

    #[error("field direction is antipodal to the reference axis (|1 + f.u| = {gap:e}); retry with the opposite axis")]
    DegenerateAxis { gap: f64 },

    #[error("rotors are not related by a gauge factor along the axis (off-orbit residue {residue:e})")]
    NotOnOrbit { residue: f64 },

    #[error("event ({t}, {x1}, {x2}, {x3}) lies in the singular zone of the field")]
    SingularPoint { t: f64, x1: f64, x2: f64, x3: f64 },

    #[error("unknown field `{0}`")]
    UnknownField(String),

    #[error("invalid field parameters: {0}")]
    InvalidParams(String),

    #[error("momentum is off the mass shell (E^2 - p^2 - m^2 = {defect:e})")]
    OffShell { defect: f64 },

    #[error("field does not provide second partial derivatives")]
    MissingDerivative,

    #[error("no candidate time reversal maps solutions to solutions")]
    SearchExhausted,

    #[error("domain error: {0}")]
    Domain(String),
}

impl Error {
    /// Stable identifier used in JSON reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NullElement => "NullElementError",
            Error::NullField { .. } => "NullFieldError",
            Error::DegenerateAxis { .. } => "DegenerateAxisError",
            Error::NotOnOrbit { .. } => "NotOnOrbitError",
            Error::SingularPoint { .. } => "SingularPointError",
            Error::UnknownField(_) => "UnknownFieldError",
            Error::InvalidParams(_) => "InvalidParamsError",
            Error::OffShell { .. } => "OffShellError",
            Error::MissingDerivative => "MissingDerivativeError",
            Error::SearchExhausted => "SearchExhaustedError",
            Error::Domain(_) => "DomainError",
        }
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

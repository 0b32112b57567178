use thiserror::Error;

/// Errors raised by the kernel.
///
/// Variants are grouped by whether they describe bad input (parse and
/// schema problems) or a mathematical precondition that failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("schema error at `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("lattices do not jointly span the ambient space")]
    NotFullRank,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("term order with negative effective weights requires homogeneous generators")]
    RequiresHomogeneous,
    #[error("quotient ring is not finite dimensional")]
    NotZeroDimensional,
    #[error("codimension {codim} out of range for a cone of dimension {dim}")]
    BadCodim { codim: usize, dim: usize },
    #[error("expected {expected} multiplicities, found {found}")]
    MultiplicityCountMismatch { expected: usize, found: usize },
    #[error("weighted fan is not pure")]
    NotPure,
    #[error("a monomial has an empty tropical hypersurface")]
    MonomialHypersurfaceEmpty,
    #[error("the zero ideal has no tropical variety in this setting")]
    ZeroIdeal,
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("cycles use different conventions ({left} vs {right})")]
    ConventionMismatch { left: String, right: String },
    #[error("no generic displacement vector found after {attempts} attempts")]
    GenericityExhausted { attempts: usize },
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("integer overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by the mathematics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Schema { .. })
    }

    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse { position, message: message.into() }
    }

    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema { field: field.into(), message: message.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

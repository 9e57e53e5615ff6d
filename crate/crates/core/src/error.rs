//! Error type shared by the whole crate.

use crate::lie::ValidationReport;
use crate::rational::Rational;

/// All the ways an operation in this crate can fail.
///
/// The split between [`Error::Parse`] and the remaining variants matters to
/// callers: `Parse` means the input text could not even be read as a
/// document, everything else is a semantic problem with data that parsed
/// fine.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Dimensions or shapes of operands do not line up.
    #[error("shape mismatch: {0}")]
    Shape(String),

    /// Input text is not syntactically valid (bad JSON, bad rational literal).
    #[error("parse error: {0}")]
    Parse(String),

    /// A parsed document violates the schema's semantic rules.
    #[error("invalid document: {0}")]
    Document(String),

    /// The bracket table fails antisymmetry or the Jacobi identity.
    #[error("{0}")]
    Validation(ValidationReport),

    /// A metric candidate is not positive definite; carries the first
    /// offending leading principal minor (1-based order).
    #[error("metric is not positive definite: leading principal minor {order} is {minor}")]
    NotPositiveDefinite { order: usize, minor: Rational },

    /// Name does not match any built-in catalog entry.
    #[error("unknown catalog id `{0}`")]
    UnknownCatalog(String),

    /// Two vectors that were supposed to span a plane are linearly dependent.
    #[error("degenerate plane: the given vectors do not span a 2-plane")]
    DegeneratePlane,
}

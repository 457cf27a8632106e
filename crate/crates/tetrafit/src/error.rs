//! Error type shared by the geometry kernel and the construction layer.

use thiserror::Error;

/// Failure modes for geometric inputs and queries.
#[derive(Debug, Error)]
pub enum GeomError {
    /// A mesh violated a structural invariant (indexing, closedness, Euler
    /// count, convexity, orientation).
    #[error("malformed polyhedron: {0}")]
    Malformed(String),

    /// A face deviated from its best-fit plane by more than the tolerance.
    #[error("face {face} is non-planar (residual {residual:.3e})")]
    NonPlanarFace { face: usize, residual: f64 },

    /// Scale factors must be strictly positive.
    #[error("invalid scale {0}: must be > 0")]
    InvalidScale(f64),

    /// A slicing plane missed the interior of the solid.
    #[error("plane does not intersect the interior of the polyhedron")]
    NoSection,

    /// Catch-all for argument preconditions (empty point sets, non-positive
    /// edges, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl GeomError {
    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Self::InvalidInput(msg.into())
    }

    pub fn malformed(msg: impl Into<String>) -> Self {
        Self::Malformed(msg.into())
    }
}

//! Error type shared by all modules.

use thiserror::Error;

/// Errors produced by the geometry and optimization routines.
///
/// Residuals and coefficients are reported as `f64` regardless of the scalar
/// the computation ran at.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on plain input data was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two inputs that must be distinct coincide.
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// The frame logarithm sits too close to a half-turn to pick a branch.
    #[error("frame logarithm branch is ambiguous: rotation angle within {0:.3e} of a half-turn")]
    BranchAmbiguity(f64),

    /// An operation requiring a closed edge path received an open one.
    #[error("edge path does not close: residual {0:.3e}")]
    NotClosed(f64),

    /// A length vector failed the closure test for polygon membership.
    #[error("length vector is not on the closure manifold: residual {0:.3e}")]
    NotOnManifold(f64),

    /// The closed path is not a convex embedded polygon.
    #[error("not a convex polygon: {0}")]
    NotConvex(String),

    /// The dual matrix lost rank three; valid convex data cannot do this.
    #[error("degenerate configuration: dual matrix singular-value ratio {0:.3e}")]
    DegenerateConfiguration(f64),

    /// Newton projection onto the closure manifold did not converge.
    #[error("projection failed: residual {residual:.3e} after {iterations} iterations")]
    ProjectionFailed { iterations: usize, residual: f64 },

    /// Newton projection drove an edge length non-positive.
    #[error("projection left the domain: edge {0} driven non-positive")]
    LeftDomain(usize),

    /// Manifold sampling kept failing even after shrinking the step.
    #[error("manifold sampling failed after {0} step halvings")]
    SamplingFailed(usize),

    /// A boundary dual decomposed with a non-positive coefficient.
    #[error("convexity violation at collapsed edge {index}: decomposition a = {a:.3e}, b = {b:.3e}")]
    ConvexityViolation { index: usize, a: f64, b: f64 },

    /// Duals that must lie in a common plane do not.
    #[error("duals are not coplanar: decomposition residual {0:.3e}")]
    NotCoplanar(f64),

    /// The least-squares plane normal is not timelike.
    #[error("no inscribed circle: dual plane normal is not timelike")]
    NoInscribedCircle,

    /// A line search or iteration stalled below floating-point resolution.
    #[error("numerical stall: {0}")]
    NumericalStall(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

//! Scalar abstraction for the geometry kernels.
//!
//! Everything in this crate is generic over [`Real`], a floating-point
//! scalar. The associated constants are the crate's tolerance table: every
//! quadric-membership test, closure threshold and rank cutoff reads its value
//! from here, so instantiating the geometry at a different precision rescales
//! all tolerances in one place.

use nalgebra::RealField;
use num_traits::FloatConst;

/// Floating-point scalar type (`f64` for production use, `f32` exercised by
/// the test suite at correspondingly looser tolerances).
pub trait Real: RealField + FloatConst + Copy {
    /// Relative tolerance for membership of the quadrics x·x = ∓1.
    const QUADRIC_TOL: Self;
    /// Absolute tolerance for geometric identities (duality, incidence).
    const GEOM_TOL: Self;
    /// Support-function tolerance: vertices must satisfy x·e* ≤ this.
    const INTERIOR_TOL: Self;
    /// Closure-residual threshold for accepting a length vector as a polygon.
    const CLOSURE_TOL: Self;
    /// Target residual for the Newton projection onto the closure manifold.
    const PROJECT_TOL: Self;
    /// Residual norm above which the Newton projection refuses to start.
    const PROJECT_BASIN: Self;
    /// Tolerance for recomputed interior angles.
    const ANGLE_TOL: Self;
    /// Relative singular-value cutoff for the rank-3 test on the dual matrix.
    const RANK_RTOL: Self;
    /// Criticality threshold on the singular-value ratio of the augmented
    /// dual matrix; below it a polygon counts as perimeter-critical.
    const CRITICAL_TOL: Self;
    /// Residual bound for the two-term dual decomposition at boundary polygons.
    const DECOMP_TOL: Self;
    /// Distance from a half-turn below which the frame logarithm refuses to
    /// pick a branch.
    const BRANCH_TOL: Self;
    /// Edge lengths at or below this count as collapsed.
    const ZERO_LENGTH_TOL: Self;
    /// Smallest edge length the optimizer's line search will step to.
    const MIN_EDGE: Self;
    /// Bracket width at which root bisection hands over to Newton polish.
    const ROOT_WIDTH: Self;
    /// Sampled perimeters may undercut the incircle perimeter by at most this.
    const THEOREM_GAP_TOL: Self;
    /// Required perimeter excess for samples that are clearly distinct.
    const THEOREM_STRICT_GAP: Self;
    /// Length-vector distance above which a sample counts as clearly distinct.
    const THEOREM_SEPARATION: Self;
    /// Distance to the incircle lengths at which a descent run counts as
    /// having reproduced the minimizer.
    const THEOREM_LENGTH_MATCH: Self;

    /// Lossy conversion from an `f64` literal.
    fn lit(x: f64) -> Self;
    /// Lossy conversion to `f64`, for reports and error messages.
    fn approx_f64(self) -> f64;
}

impl Real for f64 {
    const QUADRIC_TOL: Self = 1e-12;
    const GEOM_TOL: Self = 1e-10;
    const INTERIOR_TOL: Self = 1e-9;
    const CLOSURE_TOL: Self = 1e-8;
    const PROJECT_TOL: Self = 1e-10;
    const PROJECT_BASIN: Self = 0.5;
    const ANGLE_TOL: Self = 1e-8;
    const RANK_RTOL: Self = 1e-8;
    const CRITICAL_TOL: Self = 1e-8;
    const DECOMP_TOL: Self = 1e-9;
    const BRANCH_TOL: Self = 1e-6;
    const ZERO_LENGTH_TOL: Self = 1e-12;
    const MIN_EDGE: Self = 1e-9;
    const ROOT_WIDTH: Self = 1e-12;
    const THEOREM_GAP_TOL: Self = 1e-9;
    const THEOREM_STRICT_GAP: Self = 1e-8;
    const THEOREM_SEPARATION: Self = 1e-4;
    const THEOREM_LENGTH_MATCH: Self = 1e-5;

    #[inline]
    fn lit(x: f64) -> Self {
        x
    }
    #[inline]
    fn approx_f64(self) -> f64 {
        self
    }
}

impl Real for f32 {
    const QUADRIC_TOL: Self = 1e-5;
    const GEOM_TOL: Self = 1e-4;
    const INTERIOR_TOL: Self = 1e-4;
    const CLOSURE_TOL: Self = 1e-3;
    const PROJECT_TOL: Self = 1e-4;
    const PROJECT_BASIN: Self = 0.5;
    const ANGLE_TOL: Self = 1e-3;
    const RANK_RTOL: Self = 1e-4;
    const CRITICAL_TOL: Self = 1e-4;
    const DECOMP_TOL: Self = 1e-4;
    const BRANCH_TOL: Self = 1e-3;
    const ZERO_LENGTH_TOL: Self = 1e-6;
    const MIN_EDGE: Self = 1e-5;
    const ROOT_WIDTH: Self = 1e-6;
    const THEOREM_GAP_TOL: Self = 1e-4;
    const THEOREM_STRICT_GAP: Self = 1e-3;
    const THEOREM_SEPARATION: Self = 1e-2;
    const THEOREM_LENGTH_MATCH: Self = 1e-2;

    #[inline]
    fn lit(x: f64) -> Self {
        x as f32
    }
    #[inline]
    fn approx_f64(self) -> f64 {
        self as f64
    }
}

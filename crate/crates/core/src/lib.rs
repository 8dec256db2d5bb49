//! Convex hyperbolic polygons with prescribed interior angles.
//!
//! The crate works in the hyperboloid model: points of the hyperbolic plane
//! are unit timelike vectors of the Lorentz plane R²₁ and oriented geodesics
//! are unit spacelike ones (the de Sitter sphere). For an admissible angle
//! vector β₁…βₙ — each βᵢ in (0,π), with Σ(π−βᵢ) > 2π — the closed convex
//! polygons with those angles form an analytic manifold of dimension n−3 in
//! the space of edge-length vectors, and the perimeter attains its unique
//! minimum at the polygon with an inscribed circle.
//!
//! What the crate provides, module by module:
//!
//! * [`lorentz`] — Minkowski products, causal classification, the Lorentzian
//!   cross product and point/line duality.
//! * [`developing`] — moving frames in SO₀(2,1), the development of an edge
//!   path, its closure residual and the residual's Jacobian.
//! * [`polygon`] — the polygon data model with validation, tangent bases of
//!   the length manifold, Newton projection onto it, and seeded sampling.
//! * [`incircle`] — the incircle construction (radius, tangent lengths,
//!   center) and the rank test for perimeter criticality.
//! * [`optimizer`] — projected-gradient perimeter descent, the boundary
//!   descent direction at collapsed edges, and the minimality verifier.
//! * [`jsonfmt`] — bit-exact JSON emission shared by the library and CLI.
//!
//! All geometry is generic over the scalar through [`Real`]; the aliases
//! below fix the `f64` instantiation that the CLI and the test suites use.

pub mod developing;
pub mod error;
pub mod incircle;
pub mod jsonfmt;
mod linalg;
pub mod lorentz;
pub mod optimizer;
pub mod polygon;
pub mod real;

pub use error::{Error, Result};
pub use real::Real;

/// `f64` vector of the Lorentz plane.
pub type Vec3 = lorentz::Vec3<f64>;
/// `f64` point of the hyperbolic plane.
pub type HPoint = lorentz::HPoint<f64>;
/// `f64` point of the de Sitter sphere (an oriented geodesic).
pub type DSPoint = lorentz::DSPoint<f64>;
/// `f64` element of SO₀(2,1).
pub type Frame = developing::Frame<f64>;
/// `f64` admissible angle vector.
pub type AngleSpec = polygon::AngleSpec<f64>;
/// `f64` convex polygon.
pub type Polygon = polygon::Polygon<f64>;
/// `f64` incircle solution.
pub type IncircleSolution = incircle::IncircleSolution<f64>;
/// `f64` optimizer configuration.
pub type OptimizerConfig = optimizer::OptimizerConfig<f64>;
/// `f64` optimizer trace.
pub type OptimizerTrace = optimizer::OptimizerTrace<f64>;

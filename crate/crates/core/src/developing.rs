//! Moving frames and the development of edge paths.
//!
//! A [`Frame`] is an orientation-preserving isometry in SO₀(2,1), identified
//! with a unit tangent element of the hyperbolic plane: the identity frame
//! sits at the base point (1,0,0) and points along (0,1,0). Left turns are
//! counter-clockwise, i.e. positive rotation angles in the (x¹,x²) plane.
//!
//! [`develop`] lays out a polygonal path from the base frame: translate by
//! l₁, turn left by π−β₁, translate by l₂, … finishing with the turn π−βₙ.
//! The path closes up exactly when the end frame is the identity;
//! [`closure_residual`] measures the failure as a vector of R²₁ through the
//! Lie-algebra identification u ↦ (w ↦ u ⊠ w). The residual is taken of the
//! *inverse* end frame (the correcting isometry still to be applied), which
//! makes its derivative in lᵢ the outward dual of edge i — see [`jacobian`].

use crate::error::{Error, Result};
use crate::lorentz::{mdot, DSPoint, HPoint, Vec3};
use crate::real::Real;
use nalgebra::{DMatrix, Matrix3};

/// An orientation-preserving Lorentz isometry in SO₀(2,1), read as a unit
/// tangent element of H².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Frame<T: Real> {
    m: Matrix3<T>,
}

impl<T: Real> Frame<T> {
    #[inline]
    pub fn identity() -> Self {
        Self {
            m: Matrix3::identity(),
        }
    }

    #[inline]
    pub fn matrix(&self) -> &Matrix3<T> {
        &self.m
    }

    pub(crate) fn from_matrix(m: Matrix3<T>) -> Self {
        Self { m }
    }

    /// Wraps a matrix after checking the SO₀(2,1) conditions.
    pub fn try_new(m: Matrix3<T>) -> Result<Self> {
        let f = Self { m };
        let defect = f.lorentz_defect();
        if defect > T::GEOM_TOL {
            return Err(Error::InvalidInput(format!(
                "matrix is not in SO₀(2,1): defect {:.3e}",
                defect.approx_f64()
            )));
        }
        Ok(f)
    }

    /// Group inverse, using g⁻¹ = J gᵀ J for Lorentz matrices.
    pub fn inverse(&self) -> Self {
        let mut t = self.m.transpose();
        // conjugate by J = diag(−1,1,1): flip the off-blocks of row/column 0
        t[(0, 1)] = -t[(0, 1)];
        t[(0, 2)] = -t[(0, 2)];
        t[(1, 0)] = -t[(1, 0)];
        t[(2, 0)] = -t[(2, 0)];
        Self { m: t }
    }

    #[inline]
    pub fn compose(&self, rhs: &Self) -> Self {
        Self { m: self.m * rhs.m }
    }

    #[inline]
    pub fn apply(&self, v: Vec3<T>) -> Vec3<T> {
        Vec3::from_na(self.m * v.to_na())
    }

    /// The point the frame is based at (image of (1,0,0)).
    #[inline]
    pub fn base_point(&self) -> HPoint<T> {
        HPoint::new_unchecked(Vec3::new(self.m[(0, 0)], self.m[(1, 0)], self.m[(2, 0)]))
    }

    /// The unit tangent direction (image of (0,1,0)).
    #[inline]
    pub fn direction(&self) -> Vec3<T> {
        Vec3::new(self.m[(0, 1)], self.m[(1, 1)], self.m[(2, 1)])
    }

    /// Dual of the frame's geodesic with the normal pointing left of travel
    /// (image of (0,0,1)); columns of Lorentz matrices are unit spacelike.
    #[inline]
    pub fn left_normal(&self) -> DSPoint<T> {
        DSPoint::new_unchecked(Vec3::new(self.m[(0, 2)], self.m[(1, 2)], self.m[(2, 2)]))
    }

    /// Dual of the frame's geodesic oriented outward for a left-turning
    /// (counter-clockwise) closed path.
    #[inline]
    pub fn outward_dual(&self) -> DSPoint<T> {
        DSPoint::new_unchecked(Vec3::new(
            -self.m[(0, 2)],
            -self.m[(1, 2)],
            -self.m[(2, 2)],
        ))
    }

    /// Deviation from the Lorentz conditions gᵀ J g = J, det g = 1, g₀₀ > 0.
    pub fn lorentz_defect(&self) -> T {
        let j = Matrix3::from_diagonal(&nalgebra::Vector3::new(-T::one(), T::one(), T::one()));
        let gram = (self.m.transpose() * j * self.m - j).abs().max();
        let det = (self.m.determinant() - T::one()).abs();
        let sheet = if self.m[(0, 0)] > T::zero() {
            T::zero()
        } else {
            T::one()
        };
        gram.max(det).max(sheet)
    }

    /// Lie-algebra logarithm read in R²₁ through u ↦ (w ↦ u ⊠ w), so a pure
    /// rotation about the base point by φ maps to (φ, 0, 0) and a unit-speed
    /// translation along the frame's geodesic to (0, 0, 1).
    ///
    /// Errors with [`Error::BranchAmbiguity`] when the elliptic rotation
    /// angle is within [`Real::BRANCH_TOL`] of a half-turn, where the branch
    /// of the logarithm is not determined.
    pub fn log_vee(&self) -> Result<Vec3<T>> {
        let two = T::one() + T::one();
        let half = T::one() / two;
        // s = cos θ (elliptic), cosh d (hyperbolic), 1 (parabolic)
        let s = (self.m.trace() - T::one()) * half;
        let anti = (self.m - self.inverse().m) * half;
        // anti = f·X with X = u ⊠ ·; average the symmetric entries
        let y = Vec3::new(
            (-anti[(1, 2)] + anti[(2, 1)]) * half,
            (-anti[(0, 2)] - anti[(2, 0)]) * half,
            (anti[(0, 1)] + anti[(1, 0)]) * half,
        );
        let near_one = T::lit(1e-7);
        if s > T::one() + near_one {
            let d = s.acosh();
            Ok(y.scale(d / d.sinh()))
        } else if s < T::one() - near_one {
            let theta = s.max(-T::one()).acos();
            if T::PI() - theta < T::BRANCH_TOL {
                return Err(Error::BranchAmbiguity((T::PI() - theta).approx_f64()));
            }
            Ok(y.scale(theta / theta.sin()))
        } else {
            // near-parabolic: invert f(q) = sinh(√q)/√q from m = f(q)²·q
            let m = mdot(y, y);
            let six = T::lit(6.0);
            let c2 = T::lit(7.0 / 360.0);
            Ok(y.scale(T::one() - m / six + c2 * m * m))
        }
    }
}

impl<T: Real> std::ops::Mul for Frame<T> {
    type Output = Frame<T>;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        self.compose(&rhs)
    }
}

/// The reference frame all paths start from: the identity, based at (1,0,0)
/// pointing along (0,1,0).
#[inline]
pub fn base_frame<T: Real>() -> Frame<T> {
    Frame::identity()
}

/// Hyperbolic translation by `d` along the frame's geodesic (a boost acting
/// on the (x⁰,x¹) block).
pub fn translate<T: Real>(d: T) -> Frame<T> {
    let (c, s) = (d.cosh(), d.sinh());
    let (o, z) = (T::one(), T::zero());
    Frame::from_matrix(Matrix3::new(c, s, z, s, c, z, z, z, o))
}

/// Rotation by `phi` about the frame's base point; positive angles turn left
/// (counter-clockwise in the (x¹,x²) plane).
pub fn rotate<T: Real>(phi: T) -> Frame<T> {
    let (c, s) = (phi.cos(), phi.sin());
    let (o, z) = (T::one(), T::zero());
    Frame::from_matrix(Matrix3::new(o, z, z, z, c, -s, z, s, c))
}

/// Development of an edge path: the end frame and the visited points.
#[derive(Clone, Debug)]
pub struct PathResult<T: Real> {
    /// Frame after the final turn; the identity exactly for closed polygons.
    pub end_frame: Frame<T>,
    /// Base points after 0, 1, …, n segments (n+1 entries, first = (1,0,0)).
    pub vertices: Vec<HPoint<T>>,
}

/// Full development bookkeeping: additionally the frame at the start of each
/// edge, from which the edge duals are read off.
#[derive(Clone, Debug)]
pub(crate) struct DevelopedPath<T: Real> {
    pub end_frame: Frame<T>,
    pub vertices: Vec<HPoint<T>>,
    pub edge_frames: Vec<Frame<T>>,
}

fn check_inputs<T: Real>(angles: &[T], lengths: &[T]) -> Result<()> {
    if angles.len() != lengths.len() {
        return Err(Error::InvalidInput(format!(
            "{} angles but {} lengths",
            angles.len(),
            lengths.len()
        )));
    }
    if angles.len() < 3 {
        return Err(Error::InvalidInput("need at least 3 edges".into()));
    }
    for (i, &beta) in angles.iter().enumerate() {
        if !(beta > T::zero() && beta < T::PI()) {
            return Err(Error::InvalidInput(format!(
                "angle {} outside (0, π): {}",
                i,
                beta.approx_f64()
            )));
        }
    }
    for (i, &l) in lengths.iter().enumerate() {
        if l < T::zero() {
            return Err(Error::InvalidInput(format!(
                "negative length {} at edge {}",
                l.approx_f64(),
                i
            )));
        }
    }
    Ok(())
}

pub(crate) fn develop_path_from<T: Real>(
    base: &Frame<T>,
    angles: &[T],
    lengths: &[T],
) -> Result<DevelopedPath<T>> {
    check_inputs(angles, lengths)?;
    let n = angles.len();
    let mut g = *base;
    let mut vertices = Vec::with_capacity(n + 1);
    let mut edge_frames = Vec::with_capacity(n);
    vertices.push(g.base_point());
    for i in 0..n {
        edge_frames.push(g);
        g = g * translate(lengths[i]);
        vertices.push(g.base_point());
        g = g * rotate(T::PI() - angles[i]);
    }
    Ok(DevelopedPath {
        end_frame: g,
        vertices,
        edge_frames,
    })
}

/// Develops the path with interior angles `angles` (each in (0,π)) and edge
/// lengths `lengths` (non-negative; zero lengths are allowed and describe
/// boundary polygons).
pub fn develop<T: Real>(angles: &[T], lengths: &[T]) -> Result<PathResult<T>> {
    develop_from(&base_frame(), angles, lengths)
}

/// [`develop`] started from an arbitrary frame; all output is the isometric
/// image under `base` of the standard development.
pub fn develop_from<T: Real>(
    base: &Frame<T>,
    angles: &[T],
    lengths: &[T],
) -> Result<PathResult<T>> {
    let path = develop_path_from(base, angles, lengths)?;
    Ok(PathResult {
        end_frame: path.end_frame,
        vertices: path.vertices,
    })
}

/// Closure residual: the logarithm of the inverse end frame in the R²₁
/// chart. Zero exactly when the path closes; first-order accurate near
/// closure; its derivative in lᵢ is the outward dual of edge i.
pub fn closure_residual<T: Real>(angles: &[T], lengths: &[T]) -> Result<Vec3<T>> {
    let path = develop_path_from(&base_frame(), angles, lengths)?;
    path.end_frame.inverse().log_vee()
}

pub(crate) fn residual_of_path<T: Real>(path: &DevelopedPath<T>) -> Result<Vec3<T>> {
    path.end_frame.inverse().log_vee()
}

/// Outward duals of the developed edges as the columns of a 3×n matrix,
/// defined for open paths as well (used by the Newton projection).
pub(crate) fn path_dual_matrix<T: Real>(path: &DevelopedPath<T>) -> DMatrix<T> {
    let n = path.edge_frames.len();
    DMatrix::from_fn(3, n, |r, c| {
        let d = path.edge_frames[c].outward_dual().v();
        match r {
            0 => d.x0,
            1 => d.x1,
            _ => d.x2,
        }
    })
}

/// Derivative of [`closure_residual`] at a closed path: the 3×n matrix whose
/// column i is the outward dual eᵢ* of edge i.
///
/// Requires the path to close within [`Real::CLOSURE_TOL`].
pub fn jacobian<T: Real>(angles: &[T], lengths: &[T]) -> Result<DMatrix<T>> {
    let path = develop_path_from(&base_frame(), angles, lengths)?;
    let res = residual_of_path(&path)?;
    let norm = res.euclid_norm();
    if norm > T::CLOSURE_TOL {
        return Err(Error::NotClosed(norm.approx_f64()));
    }
    Ok(path_dual_matrix(&path))
}

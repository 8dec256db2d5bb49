//! Minkowski linear algebra of the Lorentz plane R²₁.
//!
//! Coordinates are ordered (x⁰, x¹, x²) and carry the bilinear form
//! ⟨x, y⟩ = −x⁰y⁰ + x¹y¹ + x²y² of signature (−, +, +). The hyperbolic plane
//! is the upper sheet {x·x = −1, x⁰ > 0} of the two-sheeted hyperboloid
//! ([`HPoint`]); the de Sitter sphere {x·x = +1} ([`DSPoint`]) parametrizes
//! oriented geodesics: the line dual to `l` is {x ∈ H² | x·l = 0}, with the
//! unit normal pointing into the half-plane where x·l > 0.

use crate::error::{Error, Result};
use crate::real::Real;
use nalgebra::Vector3;

/// A vector of R²₁ in model coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3<T> {
    pub x0: T,
    pub x1: T,
    pub x2: T,
}

impl<T: Real> Vec3<T> {
    #[inline]
    pub fn new(x0: T, x1: T, x2: T) -> Self {
        Self { x0, x1, x2 }
    }

    #[inline]
    pub fn zero() -> Self {
        Self::new(T::zero(), T::zero(), T::zero())
    }

    /// Squared Euclidean norm, used for scale-invariant tolerances.
    #[inline]
    pub fn euclid_norm_sq(self) -> T {
        self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2
    }

    /// Euclidean norm of the coordinate triple.
    #[inline]
    pub fn euclid_norm(self) -> T {
        self.euclid_norm_sq().sqrt()
    }

    #[inline]
    pub fn scale(self, s: T) -> Self {
        Self::new(self.x0 * s, self.x1 * s, self.x2 * s)
    }

    #[inline]
    pub fn to_na(self) -> Vector3<T> {
        Vector3::new(self.x0, self.x1, self.x2)
    }

    #[inline]
    pub fn from_na(v: Vector3<T>) -> Self {
        Self::new(v[0], v[1], v[2])
    }
}

impl<T: Real> std::ops::Add for Vec3<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x0 + rhs.x0, self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl<T: Real> std::ops::Sub for Vec3<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x0 - rhs.x0, self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl<T: Real> std::ops::Neg for Vec3<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x0, -self.x1, -self.x2)
    }
}

/// Causal class of a nonzero vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CausalClass {
    Spacelike,
    Timelike,
    Lightlike,
}

/// Minkowski product ⟨a, b⟩ = −a⁰b⁰ + a¹b¹ + a²b².
#[inline]
pub fn mdot<T: Real>(a: Vec3<T>, b: Vec3<T>) -> T {
    -a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2
}

/// Causal classification of `a`; lightlike is decided relative to the
/// Euclidean norm so the test is scale-invariant.
pub fn classify<T: Real>(a: Vec3<T>) -> Result<CausalClass> {
    let scale = a.euclid_norm_sq();
    if scale == T::zero() {
        return Err(Error::InvalidInput("cannot classify the zero vector".into()));
    }
    let q = mdot(a, a);
    if q.abs() <= T::QUADRIC_TOL * scale {
        Ok(CausalClass::Lightlike)
    } else if q > T::zero() {
        Ok(CausalClass::Spacelike)
    } else {
        Ok(CausalClass::Timelike)
    }
}

/// Lorentzian cross product, the unique bilinear map with
/// ⟨u ⊠ v, w⟩ = det(u, v, w) for all w. Concretely u ⊠ v = J (u × v) with
/// J = diag(−1, 1, 1) and × the Euclidean cross product.
#[inline]
pub fn mcross<T: Real>(u: Vec3<T>, v: Vec3<T>) -> Vec3<T> {
    Vec3::new(
        -(u.x1 * v.x2 - u.x2 * v.x1),
        u.x2 * v.x0 - u.x0 * v.x2,
        u.x0 * v.x1 - u.x1 * v.x0,
    )
}

/// A point of the hyperbolic plane: x·x = −1, x⁰ > 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HPoint<T> {
    v: Vec3<T>,
}

impl<T: Real> HPoint<T> {
    /// Wraps `v` after checking membership of the upper hyperboloid sheet.
    pub fn try_new(v: Vec3<T>) -> Result<Self> {
        let defect = (mdot(v, v) + T::one()).abs();
        if defect > T::QUADRIC_TOL * T::one().max(v.euclid_norm_sq()) {
            return Err(Error::InvalidInput(format!(
                "not on the hyperboloid: quadric defect {:.3e}",
                defect.approx_f64()
            )));
        }
        if v.x0 <= T::zero() {
            return Err(Error::InvalidInput("not on the upper sheet: x0 <= 0".into()));
        }
        Ok(Self { v })
    }

    /// Membership is guaranteed by the caller; used where the coordinates
    /// come from an exact construction.
    #[inline]
    pub(crate) fn new_unchecked(v: Vec3<T>) -> Self {
        Self { v }
    }

    /// The base point (1, 0, 0).
    #[inline]
    pub fn origin() -> Self {
        Self {
            v: Vec3::new(T::one(), T::zero(), T::zero()),
        }
    }

    #[inline]
    pub fn v(&self) -> Vec3<T> {
        self.v
    }

    /// Hyperbolic distance to another point.
    pub fn distance_to(&self, other: &Self) -> T {
        (-mdot(self.v, other.v)).max(T::one()).acosh()
    }
}

/// A point of the de Sitter sphere: x·x = +1, i.e. an oriented geodesic.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DSPoint<T> {
    v: Vec3<T>,
}

impl<T: Real> DSPoint<T> {
    /// Wraps `v` after checking membership of the de Sitter sphere.
    pub fn try_new(v: Vec3<T>) -> Result<Self> {
        let defect = (mdot(v, v) - T::one()).abs();
        if defect > T::QUADRIC_TOL * T::one().max(v.euclid_norm_sq()) {
            return Err(Error::InvalidInput(format!(
                "not on the de Sitter sphere: quadric defect {:.3e}",
                defect.approx_f64()
            )));
        }
        Ok(Self { v })
    }

    #[inline]
    pub(crate) fn new_unchecked(v: Vec3<T>) -> Self {
        Self { v }
    }

    #[inline]
    pub fn v(&self) -> Vec3<T> {
        self.v
    }

    /// The oppositely oriented copy of the same geodesic.
    #[inline]
    pub fn reversed(&self) -> Self {
        Self { v: -self.v }
    }
}

/// Rescales a timelike vector onto the upper hyperboloid sheet, flipping the
/// sign if it points into the lower one.
pub fn normalize_h<T: Real>(a: Vec3<T>) -> Result<HPoint<T>> {
    if classify(a)? != CausalClass::Timelike {
        return Err(Error::InvalidInput(
            "normalize_h requires a timelike vector".into(),
        ));
    }
    let inv = T::one() / (-mdot(a, a)).sqrt();
    let mut v = a.scale(inv);
    if v.x0 < T::zero() {
        v = -v;
    }
    Ok(HPoint { v })
}

/// Rescales a spacelike vector onto the de Sitter sphere. The sign (i.e. the
/// orientation of the dual line) is kept as given.
pub fn normalize_s<T: Real>(a: Vec3<T>) -> Result<DSPoint<T>> {
    if classify(a)? != CausalClass::Spacelike {
        return Err(Error::InvalidInput(
            "normalize_s requires a spacelike vector".into(),
        ));
    }
    let inv = T::one() / mdot(a, a).sqrt();
    Ok(DSPoint { v: a.scale(inv) })
}

/// Signed distance from `p` to the geodesic dual to `l`: p·l = sinh(d),
/// positive on the side the normal of `l` points to.
#[inline]
pub fn signed_distance<T: Real>(p: &HPoint<T>, l: &DSPoint<T>) -> T {
    mdot(p.v, l.v).asinh()
}

/// Dual of the oriented geodesic through `a` and `b`, normalized from a ⊠ b
/// with the sign kept as computed (the normal points to the left of travel
/// a → b).
pub fn line_through<T: Real>(a: &HPoint<T>, b: &HPoint<T>) -> Result<DSPoint<T>> {
    if (a.v - b.v).euclid_norm() < T::QUADRIC_TOL {
        return Err(Error::DegenerateInput(
            "line_through requires two distinct points".into(),
        ));
    }
    normalize_s(mcross(a.v, b.v))
}

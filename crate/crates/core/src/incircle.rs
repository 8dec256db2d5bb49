//! The polygon with an inscribed circle.
//!
//! Cutting a polygon with an incircle of radius r along the perpendiculars
//! from the center to the edges decomposes it into n quadrilaterals with
//! angles (βᵢ, π/2, θᵢ(r), π/2), where the two sides adjacent to the apex
//! angle θᵢ(r) have length r. Splitting such a quadrilateral along its
//! diagonal into two right triangles gives the closed forms
//!
//! ```text
//!     θ(r, β) = 2·asin(cos(β/2) / cosh r)        (apex angle)
//!     t(r, β) = asinh(tanh r / tan(β/2))         (tangent length)
//! ```
//!
//! via the right-triangle relations cos A = cosh a·sin B and
//! tan A = tanh a / sinh b. The polygon closes up exactly when the apex
//! angles fill a full turn, Σθᵢ(r) = 2π; since every θᵢ is strictly
//! decreasing from π−βᵢ to 0, admissibility (Σ(π−βᵢ) > 2π) hands us a unique
//! radius, found by bracketed bisection plus a Newton polish.
//!
//! Tangent lengths are indexed by vertex: tᵢ belongs to the vertex of angle
//! βᵢ, and edge i (joining vertex i to vertex i+1 in the 0-based convention
//! of [`crate::polygon`]) has length l\_i = t\_{i−1} + tᵢ with indices mod n:
//!
//! ```text
//!        v_i ----- tangency ----- v_{i+1}
//!         \____ t_i ___/\_ t_{i+1} _/        (edge i+1 of the diagram)
//! ```
//!
//! Criticality of the perimeter is tested through the augmented dual matrix:
//! a polygon is critical iff appending a row of ones to A = (e₁* … eₙ*) does
//! not raise its rank, i.e. iff the duals lie in a common affine plane, i.e.
//! iff an inscribed circle exists. The Lorentz normal of that plane is the
//! center.

use crate::developing::{rotate, translate};
use crate::error::{Error, Result};
use crate::linalg;
use crate::lorentz::{classify, mdot, normalize_h, CausalClass, HPoint, Vec3};
use crate::polygon::{AngleSpec, Polygon, PolygonData};
use crate::real::Real;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// The incircle polygon for a given angle vector.
#[derive(Clone, Debug)]
pub struct IncircleSolution<T: Real> {
    /// Radius of the inscribed circle.
    pub radius: T,
    /// Tangent length at each vertex (tᵢ at the vertex of angle βᵢ).
    pub tangent_lengths: Vec<T>,
    /// The assembled polygon.
    pub polygon: Polygon<T>,
    /// Center of the inscribed circle.
    pub center: HPoint<T>,
}

/// Apex angle θ(r, β) = 2·asin(cos(β/2)/cosh r) of the gluing quadrilateral.
///
/// Strictly decreasing in r, with θ(0, β) = π − β and θ(∞, β) = 0.
pub fn theta<T: Real>(r: T, beta: T) -> T {
    let two = T::one() + T::one();
    two * ((beta / two).cos() / r.cosh()).asin()
}

/// dθ/dr, used by the Newton polish.
fn theta_dr<T: Real>(r: T, beta: T) -> T {
    let two = T::one() + T::one();
    let c = (beta / two).cos();
    let ch = r.cosh();
    let x = c / ch;
    -two * c * r.sinh() / (ch * ch * (T::one() - x * x).sqrt())
}

/// Tangent length t(r, β) = asinh(tanh r / tan(β/2)): the distance from a
/// vertex of angle β to the tangency points on its two edges.
pub fn tangent_length<T: Real>(r: T, beta: T) -> T {
    let two = T::one() + T::one();
    (r.tanh() / (beta / two).tan()).asinh()
}

/// Σθᵢ(r) − 2π.
fn angle_sum_defect<T: Real>(r: T, angles: &AngleSpec<T>) -> T {
    let two_pi = T::PI() + T::PI();
    angles
        .beta()
        .iter()
        .fold(-two_pi, |acc, &b| acc + theta(r, b))
}

/// Solves for the unique polygon with an inscribed circle.
///
/// The radius is the unique root of Σθᵢ(r) = 2π: g(0) > 0 by admissibility,
/// g is strictly decreasing and tends to −2π, so doubling brackets the root,
/// bisection narrows it to [`Real::ROOT_WIDTH`], and a Newton polish
/// finishes. Edge lengths are assembled from the tangent lengths and the
/// center is placed by the tangency frame of edge 0.
pub fn solve<T: Real>(angles: &AngleSpec<T>) -> Result<IncircleSolution<T>> {
    let n = angles.n();

    // bracket [lo, hi] with g(lo) > 0 > g(hi)
    let mut lo = T::zero();
    let mut hi = T::one();
    let mut doublings = 0;
    while angle_sum_defect(hi, angles) > T::zero() {
        hi = hi + hi;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::NumericalStall(
                "incircle radius bracket did not close".into(),
            ));
        }
    }
    // bisection
    while hi - lo > T::ROOT_WIDTH {
        let two = T::one() + T::one();
        let mid = (lo + hi) / two;
        if mid == lo || mid == hi {
            break;
        }
        if angle_sum_defect(mid, angles) > T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let two = T::one() + T::one();
    let mut r = (lo + hi) / two;
    // Newton polish
    for _ in 0..4 {
        let g = angle_sum_defect(r, angles);
        let dg = angles
            .beta()
            .iter()
            .fold(T::zero(), |acc, &b| acc + theta_dr(r, b));
        if dg == T::zero() {
            break;
        }
        let next = r - g / dg;
        if next > T::zero() {
            r = next;
        }
    }

    let tangents: Vec<T> = angles.beta().iter().map(|&b| tangent_length(r, b)).collect();
    let lengths: Vec<T> = (0..n)
        .map(|e| tangents[(e + n - 1) % n] + tangents[e])
        .collect();
    let polygon = Polygon::build(angles.clone(), lengths)?;

    // center: from vertex 0 march to the tangency on edge 0, turn left into
    // the interior, advance by r
    let t_prev = tangents[n - 1];
    let half_pi = T::FRAC_PI_2();
    let center_frame = translate(t_prev) * rotate(half_pi) * translate(r);
    let center = center_frame.base_point();

    Ok(IncircleSolution {
        radius: r,
        tangent_lengths: tangents,
        polygon,
        center,
    })
}

/// Criticality of the perimeter at `p`: the ratio σ₄/σ₁ of the augmented
/// dual matrix A′ (A with a row of ones appended). Zero iff rank(A′) = 3 iff
/// the duals are affinely coplanar iff `p` has an inscribed circle.
///
/// Triangles are rigid given their angles, hence always critical; A′ cannot
/// exceed rank 3 for n = 3 and the residual is 0 by convention.
pub fn criticality_residual<T: Real>(p: &Polygon<T>) -> T {
    let n = p.n();
    if n == 3 {
        return T::zero();
    }
    let mut a_aug_t = DMatrix::<T>::zeros(n, 4);
    for (i, d) in p.duals().iter().enumerate() {
        a_aug_t[(i, 0)] = d.v().x0;
        a_aug_t[(i, 1)] = d.v().x1;
        a_aug_t[(i, 2)] = d.v().x2;
        a_aug_t[(i, 3)] = T::one();
    }
    let sigma = linalg::singular_values(&a_aug_t);
    sigma[3] / sigma[0]
}

/// Center and radius of the inscribed circle, from the affine plane of the
/// duals: the least-squares solution of ⟨c, eᵢ*⟩ + s = 0 over all edges.
/// The normal must be timelike (it is for any compact critical polygon);
/// otherwise the data cannot describe an inscribed circle and
/// [`Error::NoInscribedCircle`] is returned.
///
/// Callers are expected to have checked [`criticality_residual`] first;
/// for non-critical polygons the least-squares plane is meaningless.
pub fn incircle_center<T: Real>(p: &Polygon<T>) -> Result<(HPoint<T>, T)> {
    let n = p.n();
    // rows [ (J eᵢ*)ᵀ | 1 ], null vector = (c, s); padded with a zero row
    // for triangles so the system stays square-or-tall
    let rows = n.max(4);
    let mut m = DMatrix::<T>::zeros(rows, 4);
    for (i, d) in p.duals().iter().enumerate() {
        m[(i, 0)] = -d.v().x0;
        m[(i, 1)] = d.v().x1;
        m[(i, 2)] = d.v().x2;
        m[(i, 3)] = T::one();
    }
    let (_sigma, v) = linalg::jacobi_svd(&m);
    let null = v.column(3);
    let mut c = Vec3::new(null[0], null[1], null[2]);
    let mut s = null[3];
    if c.x0 < T::zero() {
        c = -c;
        s = -s;
    }
    if classify(c)? != CausalClass::Timelike {
        return Err(Error::NoInscribedCircle);
    }
    let scale = (-mdot(c, c)).sqrt();
    let center = normalize_h(c)?;
    let radius = (s / scale).asinh();
    Ok((center, radius))
}

/// Serialized form of an incircle solution (the JSON wire format).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IncircleSolutionData {
    pub radius: f64,
    pub tangent_lengths: Vec<f64>,
    pub center: [f64; 3],
    pub perimeter: f64,
    pub polygon: PolygonData,
}

impl IncircleSolution<f64> {
    pub fn to_data(&self) -> IncircleSolutionData {
        IncircleSolutionData {
            radius: self.radius,
            tangent_lengths: self.tangent_lengths.clone(),
            center: [self.center.v().x0, self.center.v().x1, self.center.v().x2],
            perimeter: self.polygon.perimeter(),
            polygon: self.polygon.to_data(),
        }
    }

    pub fn to_json_string(&self) -> String {
        crate::jsonfmt::to_json_string(&self.to_data())
    }
}

//! Convex hyperbolic polygons with prescribed angles.
//!
//! For a fixed admissible angle vector β₁…βₙ (each in (0,π), with
//! Σ(π−βᵢ) > 2π) the closed convex polygons form an analytic submanifold of
//! codimension three in the space of length vectors: the closure map has the
//! outward duals eᵢ* as its derivative, so the tangent space at a polygon is
//! { l̇ | Σ l̇ᵢ eᵢ* = 0 }. This module owns the polygon data model, its
//! validation, the tangent-space basis, the Newton projection back onto the
//! manifold and seeded sampling around the incircle polygon.
//!
//! Indexing follows the edge/vertex convention used throughout the crate:
//! vertices are stored as v₀…v\_{n−1} with v₀ the base point, edge i
//! (0-based) joins vᵢ to v\_{i+1 mod n}, carries the dual `duals[i]`, and the
//! interior angle `beta[i]` sits at vertex v\_{i+1 mod n} between edges i and
//! i+1.

use crate::developing::{self, develop_path_from, DevelopedPath, Frame};
use crate::error::{Error, Result};
use crate::incircle;
use crate::linalg;
use crate::lorentz::{classify, mdot, normalize_h, CausalClass, DSPoint, HPoint, Vec3};
use crate::real::Real;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

/// An admissible ordered angle vector: n ≥ 3 angles in (0,π) whose exterior
/// angles sum to more than a full turn, Σ(π−βᵢ) > 2π.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleSpec<T> {
    beta: Vec<T>,
}

impl<T: Real> AngleSpec<T> {
    pub fn new(beta: Vec<T>) -> Result<Self> {
        if beta.len() < 3 {
            return Err(Error::InvalidInput(format!(
                "need at least 3 angles, got {}",
                beta.len()
            )));
        }
        for (i, &b) in beta.iter().enumerate() {
            if !(b > T::zero() && b < T::PI()) {
                return Err(Error::InvalidInput(format!(
                    "angle {} outside (0, π): {}",
                    i,
                    b.approx_f64()
                )));
            }
        }
        let defect = beta
            .iter()
            .fold(T::zero(), |acc, &b| acc + (T::PI() - b));
        let two_pi = T::PI() + T::PI();
        if defect <= two_pi {
            return Err(Error::InvalidInput(format!(
                "inadmissible angles: Σ(π−βᵢ) = {:.6} does not exceed 2π",
                defect.approx_f64()
            )));
        }
        Ok(Self { beta })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.beta.len()
    }

    #[inline]
    pub fn beta(&self) -> &[T] {
        &self.beta
    }

    /// Angle excess Σ(π−βᵢ) − 2π, the hyperbolic area of any polygon with
    /// these angles.
    pub fn excess(&self) -> T {
        self.beta
            .iter()
            .fold(-(T::PI() + T::PI()), |acc, &b| acc + (T::PI() - b))
    }

    /// The same angles cyclically rotated left by `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let n = self.n();
        let beta = (0..n).map(|i| self.beta[(i + k) % n]).collect();
        Self { beta }
    }
}

/// A closed convex polygon: angles, edge lengths, developed vertices and
/// outward edge duals.
#[derive(Clone, Debug)]
pub struct Polygon<T: Real> {
    angles: AngleSpec<T>,
    lengths: Vec<T>,
    vertices: Vec<HPoint<T>>,
    duals: Vec<DSPoint<T>>,
}

impl<T: Real> Polygon<T> {
    /// Develops the lengths against the angles and validates membership of
    /// the (closed) polygon manifold: closure within [`Real::CLOSURE_TOL`],
    /// all vertices weakly inside every edge half-plane, a strictly interior
    /// reference point, and interior angles that recompute to β.
    ///
    /// Zero lengths are allowed; they describe boundary polygons whose duals
    /// are still determined by the developed frames.
    pub fn build(angles: AngleSpec<T>, lengths: Vec<T>) -> Result<Self> {
        let path = develop_path_from(&developing::base_frame(), angles.beta(), &lengths)?;
        let residual = developing::residual_of_path(&path)?;
        let res_norm = residual.euclid_norm();
        if res_norm > T::CLOSURE_TOL {
            return Err(Error::NotOnManifold(res_norm.approx_f64()));
        }
        Self::assemble(angles, lengths, &path)
    }

    fn assemble(angles: AngleSpec<T>, lengths: Vec<T>, path: &DevelopedPath<T>) -> Result<Self> {
        let n = angles.n();
        let duals: Vec<DSPoint<T>> = path.edge_frames.iter().map(|f| f.outward_dual()).collect();
        let vertices: Vec<HPoint<T>> = path.vertices[..n].to_vec();

        // support-function criterion: every vertex weakly inside every edge
        for (e, d) in duals.iter().enumerate() {
            for (j, vtx) in vertices.iter().enumerate() {
                let s = mdot(vtx.v(), d.v());
                if s > T::INTERIOR_TOL {
                    return Err(Error::NotConvex(format!(
                        "vertex {} lies outside edge {}: x·e* = {:.3e}",
                        j,
                        e,
                        s.approx_f64()
                    )));
                }
            }
        }

        // a strictly interior reference point: the normalized vertex average
        let sum = vertices
            .iter()
            .fold(Vec3::zero(), |acc, p| acc + p.v());
        if classify(sum)? != CausalClass::Timelike {
            return Err(Error::NotConvex("vertex average is not timelike".into()));
        }
        let barycenter = normalize_h(sum)?;
        for (e, d) in duals.iter().enumerate() {
            if mdot(barycenter.v(), d.v()) >= T::zero() {
                return Err(Error::NotConvex(format!(
                    "reference point not inside edge {}",
                    e
                )));
            }
        }

        // interior angles recomputed from consecutive duals
        for i in 0..n {
            let c = mdot(duals[i].v(), duals[(i + 1) % n].v())
                .max(-T::one())
                .min(T::one());
            let recomputed = T::PI() - c.acos();
            if (recomputed - angles.beta()[i]).abs() > T::ANGLE_TOL {
                return Err(Error::NotConvex(format!(
                    "angle {} recomputes to {:.9}, expected {:.9}",
                    i,
                    recomputed.approx_f64(),
                    angles.beta()[i].approx_f64()
                )));
            }
        }

        Ok(Self {
            angles,
            lengths,
            vertices,
            duals,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.angles.n()
    }

    #[inline]
    pub fn angles(&self) -> &AngleSpec<T> {
        &self.angles
    }

    #[inline]
    pub fn lengths(&self) -> &[T] {
        &self.lengths
    }

    /// Vertices v₀…v\_{n−1}; edge i joins vertex i to vertex i+1 (mod n).
    #[inline]
    pub fn vertices(&self) -> &[HPoint<T>] {
        &self.vertices
    }

    /// Outward-oriented edge duals; the interior is { x | x·eᵢ* < 0 ∀i }.
    #[inline]
    pub fn duals(&self) -> &[DSPoint<T>] {
        &self.duals
    }

    /// Sum of the edge lengths.
    pub fn perimeter(&self) -> T {
        self.lengths.iter().fold(T::zero(), |acc, &l| acc + l)
    }

    /// Normalized vertex average, a strictly interior point.
    pub fn interior_point(&self) -> HPoint<T> {
        let sum = self
            .vertices
            .iter()
            .fold(Vec3::zero(), |acc, p| acc + p.v());
        normalize_h(sum).expect("validated at construction")
    }

    /// The outward duals as the columns of a 3×n matrix (the matrix A).
    pub fn dual_matrix(&self) -> DMatrix<T> {
        DMatrix::from_fn(3, self.n(), |r, c| {
            let d = self.duals[c].v();
            match r {
                0 => d.x0,
                1 => d.x1,
                _ => d.x2,
            }
        })
    }

    /// Image of the polygon under a global isometry. Lengths and angles are
    /// untouched; vertices and duals are mapped.
    pub fn transformed(&self, g: &Frame<T>) -> Self {
        Self {
            angles: self.angles.clone(),
            lengths: self.lengths.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|p| HPoint::new_unchecked(g.apply(p.v())))
                .collect(),
            duals: self
                .duals
                .iter()
                .map(|d| DSPoint::new_unchecked(g.apply(d.v())))
                .collect(),
        }
    }

    /// Orthonormal basis of the tangent space { l̇ | Σ l̇ᵢ eᵢ* = 0 }, as the
    /// columns of an n×(n−3) matrix. Empty for triangles: given the angles a
    /// triangle is rigid.
    ///
    /// Errors with [`Error::DegenerateConfiguration`] if the dual matrix has
    /// numerically lost rank three, which valid convex data cannot do.
    pub fn tangent_basis(&self) -> Result<DMatrix<T>> {
        let n = self.n();
        let at = self.dual_matrix().transpose(); // n×3
        let sigma = linalg::singular_values(&at);
        if sigma[2] <= T::RANK_RTOL * sigma[0] {
            return Err(Error::DegenerateConfiguration(
                (sigma[2] / sigma[0]).approx_f64(),
            ));
        }
        let (q, _r) = linalg::householder_full_qr(&at);
        Ok(q.columns(3, n - 3).into_owned())
    }

    /// Projects a length vector back onto the closure manifold by damped
    /// Newton iteration with minimum-norm steps, then validates the result.
    ///
    /// The guess must be inside the Newton basin (residual below
    /// [`Real::PROJECT_BASIN`]); lengths driven non-positive abort with
    /// [`Error::LeftDomain`]. Guesses that are already closed are returned
    /// untouched.
    pub fn project(angles: AngleSpec<T>, lengths_guess: &[T]) -> Result<Self> {
        Self::project_impl(angles, lengths_guess, false)
    }

    /// [`Polygon::project`], but polishing to the floating-point floor even
    /// when the guess already meets the closure tolerance. The optimizer
    /// compares perimeters of successive projections and needs them measured
    /// on the same razor-thin shell of the manifold.
    pub(crate) fn project_floor(angles: AngleSpec<T>, lengths_guess: &[T]) -> Result<Self> {
        Self::project_impl(angles, lengths_guess, true)
    }

    fn project_impl(angles: AngleSpec<T>, lengths_guess: &[T], tighten_always: bool) -> Result<Self> {
        const MAX_ITERS: usize = 50;
        let beta = angles.beta().to_vec();
        let mut lengths = lengths_guess.to_vec();

        let mut path = develop_path_from(&developing::base_frame(), &beta, &lengths)?;
        let mut residual = developing::residual_of_path(&path)?;
        let mut res_norm = residual.euclid_norm();
        if res_norm > T::PROJECT_BASIN {
            return Err(Error::ProjectionFailed {
                iterations: 0,
                residual: res_norm.approx_f64(),
            });
        }

        let newton_step = |lengths: &[T], path: &DevelopedPath<T>, residual: Vec3<T>| {
            let jac = developing::path_dual_matrix(path);
            let jjt = &jac * jac.transpose();
            let rhs = -DVector::from_vec(vec![residual.x0, residual.x1, residual.x2]);
            nalgebra::Cholesky::new(jjt).map(|ch| {
                let y = ch.solve(&rhs);
                let delta = jac.transpose() * y;
                lengths
                    .iter()
                    .zip(delta.iter())
                    .map(|(&l, &d)| (l, d))
                    .collect::<Vec<_>>()
            })
        };

        let mut iterations = 0usize;
        while res_norm > T::PROJECT_TOL {
            if iterations >= MAX_ITERS {
                return Err(Error::ProjectionFailed {
                    iterations: MAX_ITERS,
                    residual: res_norm.approx_f64(),
                });
            }
            iterations += 1;
            let step = newton_step(&lengths, &path, residual).ok_or_else(|| {
                Error::ProjectionFailed {
                    iterations,
                    residual: res_norm.approx_f64(),
                }
            })?;

            // damp by halving while the residual refuses to decrease
            let mut scale = T::one();
            let mut accepted = false;
            for _ in 0..30 {
                let trial: Vec<T> = step.iter().map(|&(l, d)| l + scale * d).collect();
                if let Some(idx) = trial.iter().position(|&l| l < T::zero()) {
                    // a genuinely shrinking edge: shrink the step first
                    if scale > T::lit(1e-4) {
                        scale *= T::lit(0.5);
                        continue;
                    }
                    return Err(Error::LeftDomain(idx));
                }
                let trial_path = develop_path_from(&developing::base_frame(), &beta, &trial)?;
                let trial_res = developing::residual_of_path(&trial_path)?;
                if trial_res.euclid_norm() < res_norm {
                    lengths = trial;
                    path = trial_path;
                    residual = trial_res;
                    res_norm = residual.euclid_norm();
                    accepted = true;
                    break;
                }
                scale *= T::lit(0.5);
            }
            if !accepted {
                return Err(Error::ProjectionFailed {
                    iterations,
                    residual: res_norm.approx_f64(),
                });
            }
        }

        // Opportunistic extra Newton steps toward the floating-point floor:
        // perimeter comparisons downstream see closure noise of this size, so
        // the cheaper it is, the better. Inputs that were already closed are
        // returned untouched unless the caller asked for the floor.
        if iterations > 0 || tighten_always {
            for _ in 0..3 {
                let Some(step) = newton_step(&lengths, &path, residual) else {
                    break;
                };
                let trial: Vec<T> = step.iter().map(|&(l, d)| l + d).collect();
                if trial.iter().any(|&l| l < T::zero()) {
                    break;
                }
                let trial_path = develop_path_from(&developing::base_frame(), &beta, &trial)?;
                let trial_res = developing::residual_of_path(&trial_path)?;
                if trial_res.euclid_norm() < res_norm {
                    lengths = trial;
                    path = trial_path;
                    residual = trial_res;
                    res_norm = residual.euclid_norm();
                } else {
                    break;
                }
            }
        }
        Self::assemble(angles, lengths, &path)
    }

    /// Seeded random polygon with the given angles: a pseudorandom tangent
    /// direction of norm `step` at the incircle polygon, projected back onto
    /// the manifold. Deterministic per seed; the step is halved (up to 20
    /// times) whenever projection or validation fails.
    pub fn sample(angles: &AngleSpec<T>, seed: u64, step: T) -> Result<Self> {
        let start = incircle::solve(angles)?.polygon;
        Self::sample_from(&start, seed, step)
    }

    /// [`Polygon::sample`] around an already-computed start polygon.
    pub fn sample_from(start: &Self, seed: u64, step: T) -> Result<Self> {
        let n = start.n();
        if n == 3 || step == T::zero() {
            return Ok(start.clone());
        }
        let basis = start.tangent_basis()?;
        let k = n - 3;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let coeffs = DVector::<T>::from_fn(k, |_, _| {
            T::lit(rng.sample::<f64, _>(StandardNormal))
        });
        let norm = coeffs.norm();
        if norm == T::zero() {
            return Ok(start.clone());
        }
        let direction = &basis * (coeffs / norm);

        let mut scale = step;
        for _ in 0..=20 {
            let guess: Vec<T> = start
                .lengths
                .iter()
                .enumerate()
                .map(|(i, &l)| l + scale * direction[i])
                .collect();
            if guess.iter().all(|&l| l > T::zero()) {
                match Self::project(start.angles.clone(), &guess) {
                    Ok(p) => return Ok(p),
                    Err(Error::InvalidInput(msg)) => return Err(Error::InvalidInput(msg)),
                    Err(_) => {}
                }
            }
            scale *= T::lit(0.5);
        }
        Err(Error::SamplingFailed(20))
    }
}

/// Serialized form of a polygon (the JSON wire format).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonData {
    pub angles: Vec<f64>,
    pub lengths: Vec<f64>,
    pub vertices: Vec<[f64; 3]>,
    pub duals: Vec<[f64; 3]>,
}

impl Polygon<f64> {
    pub fn to_data(&self) -> PolygonData {
        PolygonData {
            angles: self.angles.beta().to_vec(),
            lengths: self.lengths.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|p| [p.v().x0, p.v().x1, p.v().x2])
                .collect(),
            duals: self
                .duals
                .iter()
                .map(|d| [d.v().x0, d.v().x1, d.v().x2])
                .collect(),
        }
    }

    /// Rebuilds the polygon from angles and lengths, then checks that the
    /// stored vertices and duals agree with the reconstruction.
    pub fn from_data(data: &PolygonData) -> Result<Self> {
        let angles = AngleSpec::new(data.angles.clone())?;
        let polygon = Self::build(angles, data.lengths.clone())?;
        let n = polygon.n();
        if data.vertices.len() != n || data.duals.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {} vertices and duals, got {} and {}",
                n,
                data.vertices.len(),
                data.duals.len()
            )));
        }
        let mut worst = 0.0f64;
        for (stored, built) in data.vertices.iter().zip(polygon.vertices.iter()) {
            let b = built.v();
            let d = (stored[0] - b.x0)
                .abs()
                .max((stored[1] - b.x1).abs())
                .max((stored[2] - b.x2).abs());
            worst = worst.max(d);
        }
        for (stored, built) in data.duals.iter().zip(polygon.duals.iter()) {
            let b = built.v();
            let d = (stored[0] - b.x0)
                .abs()
                .max((stored[1] - b.x1).abs())
                .max((stored[2] - b.x2).abs());
            worst = worst.max(d);
        }
        if worst > 1e-8 {
            return Err(Error::InvalidInput(format!(
                "stored geometry disagrees with the rebuilt polygon by {:.3e}",
                worst
            )));
        }
        Ok(polygon)
    }

    pub fn to_json_string(&self) -> String {
        crate::jsonfmt::to_json_string(&self.to_data())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let data: PolygonData = serde_json::from_str(s)
            .map_err(|e| Error::InvalidInput(format!("polygon JSON: {}", e)))?;
        Self::from_data(&data)
    }
}

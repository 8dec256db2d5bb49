//! Perimeter minimization over the polygon manifold.
//!
//! The perimeter Σlᵢ is linear in the lengths, so its gradient is the
//! all-ones vector and descent happens along its projection onto the tangent
//! space { l̇ | Σ l̇ᵢ eᵢ* = 0 }. [`minimize`] runs projected-gradient descent
//! with Armijo backtracking, projecting each iterate back onto the closure
//! manifold. Trial steps are warm-started from the last accepted step and
//! refined by one safeguarded quadratic interpolation, which keeps plain
//! gradient steps from oscillating; the last stretch to `grad_tol`, where
//! perimeter differences drop below floating-point resolution, is handed to
//! a Newton solve of the stationarity system.
//!
//! [`boundary_direction`] is the descent construction at boundary polygons:
//! at a run of collapsed edges the duals of the run decompose over the two
//! flanking duals with positive coefficients summing to more than one, which
//! yields a tangent vector into the interior that strictly shortens the
//! perimeter.
//!
//! [`verify_theorem`] checks, at one angle vector, that the incircle polygon
//! is the unique perimeter minimizer: sampled polygons may not undercut its
//! perimeter and descent from each sample must come back to it.

use crate::developing::{self, base_frame, develop_path_from};
use crate::error::{Error, Result};
use crate::incircle;
use crate::lorentz::Vec3;
use crate::polygon::{AngleSpec, Polygon};
use crate::real::Real;
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Parameters for [`minimize`].
#[derive(Clone, Copy, Debug)]
pub struct OptimizerConfig<T> {
    pub max_iters: usize,
    /// Terminate once the projected gradient norm falls below this.
    pub grad_tol: T,
    /// Initial trial step of the very first line search.
    pub step0: T,
    /// Backtracking factor in (0,1).
    pub shrink: T,
    /// Armijo sufficient-decrease coefficient in (0,1).
    pub armijo: T,
}

impl<T: Real> Default for OptimizerConfig<T> {
    fn default() -> Self {
        Self {
            max_iters: 10_000,
            grad_tol: T::lit(1e-9),
            step0: T::lit(0.1),
            shrink: T::lit(0.5),
            armijo: T::lit(1e-4),
        }
    }
}

impl<T: Real> OptimizerConfig<T> {
    fn validate(&self) -> Result<()> {
        let ok = self.grad_tol > T::zero()
            && self.step0 > T::zero()
            && self.shrink > T::zero()
            && self.shrink < T::one()
            && self.armijo > T::zero()
            && self.armijo < T::one();
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput("optimizer config out of range".into()))
        }
    }
}

/// Why a [`minimize`] run stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptimizerStatus {
    /// Projected gradient norm fell below `grad_tol`.
    Converged,
    /// The line search stalled against the positivity clip on these edges.
    HitBoundary { edges: Vec<usize> },
    /// Iteration budget exhausted.
    MaxIters,
}

/// One accepted iterate.
#[derive(Clone, Debug)]
pub struct TraceEntry<T> {
    pub lengths: Vec<T>,
    pub perimeter: T,
    pub projected_gradient_norm: T,
}

/// Record of a descent run; perimeters are non-increasing along `iterates`.
#[derive(Clone, Debug)]
pub struct OptimizerTrace<T> {
    pub iterates: Vec<TraceEntry<T>>,
    pub status: OptimizerStatus,
}

fn projected_gradient<T: Real>(basis: &DMatrix<T>) -> DVector<T> {
    let ones = DVector::from_element(basis.nrows(), T::one());
    basis * (basis.transpose() * ones)
}

/// Newton finisher on the stationarity system
///
/// ```text
///     closure(l) = 0,    A(l)ᵀ y = 1ₙ
/// ```
///
/// (unknowns the lengths and the multiplier y ∈ R³). Certified line-search
/// descent cannot push the projected gradient below ≈ √(ε·perimeter), since
/// perimeter decreases shrink below floating-point resolution; solving the
/// first-order system directly has no such floor. Only called close to the
/// minimizer, which is the unique interior critical point.
fn polish_critical_point<T: Real>(angles: &AngleSpec<T>, lengths: &[T]) -> Result<Vec<T>> {
    let n = lengths.len();
    let beta = angles.beta().to_vec();
    let dim = n + 3;

    let eval = |x: &DVector<T>| -> Result<DVector<T>> {
        let l: Vec<T> = x.iter().take(n).cloned().collect();
        let path = develop_path_from(&base_frame(), &beta, &l)?;
        let res = developing::residual_of_path(&path)?;
        let a = developing::path_dual_matrix(&path);
        let mut g = DVector::zeros(dim);
        g[0] = res.x0;
        g[1] = res.x1;
        g[2] = res.x2;
        for i in 0..n {
            g[3 + i] =
                a[(0, i)] * x[n] + a[(1, i)] * x[n + 1] + a[(2, i)] * x[n + 2] - T::one();
        }
        Ok(g)
    };

    // initial multiplier from the normal equations A Aᵀ y = A 1
    let path = develop_path_from(&base_frame(), &beta, lengths)?;
    let a = developing::path_dual_matrix(&path);
    let ones = DVector::from_element(n, T::one());
    let rhs = &a * &ones;
    let y0 = nalgebra::Cholesky::new(&a * a.transpose())
        .map(|ch| ch.solve(&rhs))
        .ok_or_else(|| Error::NumericalStall("singular dual Gram matrix".into()))?;

    let mut x = DVector::zeros(dim);
    for i in 0..n {
        x[i] = lengths[i];
    }
    for i in 0..3 {
        x[n + i] = y0[i];
    }

    let target = T::PROJECT_TOL * T::lit(1e-2);
    let fd_step = T::default_epsilon().sqrt();
    let mut g = eval(&x)?;
    for _ in 0..30 {
        if g.norm() <= target {
            return Ok(x.iter().take(n).cloned().collect());
        }
        let mut jac = DMatrix::<T>::zeros(dim, dim);
        for c in 0..dim {
            let mut xp = x.clone();
            xp[c] += fd_step;
            let mut xm = x.clone();
            xm[c] -= fd_step;
            let gp = eval(&xp)?;
            let gm = eval(&xm)?;
            for r in 0..dim {
                jac[(r, c)] = (gp[r] - gm[r]) / (fd_step + fd_step);
            }
        }
        let lu = jac.lu();
        let Some(delta) = lu.solve(&(-&g)) else {
            return Err(Error::NumericalStall("singular stationarity system".into()));
        };
        // damped acceptance on the residual norm
        let mut scale = T::one();
        let mut moved = false;
        for _ in 0..20 {
            let trial = &x + &delta * scale;
            if trial.iter().take(n).any(|&l| l <= T::zero()) {
                scale *= T::lit(0.5);
                continue;
            }
            let gt = eval(&trial)?;
            if gt.norm() < g.norm() {
                x = trial;
                g = gt;
                moved = true;
                break;
            }
            scale *= T::lit(0.5);
        }
        if !moved {
            break;
        }
    }
    if g.norm() <= target {
        Ok(x.iter().take(n).cloned().collect())
    } else {
        Err(Error::NumericalStall(format!(
            "stationarity residual stuck at {:.3e}",
            g.norm().approx_f64()
        )))
    }
}

/// Projected-gradient descent of the perimeter from `start`.
///
/// Returns the final polygon and the trace. Triangles (zero-dimensional
/// manifold) and starts that already satisfy the gradient tolerance return
/// immediately.
pub fn minimize<T: Real>(
    start: &Polygon<T>,
    cfg: &OptimizerConfig<T>,
) -> Result<(Polygon<T>, OptimizerTrace<T>)> {
    cfg.validate()?;
    let angles = start.angles().clone();
    let mut current = start.clone();
    let mut trace = OptimizerTrace {
        iterates: Vec::new(),
        status: OptimizerStatus::MaxIters,
    };

    if current.n() == 3 {
        trace.iterates.push(TraceEntry {
            lengths: current.lengths().to_vec(),
            perimeter: current.perimeter(),
            projected_gradient_norm: T::zero(),
        });
        trace.status = OptimizerStatus::Converged;
        return Ok((current, trace));
    }

    // once this close, line-search decreases approach float resolution and
    // the stationarity finisher takes over
    let polish_switch = T::lit(1e-5).max(cfg.grad_tol);
    let mut warm_step = cfg.step0;
    let mut polish_attempted = false;
    for _ in 0..cfg.max_iters {
        let basis = current.tangent_basis()?;
        let grad = projected_gradient(&basis);
        let grad_norm = grad.norm();
        if grad_norm < polish_switch && grad_norm >= cfg.grad_tol && !polish_attempted {
            polish_attempted = true;
            if let Ok(polished) = polish_critical_point(&angles, current.lengths()) {
                if let Ok(candidate) = Polygon::build(angles.clone(), polished) {
                    // measured perimeters carry closure-slab noise of order
                    // the projection tolerance
                    if candidate.perimeter() <= current.perimeter() + T::PROJECT_TOL {
                        current = candidate;
                        continue;
                    }
                }
            }
        }
        trace.iterates.push(TraceEntry {
            lengths: current.lengths().to_vec(),
            perimeter: current.perimeter(),
            projected_gradient_norm: grad_norm,
        });
        if grad_norm < cfg.grad_tol {
            trace.status = OptimizerStatus::Converged;
            return Ok((current, trace));
        }

        let perimeter = current.perimeter();
        let gn2 = grad_norm * grad_norm;
        let lengths_now = current.lengths().to_vec();
        let trial_lengths = |t: T| -> Vec<T> {
            lengths_now
                .iter()
                .enumerate()
                .map(|(i, &l)| l - t * grad[i])
                .collect()
        };
        let try_project = |t: T| -> Result<Option<Polygon<T>>> {
            let candidate = trial_lengths(t);
            if candidate.iter().any(|&l| l <= T::MIN_EDGE) {
                return Ok(None);
            }
            match Polygon::project_floor(angles.clone(), &candidate) {
                Ok(next) => Ok(Some(next)),
                // too-large steps legitimately leave the Newton basin or
                // wander outside the convex cell; the caller shrinks
                Err(Error::ProjectionFailed { .. })
                | Err(Error::LeftDomain(_))
                | Err(Error::NotConvex(_))
                | Err(Error::NotOnManifold(_)) => Ok(None),
                Err(other) => Err(other),
            }
        };

        let mut step = (warm_step / cfg.shrink).min(T::lit(1e3));
        let mut accepted = false;
        let step_floor = cfg.step0 * T::lit(1e-14);
        while step > step_floor {
            if let Some(next) = try_project(step)? {
                let decrease = perimeter - next.perimeter();
                if decrease >= cfg.armijo * step * gn2 {
                    let mut best = next;
                    let mut best_step = step;
                    // One quadratic-interpolation refinement: a bare gradient
                    // step may overshoot to ≈ 2/λ and oscillate; the model
                    // minimizer gn²/c lands near 1/λ instead.
                    let two = T::one() + T::one();
                    let curvature = two * (step * gn2 - decrease) / (step * step);
                    if curvature > T::zero() {
                        // safeguarded: confined to [shrink·t, 0.95·t]
                        let t_opt = (gn2 / curvature)
                            .max(step * cfg.shrink)
                            .min(step * T::lit(0.95));
                        if let Some(refined) = try_project(t_opt)? {
                            if refined.perimeter() < best.perimeter() {
                                best = refined;
                                best_step = t_opt;
                            }
                        }
                    }
                    current = best;
                    warm_step = best_step;
                    accepted = true;
                    polish_attempted = false;
                    break;
                }
            }
            step *= cfg.shrink;
        }

        if !accepted {
            // does the positivity clip bind even for vanishing steps?
            let clipped: Vec<usize> = trial_lengths(step_floor)
                .iter()
                .enumerate()
                .filter(|(_, &l)| l <= T::MIN_EDGE)
                .map(|(i, _)| i)
                .collect();
            if !clipped.is_empty() {
                trace.status = OptimizerStatus::HitBoundary { edges: clipped };
                return Ok((current, trace));
            }
            // measured decreases have fallen below resolution; the finisher
            // settles whether this is the critical point
            if let Ok(polished) = polish_critical_point(&angles, current.lengths()) {
                if let Ok(candidate) = Polygon::build(angles.clone(), polished) {
                    if candidate.perimeter() <= current.perimeter() + T::PROJECT_TOL {
                        let gn = projected_gradient(&candidate.tangent_basis()?).norm();
                        if gn < cfg.grad_tol {
                            trace.iterates.push(TraceEntry {
                                lengths: candidate.lengths().to_vec(),
                                perimeter: candidate.perimeter(),
                                projected_gradient_norm: gn,
                            });
                            trace.status = OptimizerStatus::Converged;
                            return Ok((candidate, trace));
                        }
                    }
                }
            }
            return Err(Error::NumericalStall(format!(
                "line search exhausted at gradient norm {:.3e}",
                grad_norm.approx_f64()
            )));
        }
    }

    trace.status = OptimizerStatus::MaxIters;
    Ok((current, trace))
}

/// Perimeter-decreasing interior deformation at a boundary polygon.
///
/// For each maximal cyclic run of collapsed edges, every dual in the run is
/// decomposed over the duals flanking the run, eᵢ* = aᵢ·e\_prev* + bᵢ·e\_next*
/// (all four vectors lie in the spacelike plane orthogonal to the collapsed
/// vertex). Convexity forces aᵢ, bᵢ > 0 and the triangle inequality gives
/// aᵢ + bᵢ > 1. The returned tangent vector puts +1 on the run, −Σaᵢ on the
/// preceding edge and −Σbᵢ on the following one, so Σ l̇ᵢ eᵢ* = 0 and
/// Σ l̇ᵢ = Σ(1 − aᵢ − bᵢ) < 0.
pub fn boundary_direction<T: Real>(p: &Polygon<T>) -> Result<Vec<T>> {
    let n = p.n();
    let collapsed: Vec<bool> = p
        .lengths()
        .iter()
        .map(|&l| l <= T::ZERO_LENGTH_TOL)
        .collect();
    let zero_count = collapsed.iter().filter(|&&c| c).count();
    if zero_count == 0 {
        return Err(Error::InvalidInput(
            "boundary_direction requires at least one collapsed edge".into(),
        ));
    }
    if zero_count + 2 > n {
        return Err(Error::InvalidInput(
            "too many collapsed edges: need at least two positive ones".into(),
        ));
    }

    let mut direction = vec![T::zero(); n];
    let mut visited = vec![false; n];
    for start in 0..n {
        if !collapsed[start] || visited[start] || collapsed[(start + n - 1) % n] {
            continue;
        }
        // maximal run starting at `start`
        let mut run = Vec::new();
        let mut e = start;
        while collapsed[e] {
            visited[e] = true;
            run.push(e);
            e = (e + 1) % n;
        }
        let prev = (start + n - 1) % n;
        let next = e;

        let dp = p.duals()[prev].v();
        let dn = p.duals()[next].v();
        // 2×2 normal equations of the 3-equation least-squares system
        let gpp = dp.euclid_norm_sq();
        let gnn = dn.euclid_norm_sq();
        let gpn = dp.x0 * dn.x0 + dp.x1 * dn.x1 + dp.x2 * dn.x2;
        let det = gpp * gnn - gpn * gpn;
        if det.abs() <= T::default_epsilon() {
            return Err(Error::NotCoplanar(f64::INFINITY));
        }
        let mut sum_a = T::zero();
        let mut sum_b = T::zero();
        for &i in &run {
            let di = p.duals()[i].v();
            let rp = dp.x0 * di.x0 + dp.x1 * di.x1 + dp.x2 * di.x2;
            let rn = dn.x0 * di.x0 + dn.x1 * di.x1 + dn.x2 * di.x2;
            let a = (gnn * rp - gpn * rn) / det;
            let b = (gpp * rn - gpn * rp) / det;
            let fit = dp.scale(a) + dn.scale(b) - di;
            if fit.euclid_norm() > T::DECOMP_TOL {
                return Err(Error::NotCoplanar(fit.euclid_norm().approx_f64()));
            }
            if a <= T::zero() || b <= T::zero() || a + b <= T::one() {
                return Err(Error::ConvexityViolation {
                    index: i,
                    a: a.approx_f64(),
                    b: b.approx_f64(),
                });
            }
            direction[i] = T::one();
            sum_a += a;
            sum_b += b;
        }
        direction[prev] -= sum_a;
        direction[next] -= sum_b;
    }

    // the construction puts the direction in the kernel of the dual matrix
    let mut kernel_defect = Vec3::zero();
    for (i, d) in p.duals().iter().enumerate() {
        kernel_defect = kernel_defect + d.v().scale(direction[i]);
    }
    let defect = kernel_defect.euclid_norm();
    if defect > T::DECOMP_TOL * T::lit(n as f64) {
        return Err(Error::NotCoplanar(defect.approx_f64()));
    }
    Ok(direction)
}

/// Newton-solves a closed boundary polygon: the edges in `collapsed` are
/// pinned to zero and the remaining lengths are solved (minimum-norm) so the
/// path closes. Retries from jittered starting guesses if Newton wanders.
pub fn boundary_polygon<T: Real>(angles: &AngleSpec<T>, collapsed: &[usize]) -> Result<Polygon<T>> {
    let n = angles.n();
    let beta = angles.beta().to_vec();
    for idx in collapsed {
        if *idx >= n {
            return Err(Error::InvalidInput(format!(
                "collapsed index {} out of range",
                idx
            )));
        }
    }
    let free: Vec<usize> = (0..n).filter(|i| !collapsed.contains(i)).collect();
    if free.len() < 3 {
        return Err(Error::InvalidInput(
            "need at least three positive edges".into(),
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    'attempt: for attempt in 0..12 {
        let mut lengths = vec![T::zero(); n];
        for &i in &free {
            let jitter = if attempt == 0 {
                0.0
            } else {
                0.6 * (rng.random::<f64>() - 0.5)
            };
            lengths[i] = T::lit(1.0 + jitter);
        }

        for _ in 0..80 {
            let path = develop_path_from(&base_frame(), &beta, &lengths)?;
            let residual = developing::residual_of_path(&path)?;
            let res_norm = residual.euclid_norm();
            if res_norm <= T::PROJECT_TOL {
                match Polygon::build(angles.clone(), lengths) {
                    Ok(p) => return Ok(p),
                    Err(_) => continue 'attempt,
                }
            }
            let jac_full = developing::path_dual_matrix(&path);
            let jac = DMatrix::from_fn(3, free.len(), |r, c| jac_full[(r, free[c])]);
            let jjt = &jac * jac.transpose();
            let rhs = -DVector::from_vec(vec![residual.x0, residual.x1, residual.x2]);
            let Some(ch) = nalgebra::Cholesky::new(jjt) else {
                continue 'attempt;
            };
            let dl = jac.transpose() * ch.solve(&rhs);
            // damped update keeping free lengths positive
            let mut scale = T::one();
            let mut moved = false;
            for _ in 0..25 {
                let mut trial = lengths.clone();
                let mut positive = true;
                for (c, &i) in free.iter().enumerate() {
                    trial[i] = lengths[i] + scale * dl[c];
                    if trial[i] <= T::zero() {
                        positive = false;
                        break;
                    }
                }
                if positive {
                    let trial_path = develop_path_from(&base_frame(), &beta, &trial)?;
                    let trial_res = developing::residual_of_path(&trial_path)?;
                    if trial_res.euclid_norm() < res_norm {
                        lengths = trial;
                        moved = true;
                        break;
                    }
                }
                scale *= T::lit(0.5);
            }
            if !moved {
                continue 'attempt;
            }
        }
    }
    Err(Error::ProjectionFailed {
        iterations: 80,
        residual: f64::INFINITY,
    })
}

/// Result of a [`verify_theorem`] run, serializable for the CLI.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremReport {
    pub angles_rad: Vec<f64>,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    /// Perimeter of the incircle polygon.
    pub incircle_perimeter: f64,
    pub incircle_radius: f64,
    /// True for triangles, whose manifold is a single point.
    pub zero_dimensional: bool,
    pub gap_min: f64,
    pub gap_max: f64,
    pub gap_mean: f64,
    /// Descent iteration count per sample.
    pub iterations: Vec<usize>,
    pub max_length_error: f64,
    pub violations: Vec<String>,
    pub passed: bool,
}

/// Verifies numerically, for one angle vector, that the incircle polygon
/// minimizes the perimeter: every sampled polygon has perimeter at least the
/// incircle's (strictly, once clearly separated from it) and descent from
/// every sample returns to the incircle lengths.
pub fn verify_theorem<T: Real>(
    angles: &AngleSpec<T>,
    samples: usize,
    seed: u64,
) -> Result<TheoremReport> {
    let sol = incircle::solve(angles)?;
    let p_star = &sol.polygon;
    let perim_star = p_star.perimeter();
    let n = angles.n();

    let mut report = TheoremReport {
        angles_rad: angles.beta().iter().map(|b| b.approx_f64()).collect(),
        n,
        seed,
        samples,
        incircle_perimeter: perim_star.approx_f64(),
        incircle_radius: sol.radius.approx_f64(),
        zero_dimensional: n == 3,
        gap_min: f64::INFINITY,
        gap_max: f64::NEG_INFINITY,
        gap_mean: 0.0,
        iterations: Vec::new(),
        max_length_error: 0.0,
        violations: Vec::new(),
        passed: true,
    };

    if n == 3 {
        // the manifold is a single point; sampling returns the triangle itself
        report.gap_min = 0.0;
        report.gap_max = 0.0;
        report.passed = true;
        return Ok(report);
    }

    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let cfg = OptimizerConfig::<T>::default();
    let mut gap_sum = 0.0f64;

    for k in 0..samples {
        let step = T::lit(0.02 + 0.33 * master.random::<f64>());
        let sub_seed = master.random::<u64>();
        let q = match Polygon::sample_from(p_star, sub_seed, step) {
            Ok(q) => q,
            Err(e) => {
                report.passed = false;
                report
                    .violations
                    .push(format!("sample {} failed: {}", k, e));
                continue;
            }
        };

        let gap = (q.perimeter() - perim_star).approx_f64();
        report.gap_min = report.gap_min.min(gap);
        report.gap_max = report.gap_max.max(gap);
        gap_sum += gap;

        if gap < -T::THEOREM_GAP_TOL.approx_f64() {
            report.passed = false;
            report.violations.push(format!(
                "sample {} undercuts the incircle perimeter by {:.3e}",
                k, -gap
            ));
        }
        let separation = q
            .lengths()
            .iter()
            .zip(p_star.lengths())
            .map(|(&a, &b)| (a - b) * (a - b))
            .fold(T::zero(), |acc, d| acc + d)
            .sqrt();
        if separation > T::THEOREM_SEPARATION && gap <= T::THEOREM_STRICT_GAP.approx_f64() {
            report.passed = false;
            report.violations.push(format!(
                "sample {} separated by {:.3e} has gap only {:.3e}",
                k,
                separation.approx_f64(),
                gap
            ));
        }

        match minimize(&q, &cfg) {
            Ok((minimized, trace)) => {
                report.iterations.push(trace.iterates.len());
                let err = minimized
                    .lengths()
                    .iter()
                    .zip(p_star.lengths())
                    .map(|(&a, &b)| (a - b) * (a - b))
                    .fold(T::zero(), |acc, d| acc + d)
                    .sqrt();
                report.max_length_error = report.max_length_error.max(err.approx_f64());
                if err > T::THEOREM_LENGTH_MATCH {
                    report.passed = false;
                    report.violations.push(format!(
                        "descent from sample {} ended {:.3e} away from the incircle lengths",
                        k,
                        err.approx_f64()
                    ));
                }
                // monotone up to the closure-slab measurement noise
                let slack = T::PROJECT_TOL.approx_f64();
                let mut last = f64::INFINITY;
                for entry in &trace.iterates {
                    let perim = entry.perimeter.approx_f64();
                    if perim > last + slack {
                        report.passed = false;
                        report
                            .violations
                            .push(format!("descent from sample {} was not monotone", k));
                        break;
                    }
                    last = perim;
                }
            }
            Err(e) => {
                report.passed = false;
                report
                    .violations
                    .push(format!("descent from sample {} failed: {}", k, e));
            }
        }
    }

    if samples > 0 {
        report.gap_mean = gap_sum / samples as f64;
    } else {
        report.gap_min = 0.0;
        report.gap_max = 0.0;
    }
    Ok(report)
}

impl TheoremReport {
    pub fn to_json_string(&self) -> String {
        crate::jsonfmt::to_json_string(self)
    }
}

//! Small dense linear-algebra kernels.
//!
//! The ambient matrices here are tiny (3 or 4 rows, up to a few dozen
//! columns), but the rank and null-space questions asked of them are sharp:
//! the acceptance thresholds sit at 1e−9 and below, which rules out forming
//! normal equations. Null spaces come from a full Householder QR, singular
//! values from one-sided Jacobi rotations; both are backward stable.

use crate::real::Real;
use nalgebra::DMatrix;

/// Full Householder QR of a tall matrix `a` (m×k, m ≥ k).
///
/// Returns (Q, R) with Q m×m orthogonal and R m×k upper trapezoidal. The
/// last m−k columns of Q span the orthogonal complement of the column space.
pub(crate) fn householder_full_qr<T: Real>(a: &DMatrix<T>) -> (DMatrix<T>, DMatrix<T>) {
    let (m, k) = a.shape();
    assert!(m >= k, "householder_full_qr expects a tall matrix");
    let mut r = a.clone();
    let mut q = DMatrix::<T>::identity(m, m);

    for j in 0..k {
        // Householder vector for column j below the diagonal.
        let mut norm_sq = T::zero();
        for i in j..m {
            norm_sq += r[(i, j)] * r[(i, j)];
        }
        let norm = norm_sq.sqrt();
        if norm == T::zero() {
            continue;
        }
        let alpha = if r[(j, j)] >= T::zero() { -norm } else { norm };
        let mut v = vec![T::zero(); m];
        for i in j..m {
            v[i] = r[(i, j)];
        }
        v[j] -= alpha;
        let v_norm_sq = v.iter().fold(T::zero(), |acc, &x| acc + x * x);
        if v_norm_sq == T::zero() {
            continue;
        }
        let beta = (T::one() + T::one()) / v_norm_sq;

        // r ← (I − β v vᵀ) r
        for c in j..k {
            let mut dot = T::zero();
            for i in j..m {
                dot += v[i] * r[(i, c)];
            }
            let s = beta * dot;
            for i in j..m {
                r[(i, c)] -= s * v[i];
            }
        }
        // q ← q (I − β v vᵀ), accumulating Q = H₁ H₂ ⋯
        for row in 0..m {
            let mut dot = T::zero();
            for i in j..m {
                dot += q[(row, i)] * v[i];
            }
            let s = beta * dot;
            for i in j..m {
                q[(row, i)] -= s * v[i];
            }
        }
    }
    (q, r)
}

/// Singular values and right singular vectors by one-sided Jacobi.
///
/// Orthogonalizes the columns of `a` (m×k, m ≥ k) with plane rotations; at
/// convergence the column norms are the singular values and the accumulated
/// rotations form V. Returned in descending order.
pub(crate) fn jacobi_svd<T: Real>(a: &DMatrix<T>) -> (Vec<T>, DMatrix<T>) {
    let (m, k) = a.shape();
    assert!(m >= k, "jacobi_svd expects a tall matrix");
    let mut w = a.clone();
    let mut v = DMatrix::<T>::identity(k, k);
    let eps = T::default_epsilon();
    let frob_sq = (0..k).fold(T::zero(), |acc, c| {
        (0..m).fold(acc, |a, r| a + w[(r, c)] * w[(r, c)])
    });
    let abs_floor = eps * eps * frob_sq;

    for _sweep in 0..40 {
        let mut rotated = false;
        for p in 0..k {
            for q in (p + 1)..k {
                let mut alpha = T::zero();
                let mut beta = T::zero();
                let mut gamma = T::zero();
                for i in 0..m {
                    alpha += w[(i, p)] * w[(i, p)];
                    beta += w[(i, q)] * w[(i, q)];
                    gamma += w[(i, p)] * w[(i, q)];
                }
                if gamma.abs() <= eps * (alpha * beta).sqrt() || gamma * gamma <= abs_floor {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / ((T::one() + T::one()) * gamma);
                let t = zeta.signum() / (zeta.abs() + (T::one() + zeta * zeta).sqrt());
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = c * t;
                for i in 0..m {
                    let wp = w[(i, p)];
                    let wq = w[(i, q)];
                    w[(i, p)] = c * wp - s * wq;
                    w[(i, q)] = s * wp + c * wq;
                }
                for i in 0..k {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = c * vp - s * vq;
                    v[(i, q)] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<T> = (0..k)
        .map(|c| {
            (0..m)
                .fold(T::zero(), |a, r| a + w[(r, c)] * w[(r, c)])
                .sqrt()
        })
        .collect();
    order.sort_by(|&i, &j| norms[j].partial_cmp(&norms[i]).unwrap());
    let sigma: Vec<T> = order.iter().map(|&i| norms[i]).collect();
    let mut v_sorted = DMatrix::<T>::zeros(k, k);
    for (new_c, &old_c) in order.iter().enumerate() {
        for r in 0..k {
            v_sorted[(r, new_c)] = v[(r, old_c)];
        }
    }
    (sigma, v_sorted)
}

/// Singular values only.
pub(crate) fn singular_values<T: Real>(a: &DMatrix<T>) -> Vec<T> {
    jacobi_svd(a).0
}

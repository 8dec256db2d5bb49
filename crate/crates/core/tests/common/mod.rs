//! Shared generators and oracles for the integration suites.
//!
//! Everything here is independent of the code paths under test: finite
//! differences go through `closure_residual` values only, the null-space
//! oracle uses a symmetric eigendecomposition instead of the library's QR,
//! and triangle edge lengths come from the dual law of cosines.

#![allow(dead_code)]

use hypoly::developing;
use hypoly::polygon::{AngleSpec, Polygon};
use hypoly::Vec3;
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

/// Seeded admissible angle vector at desk scale: n angles in
/// (0.15, π−0.12) with Σ(π−βᵢ) ≥ 2π + 0.35.
pub fn admissible_angles(rng: &mut ChaCha8Rng, n: usize) -> AngleSpec<f64> {
    loop {
        let raw: Vec<f64> = (0..n).map(|_| 0.25 + rng.random::<f64>()).collect();
        let total: f64 = raw.iter().sum();
        let max_sum = n as f64 * (PI - 0.15);
        let span = (max_sum - (2.0 * PI + 0.45)).min(3.0);
        let target = 2.0 * PI + 0.35 + rng.random::<f64>() * span.max(0.0);
        let etas: Vec<f64> = raw.iter().map(|w| w * target / total).collect();
        if etas.iter().all(|&e| e > 0.12 && e < PI - 0.15) {
            let beta = etas.iter().map(|&e| PI - e).collect();
            return AngleSpec::new(beta).expect("construction is admissible");
        }
    }
}

/// A random closed polygon: incircle polygon of random admissible angles,
/// pushed along a random tangent direction.
pub fn random_polygon(rng: &mut ChaCha8Rng, n: usize) -> Polygon<f64> {
    let angles = admissible_angles(rng, n);
    let step = 0.05 + 0.25 * rng.random::<f64>();
    let seed = rng.random::<u64>();
    Polygon::sample(&angles, seed, step).expect("sampling from a fresh incircle polygon")
}

/// Central finite differences of the closure residual.
pub fn fd_jacobian(angles: &[f64], lengths: &[f64], h: f64) -> DMatrix<f64> {
    let n = lengths.len();
    DMatrix::from_fn(3, n, |r, c| {
        let mut plus = lengths.to_vec();
        plus[c] += h;
        let mut minus = lengths.to_vec();
        minus[c] -= h;
        let rp = developing::closure_residual(angles, &plus).unwrap();
        let rm = developing::closure_residual(angles, &minus).unwrap();
        let d = (rp - rm).scale(1.0 / (2.0 * h));
        match r {
            0 => d.x0,
            1 => d.x1,
            _ => d.x2,
        }
    })
}

/// Triangle edge lengths from the dual law of cosines,
/// cosh l = (cos(opposite) + cos·cos)/( sin·sin), in the crate's edge order.
pub fn triangle_edges_by_law_of_cosines(beta: &[f64]) -> [f64; 3] {
    assert_eq!(beta.len(), 3);
    let edge = |opp: f64, x: f64, y: f64| {
        ((opp.cos() + x.cos() * y.cos()) / (x.sin() * y.sin())).acosh()
    };
    // edge e joins the vertices of angles beta[e−1], beta[e] (cyclic)
    [
        edge(beta[1], beta[2], beta[0]),
        edge(beta[2], beta[0], beta[1]),
        edge(beta[0], beta[1], beta[2]),
    ]
}

/// Null-space oracle through the eigendecomposition of AᵀA: returns the
/// number of eigenvalues below `tol` and the residual of projecting `probe`
/// out of the corresponding eigenspace.
pub fn null_space_oracle(a: &DMatrix<f64>, tol: f64, probe: &DMatrix<f64>) -> (usize, f64) {
    let ata = a.transpose() * a;
    let eig = nalgebra::SymmetricEigen::new(ata);
    let n = a.ncols();
    let mut null_cols: Vec<usize> = Vec::new();
    for i in 0..n {
        if eig.eigenvalues[i].abs() < tol {
            null_cols.push(i);
        }
    }
    // projector onto the eigen-null-space
    let mut worst: f64 = 0.0;
    for c in 0..probe.ncols() {
        let v = probe.column(c);
        let mut proj = nalgebra::DVector::<f64>::zeros(n);
        for &i in &null_cols {
            let u = eig.eigenvectors.column(i);
            proj += u * (u.dot(&v));
        }
        worst = worst.max((&proj - v).norm());
    }
    (null_cols.len(), worst)
}

/// Euclidean norm of a residual triple.
pub fn vec3_norm(v: Vec3) -> f64 {
    v.euclid_norm()
}

/// Euclidean distance between two length vectors.
pub fn length_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

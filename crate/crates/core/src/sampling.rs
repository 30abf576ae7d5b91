//! Deterministic low-discrepancy sampling used by certificates and optimizers.

use crate::scalar::{rabs, Real};
use nalgebra::DVector;

const PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Van der Corput radical inverse of `index` in base `base`.
pub fn radical_inverse(mut index: u64, base: u64) -> f64 {
    let mut inv = 0.0;
    let mut denom = 1.0;
    let b = base as f64;
    while index > 0 {
        denom *= b;
        inv += (index % base) as f64 / denom;
        index /= base;
    }
    inv
}

/// `count` Halton points in the unit cube `[0,1)^dim`, skipping the origin.
pub fn halton(dim: usize, count: usize) -> Vec<Vec<f64>> {
    assert!(dim <= PRIMES.len(), "halton limited to {} dims", PRIMES.len());
    (1..=count as u64)
        .map(|i| (0..dim).map(|d| radical_inverse(i, PRIMES[d])).collect())
        .collect()
}

/// Deterministic quasi-random directions on the Euclidean unit sphere of `dim`,
/// via Box-Muller applied to Halton pairs. Coordinate axes are always included.
pub fn sphere_directions<T: Real>(dim: usize, count: usize) -> Vec<DVector<T>> {
    let mut dirs = Vec::with_capacity(count + 2 * dim);
    for i in 0..dim {
        let mut e = DVector::zeros(dim);
        e[i] = T::one();
        dirs.push(e.clone());
        dirs.push(-e);
    }
    let pairs = dim.div_ceil(2);
    let cube = halton(2 * pairs, count);
    for pt in cube {
        let mut v = vec![0.0f64; dim];
        for p in 0..pairs {
            let u1 = pt[2 * p].max(1e-12);
            let u2 = pt[2 * p + 1];
            let r = (-2.0 * u1.ln()).sqrt();
            let theta = 2.0 * std::f64::consts::PI * u2;
            v[2 * p] = r * theta.cos();
            if 2 * p + 1 < dim {
                v[2 * p + 1] = r * theta.sin();
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-9 {
            continue;
        }
        dirs.push(DVector::from_iterator(dim, v.iter().map(|x| T::of(x / norm))));
    }
    dirs
}

/// Points of the ball `{x : ‖x‖₂ ≤ 1}`: alternating boundary and interior
/// probes derived from a `dim+1`-dimensional Halton sequence.
pub fn ball_probes<T: Real>(dim: usize, count: usize) -> Vec<DVector<T>> {
    let dirs = sphere_directions::<T>(dim, count);
    let radii = halton(1, dirs.len());
    dirs.into_iter()
        .zip(radii)
        .enumerate()
        .map(|(i, (d, r))| {
            if i % 2 == 0 {
                d
            } else {
                d * T::of(r[0])
            }
        })
        .collect()
}

/// Evenly spaced grid of initial conditions in the cube `[-extent, extent]^dim`.
pub fn grid_points<T: Real>(dim: usize, per_axis: usize, extent: T) -> Vec<DVector<T>> {
    let mut pts = Vec::new();
    let total = per_axis.pow(dim as u32);
    for idx in 0..total {
        let mut rem = idx;
        let mut x = DVector::zeros(dim);
        for d in 0..dim {
            let j = rem % per_axis;
            rem /= per_axis;
            let t = if per_axis == 1 {
                T::zero()
            } else {
                T::of(j as f64) / T::of((per_axis - 1) as f64) * T::of(2.0) - T::one()
            };
            x[d] = t * extent;
        }
        pts.push(x);
    }
    pts
}

/// Lexicographic comparison of vectors, used for deterministic tie-breaking.
pub fn lex_less<T: Real>(a: &DVector<T>, b: &DVector<T>) -> bool {
    for i in 0..a.len().min(b.len()) {
        if a[i] < b[i] {
            return true;
        }
        if a[i] > b[i] {
            return false;
        }
    }
    a.len() < b.len()
}

/// Index of the lexicographically smallest vector.
pub fn lex_min_index<T: Real>(points: &[DVector<T>]) -> usize {
    let mut best = 0;
    for i in 1..points.len() {
        if lex_less(&points[i], &points[best]) {
            best = i;
        }
    }
    best
}

/// True if any coordinate differs by more than `tol`.
pub fn differs<T: Real>(a: &DVector<T>, b: &DVector<T>, tol: T) -> bool {
    a.iter().zip(b.iter()).any(|(x, y)| rabs(*x - *y) > tol)
}

//! Small dense linear-algebra helpers shared across modules.

use crate::error::{Error, Result};
use crate::scalar::Real;
use nalgebra::{DMatrix, DVector};

/// Relative singular-value threshold for numerical rank decisions.
pub const RANK_RTOL: f64 = 1e-10;

/// Singular values of `a`, largest first.
pub fn singular_values<T: Real>(a: &DMatrix<T>) -> Vec<T> {
    let svd = a.clone().svd(false, false);
    let mut s: Vec<T> = svd.singular_values.iter().copied().collect();
    s.sort_by(|x, y| y.partial_cmp(x).unwrap());
    s
}

/// Numerical rank: singular values above `RANK_RTOL` times the largest.
pub fn numerical_rank<T: Real>(a: &DMatrix<T>) -> usize {
    let s = singular_values(a);
    match s.first() {
        None => 0,
        Some(&s0) if s0 == T::zero() => 0,
        Some(&s0) => s.iter().filter(|&&x| x > T::of(RANK_RTOL) * s0).count(),
    }
}

/// Spectral norm (largest singular value).
pub fn spectral_norm<T: Real>(a: &DMatrix<T>) -> T {
    singular_values(a).first().copied().unwrap_or_else(T::zero)
}

/// Orthonormal basis of the column space, truncated at numerical rank.
pub fn orthonormal_columns<T: Real>(a: &DMatrix<T>) -> DMatrix<T> {
    if a.ncols() == 0 {
        return a.clone();
    }
    let svd = a.clone().svd(true, false);
    let u = svd.u.expect("svd with u");
    let s = &svd.singular_values;
    let smax = s.iter().copied().fold(T::zero(), |m, x| if x > m { x } else { m });
    let rank = if smax == T::zero() {
        0
    } else {
        s.iter().filter(|&&x| x > T::of(RANK_RTOL) * smax).count()
    };
    u.columns(0, rank).into_owned()
}

/// Solve `a x = b` for square `a`; errors when `a` is singular.
pub fn solve<T: Real>(a: &DMatrix<T>, b: &DVector<T>) -> Result<DVector<T>> {
    a.clone()
        .lu()
        .solve(b)
        .ok_or_else(|| Error::NumericalFailure("singular linear system".into()))
}

/// Inverse of a square matrix; errors when singular.
pub fn inverse<T: Real>(a: &DMatrix<T>) -> Result<DMatrix<T>> {
    a.clone()
        .try_inverse()
        .ok_or_else(|| Error::NumericalFailure("matrix not invertible".into()))
}

/// Minimum-Euclidean-norm solution of `bᵀ t = g` (i.e. `t = b (bᵀb)⁻¹ g`).
pub fn min_norm_preimage<T: Real>(b: &DMatrix<T>, g: &DVector<T>) -> Result<DVector<T>> {
    let gram = b.transpose() * b;
    let z = solve(&gram, g)?;
    Ok(b * z)
}

/// Serde representation of matrices as row-major `Vec<Vec<T>>`.
pub mod serde_matrix {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Real, S: Serializer>(m: &DMatrix<T>, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<T>> = (0..m.nrows())
            .map(|i| (0..m.ncols()).map(|j| m[(i, j)]).collect())
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, T: Real, D: Deserializer<'de>>(d: D) -> std::result::Result<DMatrix<T>, D::Error> {
        let rows: Vec<Vec<T>> = Vec::deserialize(d)?;
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(serde::de::Error::custom("ragged matrix rows"));
        }
        Ok(DMatrix::from_fn(nrows, ncols, |i, j| rows[i][j]))
    }
}

/// Serde representation of vectors as `Vec<T>`.
pub mod serde_vector {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Real, S: Serializer>(v: &DVector<T>, s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().copied().collect::<Vec<T>>().serialize(s)
    }

    pub fn deserialize<'de, T: Real, D: Deserializer<'de>>(d: D) -> std::result::Result<DVector<T>, D::Error> {
        let v: Vec<T> = Vec::deserialize(d)?;
        Ok(DVector::from_vec(v))
    }
}

/// Serde representation of a list of vectors.
pub mod serde_vectors {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<T: Real, S: Serializer>(v: &[DVector<T>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<T>> = v.iter().map(|x| x.iter().copied().collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, T: Real, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<DVector<T>>, D::Error> {
        let rows: Vec<Vec<T>> = Vec::deserialize(d)?;
        Ok(rows.into_iter().map(DVector::from_vec).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_rank_one_matrix() {
        let a = DMatrix::<f64>::from_fn(4, 3, |i, j| (i as f64 + 1.0) * (j as f64 + 1.0));
        assert_eq!(numerical_rank(&a), 1);
    }

    #[test]
    fn orthonormal_columns_are_orthonormal() {
        let a = DMatrix::<f64>::from_row_slice(3, 2, &[1.0, 1.0, 0.0, 1.0, 1.0, 0.0]);
        let q = orthonormal_columns(&a);
        let gram = q.transpose() * &q;
        assert!((gram - DMatrix::<f64>::identity(2, 2)).amax() < 1e-12);
    }

    #[test]
    fn min_norm_preimage_satisfies_constraint() {
        let b = DMatrix::<f64>::from_row_slice(3, 2, &[1.0, 0.0, 0.0, 1.0, 1.0, 1.0]);
        let g = DVector::from_vec(vec![2.0, -1.0]);
        let t = min_norm_preimage(&b, &g).unwrap();
        let back = b.transpose() * t;
        assert!((back - g).amax() < 1e-12);
    }
}

//! Finite-dimensional normed spaces: norm and dual-norm evaluation, subspaces,
//! point clouds, Hausdorff semi-distance, and exact maximization of linear
//! functionals over unit balls (the workhorse behind Auerbach bases and
//! functional-norm certificates).

use crate::error::{Error, Result};
use crate::linalg::{self, solve};
use crate::sampling;
use crate::scalar::{rabs, rfinite, rmax, rmin, rpowf, rsqrt, Real};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Multiplicative margin applied to the sampled dual-norm evaluation for
/// matrix-induced norms, making the returned value a certified overestimate.
pub const INDUCED_DUAL_INFLATION: f64 = 1e-3;

/// Number of quasi-random directions used by sampled dual-norm evaluation.
pub const DUAL_SAMPLE_DIRECTIONS: usize = 4096;

/// The supported norm families on ℝᵐ.
#[derive(Debug, Clone, PartialEq)]
pub enum NormKind<T: Real> {
    L1,
    L2,
    Linf,
    /// `‖v‖ = (Σ wᵢ |vᵢ|^p)^{1/p}` with `p ≥ 1` and positive weights.
    WeightedP { p: T, weights: Vec<T> },
    /// `‖v‖ = ‖M v‖₂` for an invertible matrix `M`.
    Induced { matrix: DMatrix<T> },
}

/// A norm on ℝᵐ, together with the dimension it acts on.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "NormWire<T>", into = "NormWire<T>")]
#[serde(bound = "T: Real")]
pub struct NormDescriptor<T: Real> {
    kind: NormKind<T>,
    dimension: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "T: Real")]
struct NormWire<T: Real> {
    kind: String,
    dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    p: Option<T>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    weights: Option<Vec<T>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    matrix: Option<Vec<Vec<T>>>,
}

impl<T: Real> From<NormDescriptor<T>> for NormWire<T> {
    fn from(nd: NormDescriptor<T>) -> Self {
        let (kind, p, weights, matrix) = match nd.kind {
            NormKind::L1 => ("l1".into(), None, None, None),
            NormKind::L2 => ("l2".into(), None, None, None),
            NormKind::Linf => ("linf".into(), None, None, None),
            NormKind::WeightedP { p, weights } => ("weighted_p".into(), Some(p), Some(weights), None),
            NormKind::Induced { matrix } => {
                let rows = (0..matrix.nrows())
                    .map(|i| (0..matrix.ncols()).map(|j| matrix[(i, j)]).collect())
                    .collect();
                ("induced".into(), None, None, Some(rows))
            }
        };
        NormWire { kind, dimension: nd.dimension, p, weights, matrix }
    }
}

impl<T: Real> TryFrom<NormWire<T>> for NormDescriptor<T> {
    type Error = Error;

    fn try_from(w: NormWire<T>) -> Result<Self> {
        match w.kind.as_str() {
            "l1" => Ok(NormDescriptor::l1(w.dimension)),
            "l2" => Ok(NormDescriptor::l2(w.dimension)),
            "linf" => Ok(NormDescriptor::linf(w.dimension)),
            "weighted_p" => {
                let p = w.p.ok_or_else(|| Error::Serialization("weighted_p needs p".into()))?;
                let weights = w.weights.ok_or_else(|| Error::Serialization("weighted_p needs weights".into()))?;
                NormDescriptor::weighted_p(p, weights)
            }
            "induced" => {
                let rows = w.matrix.ok_or_else(|| Error::Serialization("induced needs matrix".into()))?;
                let n = rows.len();
                if rows.iter().any(|r| r.len() != n) {
                    return Err(Error::Serialization("induced matrix must be square".into()));
                }
                NormDescriptor::induced(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
            }
            other => Err(Error::Serialization(format!("unknown norm kind {other:?}"))),
        }
    }
}

impl<T: Real> NormDescriptor<T> {
    pub fn l1(dimension: usize) -> Self {
        Self { kind: NormKind::L1, dimension }
    }

    pub fn l2(dimension: usize) -> Self {
        Self { kind: NormKind::L2, dimension }
    }

    pub fn linf(dimension: usize) -> Self {
        Self { kind: NormKind::Linf, dimension }
    }

    pub fn weighted_p(p: T, weights: Vec<T>) -> Result<Self> {
        if p < T::one() {
            return Err(Error::InvalidParameter(format!("weighted_p needs p >= 1, got {p}")));
        }
        if weights.is_empty() || weights.iter().any(|&w| w <= T::zero() || !rfinite(w)) {
            return Err(Error::InvalidParameter("weights must be positive reals".into()));
        }
        let dimension = weights.len();
        Ok(Self { kind: NormKind::WeightedP { p, weights }, dimension })
    }

    pub fn induced(matrix: DMatrix<T>) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
            return Err(Error::InvalidParameter("induced norm needs a square matrix".into()));
        }
        let s = linalg::singular_values(&matrix);
        let (smax, smin) = (s[0], s[s.len() - 1]);
        if smin <= T::of(linalg::RANK_RTOL) * smax {
            return Err(Error::InvalidParameter("induced norm matrix must be invertible".into()));
        }
        let dimension = matrix.nrows();
        Ok(Self { kind: NormKind::Induced { matrix }, dimension })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn kind(&self) -> &NormKind<T> {
        &self.kind
    }

    pub fn is_l2(&self) -> bool {
        matches!(self.kind, NormKind::L2)
    }

    fn check_dim(&self, v: &DVector<T>) -> Result<()> {
        if v.len() != self.dimension {
            return Err(Error::DimensionMismatch { expected: self.dimension, got: v.len() });
        }
        Ok(())
    }
}

/// Evaluate `‖v‖` under the descriptor. Exact for ℓ¹/ℓ²/ℓ∞.
pub fn norm_eval<T: Real>(v: &DVector<T>, nd: &NormDescriptor<T>) -> Result<T> {
    nd.check_dim(v)?;
    Ok(match &nd.kind {
        NormKind::L1 => v.iter().map(|x| rabs(*x)).sum(),
        NormKind::L2 => rsqrt(v.iter().map(|x| *x * *x).sum()),
        NormKind::Linf => v.iter().fold(T::zero(), |m, x| rmax(m, rabs(*x))),
        NormKind::WeightedP { p, weights } => {
            if *p == T::one() {
                v.iter().zip(weights).map(|(x, w)| *w * rabs(*x)).sum()
            } else {
                let s: T = v.iter().zip(weights).map(|(x, w)| *w * rpowf(rabs(*x), *p)).sum();
                rpowf(s, T::one() / *p)
            }
        }
        NormKind::Induced { matrix } => (matrix * v).norm(),
    })
}

/// Evaluate the dual norm `sup { |f·v| : ‖v‖ ≤ 1 }`.
///
/// Closed form for the ℓᵖ family (dual exponent). For matrix-induced norms the
/// value is a maximization over sampled directions plus the analytic candidate
/// direction, inflated by [`INDUCED_DUAL_INFLATION`] so the result is a
/// certified overestimate.
pub fn dual_norm_eval<T: Real>(f: &DVector<T>, nd: &NormDescriptor<T>) -> Result<T> {
    nd.check_dim(f)?;
    Ok(match &nd.kind {
        NormKind::L1 => f.iter().fold(T::zero(), |m, x| rmax(m, rabs(*x))),
        NormKind::L2 => f.norm(),
        NormKind::Linf => f.iter().map(|x| rabs(*x)).sum(),
        NormKind::WeightedP { p, weights } => {
            if *p == T::one() {
                f.iter()
                    .zip(weights)
                    .fold(T::zero(), |m, (x, w)| rmax(m, rabs(*x) / *w))
            } else {
                // dual exponent q with 1/p + 1/q = 1; dual weights w^{1-q}
                let q = *p / (*p - T::one());
                let s: T = f
                    .iter()
                    .zip(weights)
                    .map(|(x, w)| rpowf(*w, T::one() - q) * rpowf(rabs(*x), q))
                    .sum();
                rpowf(s, T::one() / q)
            }
        }
        NormKind::Induced { matrix } => {
            let m = nd.dimension;
            let minv = linalg::inverse(matrix)?;
            let mut candidates = sampling::sphere_directions::<T>(m, DUAL_SAMPLE_DIRECTIONS);
            // analytic maximizer of |f·v| subject to ‖Mv‖₂ ≤ 1
            let g = minv.transpose() * f;
            if g.norm() > T::zero() {
                candidates.push(&minv * (&g / g.norm()));
            }
            let mut best = T::zero();
            for dir in candidates {
                let n = norm_eval(&dir, nd)?;
                if n > T::zero() {
                    best = rmax(best, rabs(f.dot(&dir)) / n);
                }
            }
            best * T::of(1.0 + INDUCED_DUAL_INFLATION)
        }
    })
}

/// A finite sample of a compact set `K ⊂ ℝᵐ`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct PointCloud<T: Real> {
    #[serde(with = "linalg::serde_vectors")]
    points: Vec<DVector<T>>,
    ambient_dim: usize,
}

impl<T: Real> PointCloud<T> {
    pub fn new(points: Vec<DVector<T>>) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyCloud)?;
        let ambient_dim = first.len();
        if points.iter().any(|p| p.len() != ambient_dim) {
            return Err(Error::DimensionMismatch { expected: ambient_dim, got: 0 });
        }
        Ok(Self { points, ambient_dim })
    }

    pub fn points(&self) -> &[DVector<T>] {
        &self.points
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Largest pairwise distance under `nd` (brute force).
    pub fn diameter(&self, nd: &NormDescriptor<T>) -> Result<T> {
        let mut d = T::zero();
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                d = rmax(d, norm_eval(&(&self.points[i] - &self.points[j]), nd)?);
            }
        }
        Ok(d)
    }
}

/// One-sided Hausdorff distance `max_{a∈A} min_{b∈B} ‖a−b‖`.
pub fn hausdorff_semidist<T: Real>(
    a: &PointCloud<T>,
    b: &PointCloud<T>,
    nd: &NormDescriptor<T>,
) -> Result<T> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch { expected: a.ambient_dim, got: b.ambient_dim });
    }
    let mut worst = T::zero();
    for pa in &a.points {
        let mut nearest = T::infinity();
        for pb in &b.points {
            let d = norm_eval(&(pa - pb), nd)?;
            if d < nearest {
                nearest = d;
            }
            if nearest <= worst {
                break;
            }
        }
        worst = rmax(worst, nearest);
    }
    Ok(worst)
}

/// An `n`-dimensional subspace of ℝᵐ, stored as a full-rank `m×n` basis matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct Subspace<T: Real> {
    #[serde(with = "linalg::serde_matrix")]
    basis: DMatrix<T>,
}

impl<T: Real> Subspace<T> {
    /// Build from basis columns; rejects rank-deficient input
    /// (smallest singular value must exceed `1e-10` times the largest).
    pub fn new(basis: DMatrix<T>) -> Result<Self> {
        let (m, n) = basis.shape();
        if n == 0 || n > m {
            return Err(Error::InvalidParameter(format!("subspace needs 1 <= n <= m, got n={n}, m={m}")));
        }
        let s = linalg::singular_values(&basis);
        if s[0] == T::zero() || s[n - 1] <= T::of(linalg::RANK_RTOL) * s[0] {
            return Err(Error::RankDeficient { rank: linalg::numerical_rank(&basis), requested: n });
        }
        Ok(Self { basis })
    }

    pub fn from_columns(cols: &[DVector<T>]) -> Result<Self> {
        let m = cols.first().map(|c| c.len()).unwrap_or(0);
        Self::new(DMatrix::from_fn(m, cols.len(), |i, j| cols[j][i]))
    }

    /// Full ambient space ℝᵐ.
    pub fn full(m: usize) -> Self {
        Self { basis: DMatrix::identity(m, m) }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(m: usize, axes: &[usize]) -> Result<Self> {
        let mut basis = DMatrix::zeros(m, axes.len());
        for (j, &ax) in axes.iter().enumerate() {
            if ax >= m {
                return Err(Error::InvalidParameter(format!("axis {ax} out of range for m={m}")));
            }
            basis[(ax, j)] = T::one();
        }
        Self::new(basis)
    }

    pub fn basis(&self) -> &DMatrix<T> {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Member of the subspace with the given coordinates.
    pub fn embed(&self, coords: &DVector<T>) -> DVector<T> {
        &self.basis * coords
    }
}

/// Exact maximizer of linear functionals over the pulled-back unit ball
/// `{c ∈ ℝⁿ : ‖B c‖ ≤ 1}` of a subspace basis `B` under a norm descriptor.
///
/// The geometry is precomputed once per `(B, norm)` pair:
/// ellipsoidal norms reduce to a Gram solve, polytopal norms (ℓ∞, ℓ¹,
/// weighted-1) to vertex enumeration, and smooth weighted-p norms to a
/// globally convergent normalized ascent (the positive critical point of
/// `c ↦ g·c/N(c)` is unique for strictly convex smooth norms).
pub struct BallMaximizer<T: Real> {
    shape: BallShape<T>,
    basis: DMatrix<T>,
    nd: NormDescriptor<T>,
}

enum BallShape<T: Real> {
    /// `N(c) = ‖B' c‖₂`; maximum of `g·c` is `√(gᵀ (B'ᵀB')⁻¹ g)`.
    Quadratic { gram: DMatrix<T> },
    /// Polytope ball with precomputed unit-norm vertex set.
    Polytope { vertices: Vec<DVector<T>> },
    /// Smooth strictly convex ball (`weighted_p`, `1 < p < ∞`, `p ≠ 2`).
    Smooth { bprime: DMatrix<T>, p: T, gram: DMatrix<T> },
}

impl<T: Real> BallMaximizer<T> {
    pub fn new(basis: &DMatrix<T>, nd: &NormDescriptor<T>) -> Result<Self> {
        if basis.nrows() != nd.dimension() {
            return Err(Error::DimensionMismatch { expected: nd.dimension(), got: basis.nrows() });
        }
        let n = basis.ncols();
        let shape = match nd.kind() {
            NormKind::L2 => BallShape::Quadratic { gram: basis.transpose() * basis },
            NormKind::Induced { matrix } => {
                let bp = matrix * basis;
                BallShape::Quadratic { gram: bp.transpose() * &bp }
            }
            NormKind::WeightedP { p, weights } if *p == T::of(2.0) => {
                let mut bp = basis.clone();
                for i in 0..bp.nrows() {
                    let w = rsqrt(weights[i]);
                    for j in 0..n {
                        bp[(i, j)] *= w;
                    }
                }
                BallShape::Quadratic { gram: bp.transpose() * &bp }
            }
            NormKind::Linf => BallShape::Polytope { vertices: linf_ball_vertices(basis, nd)? },
            NormKind::L1 => {
                BallShape::Polytope { vertices: l1_ball_vertices(basis, None, nd)? }
            }
            NormKind::WeightedP { p, weights } if *p == T::one() => {
                BallShape::Polytope { vertices: l1_ball_vertices(basis, Some(weights), nd)? }
            }
            NormKind::WeightedP { p, weights } => {
                let mut bp = basis.clone();
                let inv_p = T::one() / *p;
                for i in 0..bp.nrows() {
                    let w = rpowf(weights[i], inv_p);
                    for j in 0..n {
                        bp[(i, j)] *= w;
                    }
                }
                let gram = bp.transpose() * &bp;
                BallShape::Smooth { bprime: bp, p: *p, gram }
            }
        };
        Ok(Self { shape, basis: basis.clone(), nd: nd.clone() })
    }

    fn pulled_norm(&self, c: &DVector<T>) -> T {
        norm_eval(&(&self.basis * c), &self.nd).expect("dimension checked at construction")
    }

    /// Returns `(max g·c, argmax c)` over the unit ball. The argmax has
    /// pulled-back norm exactly 1 (renormalized) unless `g = 0`.
    pub fn maximize(&self, g: &DVector<T>) -> Result<(T, DVector<T>)> {
        let n = self.basis.ncols();
        if g.norm() == T::zero() {
            return Ok((T::zero(), DVector::zeros(n)));
        }
        let c = match &self.shape {
            BallShape::Quadratic { gram } => {
                let z = solve(gram, g)?;
                let val = rsqrt(g.dot(&z));
                if val <= T::zero() {
                    return Ok((T::zero(), DVector::zeros(n)));
                }
                z / val
            }
            BallShape::Polytope { vertices } => {
                let mut best = T::neg_infinity();
                let mut arg = DVector::zeros(n);
                for v in vertices {
                    let val = g.dot(v);
                    let a = rabs(val);
                    if a > best {
                        best = a;
                        arg = if val >= T::zero() { v.clone() } else { -v };
                    }
                }
                arg
            }
            BallShape::Smooth { bprime, p, gram } => smooth_ascent(g, bprime, *p, gram)?,
        };
        // renormalize so the reported maximizer is exactly unit-norm
        let nm = self.pulled_norm(&c);
        if nm <= T::zero() || !rfinite(nm) {
            return Err(Error::NumericalFailure("degenerate maximizer".into()));
        }
        let c = c / nm;
        Ok((g.dot(&c), c))
    }
}

/// Vertices of `{c : ‖B c‖_∞ ≤ 1}`: intersections of n active constraints.
fn linf_ball_vertices<T: Real>(basis: &DMatrix<T>, nd: &NormDescriptor<T>) -> Result<Vec<DVector<T>>> {
    let (m, n) = basis.shape();
    let mut vertices = Vec::new();
    let subsets = k_subsets(m, n);
    for s in &subsets {
        let sub = DMatrix::from_fn(n, n, |i, j| basis[(s[i], j)]);
        let lu = sub.lu();
        // fix the first sign to +1; the mirror vertex is handled by |g·c|
        for sig in 0..(1usize << (n - 1)) {
            let rhs = DVector::from_fn(n, |i, _| {
                if i == 0 || (sig >> (i - 1)) & 1 == 0 {
                    T::one()
                } else {
                    -T::one()
                }
            });
            let Some(c) = lu.solve(&rhs) else { continue };
            let nm = norm_eval(&(basis * &c), nd)?;
            if nm <= T::one() + T::of(1e-9) && nm > T::zero() {
                vertices.push(&c / nm);
            }
        }
    }
    if vertices.is_empty() {
        return Err(Error::NumericalFailure("no feasible vertices for linf ball".into()));
    }
    Ok(vertices)
}

/// Vertices of `{c : Σ wⱼ |rowⱼ(B)·c| ≤ 1}`: the polar of a zonotope, one
/// vertex per facet normal, i.e. per rank-(n−1) generator subset.
fn l1_ball_vertices<T: Real>(
    basis: &DMatrix<T>,
    weights: Option<&[T]>,
    nd: &NormDescriptor<T>,
) -> Result<Vec<DVector<T>>> {
    let (m, n) = basis.shape();
    let gen_row = |i: usize| -> DVector<T> {
        let w = weights.map_or(T::one(), |ws| ws[i]);
        DVector::from_fn(n, |j, _| basis[(i, j)] * w)
    };
    let mut vertices = Vec::new();
    if n == 1 {
        let c = DVector::from_element(1, T::one());
        let nm = norm_eval(&(basis * &c), nd)?;
        vertices.push(c / nm);
        return Ok(vertices);
    }
    for s in k_subsets(m, n - 1) {
        // pad to a square system so the full right-singular basis is available
        let sub = DMatrix::from_fn(n, n, |i, j| if i < n - 1 { gen_row(s[i])[j] } else { T::zero() });
        let svd = sub.svd(false, true);
        let vt = svd.v_t.expect("svd with v_t");
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| svd.singular_values[a].partial_cmp(&svd.singular_values[b]).unwrap());
        let smax = svd.singular_values[*order.last().unwrap()];
        // the subset must span a hyperplane: exactly one vanishing singular value
        if n >= 2 {
            let second = svd.singular_values[order[1]];
            if smax == T::zero() || second <= T::of(linalg::RANK_RTOL) * smax {
                continue;
            }
        }
        let u = vt.row(order[0]).transpose();
        let nm = norm_eval(&(basis * &u), nd)?;
        if nm > T::zero() && rfinite(nm) {
            vertices.push(u / nm);
        }
    }
    if vertices.is_empty() {
        return Err(Error::NumericalFailure("no facet normals for l1 ball".into()));
    }
    Ok(vertices)
}

/// Normalized gradient ascent of `c ↦ g·c / ‖B' c‖_p`, warm-started from the
/// ellipsoidal surrogate. Monotone via backtracking.
fn smooth_ascent<T: Real>(
    g: &DVector<T>,
    bprime: &DMatrix<T>,
    p: T,
    gram: &DMatrix<T>,
) -> Result<DVector<T>> {
    let n = bprime.ncols();
    let pnorm = |c: &DVector<T>| -> T {
        let y = bprime * c;
        let s: T = y.iter().map(|x| rpowf(rabs(*x), p)).sum();
        rpowf(s, T::one() / p)
    };
    let grad_norm = |c: &DVector<T>, nval: T| -> DVector<T> {
        let y = bprime * c;
        let mut w = DVector::zeros(y.len());
        for i in 0..y.len() {
            let a = rabs(y[i]);
            if a > T::zero() {
                let sgn = if y[i] >= T::zero() { T::one() } else { -T::one() };
                w[i] = rpowf(a, p - T::one()) * sgn;
            }
        }
        bprime.transpose() * w * rpowf(nval, T::one() - p)
    };

    let mut c = solve(gram, g)?;
    let nm0 = pnorm(&c);
    if nm0 <= T::zero() {
        return Err(Error::NumericalFailure("degenerate smooth ascent start".into()));
    }
    c /= nm0;
    let mut val = g.dot(&c);
    let mut step = T::of(0.5);
    for _ in 0..500 {
        let dn = grad_norm(&c, T::one());
        let grad = g - dn * val;
        if grad.norm() <= T::of(1e-15) * (T::one() + rabs(val)) {
            break;
        }
        let mut improved = false;
        for _ in 0..40 {
            let mut cand = &c + &grad * step;
            let nm = pnorm(&cand);
            if nm > T::zero() && rfinite(nm) {
                cand /= nm;
                let v = g.dot(&cand);
                if v > val {
                    let gain = v - val;
                    c = cand;
                    val = v;
                    improved = true;
                    if gain <= T::of(1e-15) * (T::one() + rabs(val)) {
                        return Ok(c);
                    }
                    break;
                }
            }
            step *= T::of(0.5);
        }
        if !improved {
            break;
        }
        step = rmin(step * T::of(2.0), T::of(0.5));
    }
    Ok(c)
}

/// All k-element subsets of `{0, …, m-1}` in lexicographic order.
fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + m - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Dual norm of the functional `x ↦ f·x` restricted to the subspace:
/// `sup { |f·x| : x ∈ U, ‖x‖ ≤ 1 }`. Exact via [`BallMaximizer`].
pub fn subspace_dual_norm<T: Real>(
    f: &DVector<T>,
    u: &Subspace<T>,
    nd: &NormDescriptor<T>,
) -> Result<T> {
    let oracle = BallMaximizer::new(u.basis(), nd)?;
    let g = u.basis().transpose() * f;
    Ok(oracle.maximize(&g)?.0)
}

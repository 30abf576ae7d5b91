//! Linear maps split as contraction plus finite-rank compact part, the
//! minimal approximating-subspace dimension ν_λ(T), and covers of images of
//! unit balls built from the covering lemma.

use crate::covering::{cover_subspace_ball, CoverMethod, CoverOptions, CoverResult, CERT_INFLATION, CERT_PROBES};
use crate::error::{Error, Result};
use crate::linalg::{self, orthonormal_columns, spectral_norm};
use crate::norms::{norm_eval, NormDescriptor, NormKind, Subspace};
use crate::sampling;
use crate::scalar::{rabs, rmax, rpowf, Real};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Certified overestimate of the operator norm of `a` as a map of
/// `(ℝᵐ, nd)` to itself. Exact for ℓ¹/ℓ²/ℓ∞, induced and weighted p ∈ {1, 2};
/// Riesz–Thorin interpolation `‖A‖_p ≤ ‖A‖₁^{1/p} ‖A‖_∞^{1-1/p}` otherwise.
pub fn operator_norm_bound<T: Real>(a: &DMatrix<T>, nd: &NormDescriptor<T>) -> Result<T> {
    if a.nrows() != nd.dimension() || a.ncols() != nd.dimension() {
        return Err(Error::DimensionMismatch { expected: nd.dimension(), got: a.nrows() });
    }
    let col_sums = |m: &DMatrix<T>| -> T {
        let mut worst = T::zero();
        for j in 0..m.ncols() {
            let s: T = (0..m.nrows()).map(|i| rabs(m[(i, j)])).sum();
            worst = rmax(worst, s);
        }
        worst
    };
    let row_sums = |m: &DMatrix<T>| -> T {
        let mut worst = T::zero();
        for i in 0..m.nrows() {
            let s: T = (0..m.ncols()).map(|j| rabs(m[(i, j)])).sum();
            worst = rmax(worst, s);
        }
        worst
    };
    let svd_margin = T::of(1.0 + 1e-12);
    Ok(match nd.kind() {
        NormKind::L1 => col_sums(a),
        NormKind::Linf => row_sums(a),
        NormKind::L2 => spectral_norm(a) * svd_margin,
        NormKind::Induced { matrix } => {
            let minv = linalg::inverse(matrix)?;
            spectral_norm(&(matrix * a * minv)) * svd_margin
        }
        NormKind::WeightedP { p, weights } => {
            // similarity transform W^{1/p} A W^{-1/p} reduces to plain ℓᵖ
            let inv_p = T::one() / *p;
            let mut t = a.clone();
            for i in 0..t.nrows() {
                let wi = rpowf(weights[i], inv_p);
                for j in 0..t.ncols() {
                    let wj = rpowf(weights[j], inv_p);
                    t[(i, j)] = t[(i, j)] * wi / wj;
                }
            }
            if *p == T::one() {
                col_sums(&t)
            } else if *p == T::of(2.0) {
                spectral_norm(&t) * svd_margin
            } else {
                rpowf(col_sums(&t), inv_p) * rpowf(row_sums(&t), T::one() - inv_p)
            }
        }
    })
}

/// A linear map `T = L + C` with a contraction part and a declared-rank
/// compact part, carrying its λ-budget: `‖L‖ < lambda_budget / 2`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct OperatorSplit<T: Real> {
    m: usize,
    #[serde(with = "linalg::serde_matrix")]
    l: DMatrix<T>,
    #[serde(with = "linalg::serde_matrix")]
    c: DMatrix<T>,
    rank: usize,
    nd: NormDescriptor<T>,
    lambda_budget: T,
    contraction_bound: T,
}

impl<T: Real> OperatorSplit<T> {
    /// Build and validate a split. The contraction part must satisfy the
    /// certified bound `‖L‖ < lambda_budget/2`; the compact part's declared
    /// rank is its numerical rank.
    pub fn new(l: DMatrix<T>, c: DMatrix<T>, nd: NormDescriptor<T>, lambda_budget: T) -> Result<Self> {
        let m = nd.dimension();
        if l.shape() != (m, m) || c.shape() != (m, m) {
            return Err(Error::DimensionMismatch { expected: m, got: l.nrows() });
        }
        // budgets up to 2 admit 𝓛_1 membership and the composition algebra;
        // the covering theorem itself is gated at λ < 1/2 in nu_lambda
        if lambda_budget <= T::zero() || lambda_budget >= T::of(2.0) {
            return Err(Error::InvalidParameter(format!(
                "lambda budget must lie in (0, 2), got {lambda_budget}"
            )));
        }
        let contraction_bound = operator_norm_bound(&l, &nd)?;
        if contraction_bound >= lambda_budget / T::of(2.0) {
            return Err(Error::InvalidParameter(format!(
                "contraction norm bound {contraction_bound} not below lambda_budget/2 = {}",
                lambda_budget / T::of(2.0)
            )));
        }
        let rank = linalg::numerical_rank(&c);
        Ok(Self { m, l, c, rank, nd, lambda_budget, contraction_bound })
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn l_part(&self) -> &DMatrix<T> {
        &self.l
    }

    pub fn c_part(&self) -> &DMatrix<T> {
        &self.c
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn norm(&self) -> &NormDescriptor<T> {
        &self.nd
    }

    pub fn lambda_budget(&self) -> T {
        self.lambda_budget
    }

    /// Certified overestimate of `‖L‖`; propagated multiplicatively through
    /// compositions rather than re-measured.
    pub fn contraction_bound(&self) -> T {
        self.contraction_bound
    }

    /// The full map `T = L + C`.
    pub fn full_matrix(&self) -> DMatrix<T> {
        &self.l + &self.c
    }

    /// Certified overestimate of `‖T‖`.
    pub fn norm_bound(&self) -> Result<T> {
        operator_norm_bound(&self.full_matrix(), &self.nd)
    }
}

/// Composition `(L₁+C₁)∘(L₂+C₂) = L₁L₂ + [C₁C₂ + C₁L₂ + L₁C₂]`: the compact
/// ranks add (then re-truncate to numerical rank), the contraction bounds
/// multiply, and the budget becomes `λ₁λ₂/2` to keep the `/2` convention.
pub fn split_compose<T: Real>(s1: &OperatorSplit<T>, s2: &OperatorSplit<T>) -> Result<OperatorSplit<T>> {
    if s1.m != s2.m {
        return Err(Error::DimensionMismatch { expected: s1.m, got: s2.m });
    }
    if s1.nd != s2.nd {
        return Err(Error::InvalidParameter("splits carry different norms".into()));
    }
    let l = &s1.l * &s2.l;
    let c = &s1.c * &s2.c + &s1.c * &s2.l + &s1.l * &s2.c;
    let rank = linalg::numerical_rank(&c);
    if rank > s1.rank + s2.rank {
        return Err(Error::NumericalFailure(format!(
            "composed compact rank {rank} exceeds additivity bound {}",
            s1.rank + s2.rank
        )));
    }
    Ok(OperatorSplit {
        m: s1.m,
        l,
        c,
        rank,
        nd: s1.nd.clone(),
        lambda_budget: s1.lambda_budget * s2.lambda_budget / T::of(2.0),
        contraction_bound: s1.contraction_bound * s2.contraction_bound,
    })
}

/// Outcome of the ν_λ search: the minimal subspace dimension found, its basis,
/// and the certified distance bound split into contraction and compact terms.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct NuLambdaResult<T: Real> {
    pub nu: usize,
    /// Basis of the approximating subspace `Z` (m×ν), kept for audit.
    #[serde(with = "linalg::serde_matrix")]
    pub z_basis: DMatrix<T>,
    pub certified_distance_bound: T,
    pub l_term: T,
    pub c_term: T,
}

/// Projector onto the span of the orthonormal columns `v`, orthogonal in the
/// inner product the norm induces when one exists (so its operator norm is 1),
/// Euclidean otherwise.
fn projector_for<T: Real>(v: &DMatrix<T>, nd: &NormDescriptor<T>) -> Result<DMatrix<T>> {
    let m = v.nrows();
    if v.ncols() == 0 {
        return Ok(DMatrix::zeros(m, m));
    }
    let metric: Option<DMatrix<T>> = match nd.kind() {
        NormKind::L2 => None,
        NormKind::WeightedP { p, weights } if *p == T::of(2.0) => {
            Some(DMatrix::from_fn(m, m, |i, j| if i == j { weights[i] } else { T::zero() }))
        }
        NormKind::Induced { matrix } => Some(matrix.transpose() * matrix),
        _ => None,
    };
    Ok(match metric {
        None => v * v.transpose(),
        Some(g) => {
            let core = v.transpose() * &g * v;
            let inv = linalg::inverse(&core)?;
            v * inv * v.transpose() * g
        }
    })
}

/// Certified bound on `dist(T[B_X], T[B_Z])` for `Z = span(v)`: with
/// `γ′ = max(1, ‖Π‖)` the point `z = Πx/γ′` stays in `B_Z`, so the distance
/// is at most `‖L(I-Π/γ′)‖ + ‖C(I-Π/γ′)‖` (the proof's contraction-plus-
/// compact-image-distance bound, evaluated as certified operator norms).
fn certified_terms<T: Real>(
    s: &OperatorSplit<T>,
    v: &DMatrix<T>,
) -> Result<(T, T)> {
    let m = s.m;
    let eye = DMatrix::<T>::identity(m, m);
    if v.ncols() == m {
        return Ok((T::zero(), T::zero()));
    }
    let pi = projector_for(v, &s.nd)?;
    let gamma = operator_norm_bound(&pi, &s.nd)?;
    let gamma_prime = rmax(T::one(), gamma);
    let reducer = &eye - &pi / gamma_prime;
    let l_term = operator_norm_bound(&(&s.l * &reducer), &s.nd)?;
    let c_term = operator_norm_bound(&(&s.c * &reducer), &s.nd)?;
    Ok((l_term, c_term))
}

/// Candidate subspace bases for each dimension `n`: singular-subspace
/// truncations of `C`, coordinate subspaces, and the proof's greedy sequence
/// over a deterministic direction pool.
struct CandidateSet<T: Real> {
    svd_v: DMatrix<T>,
    greedy: Vec<DVector<T>>,
    m: usize,
}

impl<T: Real> CandidateSet<T> {
    fn build(s: &OperatorSplit<T>) -> Result<Self> {
        let m = s.m;
        let svd = s.c.clone().svd(false, true);
        let vt = svd.v_t.expect("svd with v_t");
        let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
        order.sort_by(|&a, &b| svd.singular_values[b].partial_cmp(&svd.singular_values[a]).unwrap());
        let svd_v = DMatrix::from_fn(m, order.len(), |i, j| vt[(order[j], i)]);

        // greedy growth: repeatedly add the pooled unit vector whose C-image
        // is farthest from the image of the current subspace ball
        let pool_raw = sampling::sphere_directions::<T>(m, 256);
        let mut pool = Vec::with_capacity(pool_raw.len());
        for d in pool_raw {
            let nm = norm_eval(&d, &s.nd)?;
            if nm > T::zero() {
                pool.push(&d / nm);
            }
        }
        let mut greedy: Vec<DVector<T>> = Vec::with_capacity(m);
        let mut q: Vec<DVector<T>> = Vec::new(); // euclidean-orthonormal frame of the greedy span
        for _ in 0..m {
            let mut best_val = T::zero();
            let mut best: Option<&DVector<T>> = None;
            for x in &pool {
                // residual of the image against the span of images of q
                let mut resid = &s.c * x;
                for b in &q {
                    let img = &s.c * b;
                    let nn = img.dot(&img);
                    if nn > T::zero() {
                        let coef = resid.dot(&img) / nn;
                        resid -= img * coef;
                    }
                }
                let val = norm_eval(&resid, &s.nd)?;
                // deterministic tie-break: lexicographically smallest direction
                let better = match best {
                    None => true,
                    Some(cur) => {
                        val > best_val * (T::one() + T::of(1e-12))
                            || (val >= best_val * (T::one() - T::of(1e-12)) && sampling::lex_less(x, cur))
                    }
                };
                if better {
                    best_val = rmax(best_val, val);
                    best = Some(x);
                }
            }
            let Some(pick) = best else { break };
            greedy.push(pick.clone());
            // extend the euclidean frame
            let mut w = pick.clone();
            for b in &q {
                let coef = b.dot(&w);
                w -= b * coef;
            }
            if w.norm() > T::of(1e-10) {
                q.push(&w / w.norm());
            }
        }
        Ok(Self { svd_v, greedy, m })
    }

    fn for_dim(&self, n: usize) -> Vec<DMatrix<T>> {
        let mut out = Vec::new();
        if n == 0 {
            out.push(DMatrix::zeros(self.m, 0));
            return out;
        }
        if n <= self.svd_v.ncols() {
            out.push(orthonormal_columns(&self.svd_v.columns(0, n).into_owned()));
        }
        if self.m <= 10 {
            for axes in k_subsets_list(self.m, n) {
                let mut b = DMatrix::zeros(self.m, n);
                for (j, &ax) in axes.iter().enumerate() {
                    b[(ax, j)] = T::one();
                }
                out.push(b);
            }
        }
        if n <= self.greedy.len() {
            let mut b = DMatrix::zeros(self.m, n);
            for (j, g) in self.greedy.iter().take(n).enumerate() {
                b.set_column(j, g);
            }
            let ob = orthonormal_columns(&b);
            if ob.ncols() == n {
                out.push(ob);
            }
        }
        out
    }
}

fn k_subsets_list(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    if k == 0 || k > m {
        return out;
    }
    loop {
        out.push(idx.clone());
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

/// Smallest `n` such that some `n`-dimensional subspace `Z` certifies
/// `dist(T[B_X(0,1)], T[B_Z(0,1)]) < λ`. Defined for any `λ > 0` with the
/// split's contraction bound below `λ/2`; the covering theorem downstream
/// additionally needs `2λ < 1` for its bound to be meaningful.
pub fn nu_lambda<T: Real>(s: &OperatorSplit<T>, lambda: T) -> Result<NuLambdaResult<T>> {
    if lambda <= T::zero() || !crate::scalar::rfinite(lambda) {
        return Err(Error::InvalidParameter(format!("nu_lambda needs lambda > 0, got {lambda}")));
    }
    if s.contraction_bound >= lambda / T::of(2.0) {
        return Err(Error::InvalidParameter(format!(
            "split is not in L_(lambda/2): contraction bound {} >= {}",
            s.contraction_bound,
            lambda / T::of(2.0)
        )));
    }
    let candidates = CandidateSet::build(s)?;
    for n in 0..=s.m {
        let mut best: Option<(T, T, T, DMatrix<T>)> = None;
        for v in candidates.for_dim(n) {
            if v.ncols() != n {
                continue;
            }
            let (l_term, c_term) = certified_terms(s, &v)?;
            let bound = l_term + c_term;
            if best.as_ref().map_or(true, |(b, _, _, _)| bound < *b) {
                best = Some((bound, l_term, c_term, v));
            }
        }
        if let Some((bound, l_term, c_term, v)) = best {
            if bound < lambda {
                return Ok(NuLambdaResult {
                    nu: n,
                    z_basis: v,
                    certified_distance_bound: bound,
                    l_term,
                    c_term,
                });
            }
        }
    }
    Err(Error::NumericalFailure(
        "nu_lambda search exhausted all dimensions; the split violates its invariants".into(),
    ))
}

/// Pointwise sanity estimate of `dist(T[B_X], T[B_Z])`: for sampled unit
/// vectors `x`, measures `‖Tx − T z(x)‖` with the certificate's own feasible
/// witness `z(x) = Πx/γ′`. Dominated by the certified bound analytically.
pub fn sampled_split_distance<T: Real>(
    s: &OperatorSplit<T>,
    z_basis: &DMatrix<T>,
    samples: usize,
) -> Result<T> {
    let t = s.full_matrix();
    let m = s.m;
    if z_basis.ncols() == 0 {
        let mut worst = T::zero();
        for d in sampling::sphere_directions::<T>(m, samples) {
            let nm = norm_eval(&d, &s.nd)?;
            if nm > T::zero() {
                worst = rmax(worst, norm_eval(&(&t * (&d / nm)), &s.nd)?);
            }
        }
        return Ok(worst);
    }
    let pi = projector_for(z_basis, &s.nd)?;
    let gamma = rmax(T::one(), operator_norm_bound(&pi, &s.nd)?);
    let mut worst = T::zero();
    for d in sampling::sphere_directions::<T>(m, samples) {
        let nm = norm_eval(&d, &s.nd)?;
        if nm <= T::zero() {
            continue;
        }
        let x = &d / nm;
        let z = &pi * &x / gamma;
        worst = rmax(worst, norm_eval(&(&t * (&x - &z)), &s.nd)?);
    }
    Ok(worst)
}

/// Cover `T[B_X(0,1)]` by balls of radius `2λ` following the theorem's proof:
/// find `Z` via [`nu_lambda`], cover `B_{T(Z)}(0, ‖T‖)` by λ-balls through the
/// subspace covering lemma, and reuse those centers at doubled radius.
/// The count is at most `[(ν+1) D / λ]^ν` (real scalars, α = 1).
pub fn cover_image_ball<T: Real>(
    s: &OperatorSplit<T>,
    lambda: T,
    opts: &CoverOptions,
) -> Result<CoverResult<T>> {
    let nu = nu_lambda(s, lambda)?;
    let t = s.full_matrix();
    let d_bound = operator_norm_bound(&t, &s.nd)?;
    let m = s.m;

    let image_probes = || -> Result<Vec<DVector<T>>> {
        let mut probes = Vec::new();
        for d in sampling::sphere_directions::<T>(m, CERT_PROBES) {
            let nm = norm_eval(&d, &s.nd)?;
            if nm > T::zero() {
                probes.push(&t * (&d / nm));
            }
        }
        Ok(probes)
    };

    let single_ball = |notes: Vec<String>| -> Result<CoverResult<T>> {
        let mut cover = CoverResult::from_parts(
            vec![DVector::zeros(m)],
            lambda * T::of(2.0),
            CoverMethod::Isomorphism,
            notes,
        );
        cover.theoretical_bound = Some(T::one());
        let probes = image_probes()?;
        cover.certificate = Some(cover.certify_points(&probes, &s.nd, CERT_INFLATION)?);
        Ok(cover)
    };

    if nu.nu == 0 || d_bound <= lambda {
        return single_ball(vec![format!(
            "image within {} of the origin; a single 2λ-ball suffices",
            if nu.nu == 0 { "the certified distance" } else { "‖T‖ ≤ λ" }
        )]);
    }

    let image = &t * &nu.z_basis;
    let image_basis = orthonormal_columns(&image);
    if image_basis.ncols() == 0 {
        return single_ball(vec!["T(Z) collapsed to the origin".into()]);
    }
    let tz = Subspace::new(image_basis)?;
    let mut cover = cover_subspace_ball(&tz, &s.nd, d_bound, lambda, opts)?
        .rebrand(lambda * T::of(2.0), CoverMethod::Isomorphism);

    let base = T::of((nu.nu + 1) as f64) * d_bound / lambda;
    let bound = rpowf(base, T::of(nu.nu as f64));
    cover.theoretical_bound = Some(bound);
    cover.notes.push(format!(
        "2λ-cover of T[B_X(0,1)] via ν={} and D={d_bound}; count bound [(ν+1)D/λ]^ν = {bound}",
        nu.nu
    ));
    let probes = image_probes()?;
    cover.certificate = Some(cover.certify_points(&probes, &s.nd, CERT_INFLATION)?);
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::greedy_cover;
    use crate::norms::PointCloud;
    use nalgebra::dvector;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn diag_split(d: &[f64], nd: NormDescriptor<f64>, budget: f64) -> OperatorSplit<f64> {
        let m = d.len();
        let c = DMatrix::from_fn(m, m, |i, j| if i == j { d[i] } else { 0.0 });
        OperatorSplit::new(DMatrix::zeros(m, m), c, nd, budget).unwrap()
    }

    #[test]
    fn operator_norms_closed_forms() {
        let a = DMatrix::from_row_slice(2, 2, &[1.0, -2.0, 3.0, 0.5]);
        assert_eq!(operator_norm_bound(&a, &NormDescriptor::l1(2)).unwrap(), 4.0);
        assert_eq!(operator_norm_bound(&a, &NormDescriptor::linf(2)).unwrap(), 3.5);
        let s = operator_norm_bound(&a, &NormDescriptor::l2(2)).unwrap();
        assert!(s >= crate::linalg::spectral_norm(&a));
    }

    #[test]
    fn split_requires_contraction_within_budget() {
        let l = DMatrix::<f64>::identity(2, 2) * 0.3;
        let c = DMatrix::<f64>::zeros(2, 2);
        assert!(OperatorSplit::new(l.clone(), c.clone(), NormDescriptor::l2(2), 0.5).is_err());
        assert!(OperatorSplit::new(l, c, NormDescriptor::l2(2), 0.61).is_ok());
    }

    #[test]
    fn compose_contraction_bounds_multiply() {
        let nd = NormDescriptor::l2(2);
        let s1 = OperatorSplit::new(DMatrix::identity(2, 2) * 0.3, DMatrix::zeros(2, 2), nd.clone(), 0.61).unwrap();
        let s2 = OperatorSplit::new(DMatrix::identity(2, 2) * 0.4, DMatrix::zeros(2, 2), nd, 0.81).unwrap();
        let composed = split_compose(&s1, &s2).unwrap();
        let expected = s1.contraction_bound() * s2.contraction_bound();
        assert!((composed.contraction_bound() - expected).abs() <= 1e-15 * expected);
        assert!((expected - 0.12).abs() < 1e-10);
        assert_eq!(composed.c_part().amax(), 0.0);
        assert_eq!(composed.rank(), 0);
    }

    #[test]
    fn compose_rank_additivity_rank_one_parts() {
        let nd = NormDescriptor::l2(3);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let u1 = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let v1 = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let u2 = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let v2 = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let c1 = &u1 * v1.transpose();
            let c2 = &u2 * v2.transpose();
            let l1 = DMatrix::<f64>::identity(3, 3) * rng.gen_range(0.01..0.05);
            let l2 = DMatrix::<f64>::identity(3, 3) * rng.gen_range(0.01..0.05);
            let s1 = OperatorSplit::new(l1, c1, nd.clone(), 0.4).unwrap();
            let s2 = OperatorSplit::new(l2, c2, nd.clone(), 0.4).unwrap();
            let composed = split_compose(&s1, &s2).unwrap();
            assert!(composed.rank() <= 2, "rank {} > 2", composed.rank());
        }
    }

    #[test]
    fn nu_of_zero_map_is_zero() {
        let s = diag_split(&[0.0, 0.0], NormDescriptor::l2(2), 0.3);
        let r = nu_lambda(&s, 0.3).unwrap();
        assert_eq!(r.nu, 0);
        assert_eq!(r.z_basis.ncols(), 0);
    }

    #[test]
    fn nu_diagonal_example() {
        let s = diag_split(&[3.0, 1.0, 0.1], NormDescriptor::l2(3), 0.5);
        let r = nu_lambda(&s, 0.5).unwrap();
        assert_eq!(r.nu, 2);
        assert!(r.certified_distance_bound < 0.5);
        let z = &r.z_basis;
        // span check: e3 component of every basis vector vanishes
        for j in 0..z.ncols() {
            assert!(z[(2, j)].abs() < 1e-9);
        }
    }

    #[test]
    fn nu_bounded_by_rank_for_pure_compact() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for &lambda in &[0.05, 0.1, 0.3] {
            for _ in 0..5 {
                let u = DVector::<f64>::from_fn(4, |_, _| rng.gen_range(-1.0..1.0));
                let v = DVector::<f64>::from_fn(4, |_, _| rng.gen_range(-1.0..1.0));
                let w = DVector::<f64>::from_fn(4, |_, _| rng.gen_range(-1.0..1.0));
                let x = DVector::<f64>::from_fn(4, |_, _| rng.gen_range(-1.0..1.0));
                let c = &u * v.transpose() + &w * x.transpose();
                let s = OperatorSplit::new(DMatrix::zeros(4, 4), c, NormDescriptor::l2(4), lambda).unwrap();
                let r = nu_lambda(&s, lambda).unwrap();
                assert!(r.nu <= 2, "nu {} exceeds rank 2 at lambda {lambda}", r.nu);
            }
        }
    }

    #[test]
    fn nu_monotone_in_lambda() {
        let s = diag_split(&[2.0, 0.45, 0.18, 0.04], NormDescriptor::l2(4), 0.45);
        let mut last = usize::MAX;
        for &lambda in &[0.05, 0.1, 0.2, 0.4] {
            let r = nu_lambda(&s, lambda).unwrap();
            assert!(r.nu <= last, "nu not monotone");
            last = r.nu;
        }
    }

    #[test]
    fn certified_bound_dominates_sampled_distance() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let kinds = [NormDescriptor::l1(4), NormDescriptor::l2(4), NormDescriptor::linf(4)];
        for nd in kinds {
            let c = DMatrix::<f64>::from_fn(4, 4, |_, _| rng.gen_range(-0.5..0.5));
            let l = DMatrix::<f64>::from_fn(4, 4, |_, _| rng.gen_range(-0.02..0.02));
            let Ok(s) = OperatorSplit::new(l, c, nd, 0.4) else { continue };
            let r = nu_lambda(&s, 0.4).unwrap();
            let sampled = sampled_split_distance(&s, &r.z_basis, 512).unwrap();
            assert!(
                sampled <= r.certified_distance_bound * (1.0 + 1e-9),
                "sampled {sampled} exceeds certified {}",
                r.certified_distance_bound
            );
        }
    }

    #[test]
    fn image_cover_zero_map() {
        let s = diag_split(&[0.0, 0.0], NormDescriptor::linf(2), 0.3);
        let cover = cover_image_ball(&s, 0.3, &CoverOptions::default()).unwrap();
        assert_eq!(cover.count(), 1);
        assert!(cover.certificate.as_ref().unwrap().passed);
    }

    #[test]
    fn image_cover_segment_example() {
        // T = diag(1, 0) on (R^2, linf), lambda = 1/8: bound 16, greedy
        // covering of the image segment with radius 1/4 needs 4 balls
        let s = diag_split(&[1.0, 0.0], NormDescriptor::linf(2), 0.26);
        let cover = cover_image_ball(&s, 0.125, &CoverOptions::default()).unwrap();
        assert!(cover.count() <= 16, "count {} above [(n+1)D/λ]^n = 16", cover.count());
        assert!(cover.certificate.as_ref().unwrap().passed);

        let seg: Vec<DVector<f64>> = (0..2001)
            .map(|i| dvector![-1.0 + i as f64 / 1000.0, 0.0])
            .collect();
        let k = PointCloud::new(seg).unwrap();
        let oracle = greedy_cover(&k, 0.25, &NormDescriptor::linf(2)).unwrap();
        assert!(oracle.count() >= 4 && oracle.count() <= cover.count());
    }

    #[test]
    fn image_cover_random_split_certificate() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let lambda = 0.2;
        for _ in 0..5 {
            let u = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let v = DVector::<f64>::from_fn(3, |_, _| rng.gen_range(-1.0..1.0));
            let c = &u * v.transpose();
            let l = DMatrix::<f64>::from_fn(3, 3, |_, _| rng.gen_range(-0.02..0.02));
            let Ok(s) = OperatorSplit::new(l, c, NormDescriptor::l2(3), lambda) else { continue };
            let cover = cover_image_ball(&s, lambda, &CoverOptions::default()).unwrap();
            let cert = cover.certificate.as_ref().unwrap();
            assert!(cert.passed, "coverage certificate failed: {cert:?}");
            let nu = nu_lambda(&s, lambda).unwrap().nu;
            let d = s.norm_bound().unwrap();
            if d > lambda {
                let bound = (((nu + 1) as f64) * d / lambda).powi(nu as i32);
                assert!((cover.count() as f64) <= bound);
            }
        }
    }

    #[test]
    fn split_json_round_trip_row_major() {
        let s = diag_split(&[1.0, 2.0], NormDescriptor::l2(2), 0.3);
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"l\":[[0.0,0.0],[0.0,0.0]]"));
        let back: OperatorSplit<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back.rank(), s.rank());
        assert_eq!(back.dim(), 2);
    }
}

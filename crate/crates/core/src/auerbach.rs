//! Auerbach bases: unit-norm basis vectors with unit-norm dual functionals
//! satisfying `fᵢ(xⱼ) = δᵢⱼ`, constructed by maximizing `|det|` over the
//! product of unit spheres in subspace coordinates, plus the isomorphism
//! certificate `J : ℝⁿ_∞ → U` with `‖J‖ ≤ n`, `‖J⁻¹‖ ≤ 1`.

use crate::error::{Error, Result};
use crate::linalg::{self, orthonormal_columns};
use crate::norms::{norm_eval, BallMaximizer, NormDescriptor, Subspace};
use crate::scalar::{rabs, rmax, Real};
use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Construction caps and tolerances for the determinant maximization.
#[derive(Debug, Clone)]
pub struct AuerbachConfig {
    pub restarts: usize,
    pub max_sweeps: usize,
    /// Relative `|det|` gain below which a sweep counts as converged.
    pub det_tol: f64,
    pub seed: u64,
}

impl Default for AuerbachConfig {
    fn default() -> Self {
        Self { restarts: 20, max_sweeps: 200, det_tol: 1e-12, seed: 0x0A5E_7B1C }
    }
}

/// Largest supported subspace dimension; conditioning of the determinant
/// maximization for flat norms is unexplored beyond this.
pub const MAX_SUBSPACE_DIM: usize = 8;

/// An Auerbach basis for a subspace under an ambient norm.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct AuerbachBasis<T: Real> {
    #[serde(with = "linalg::serde_vectors")]
    vectors: Vec<DVector<T>>,
    #[serde(with = "linalg::serde_vectors")]
    functionals: Vec<DVector<T>>,
    subspace: Subspace<T>,
    norm: NormDescriptor<T>,
    duality_residual: T,
    functional_norm_excess: T,
}

impl<T: Real> AuerbachBasis<T> {
    pub fn vectors(&self) -> &[DVector<T>] {
        &self.vectors
    }

    /// Coefficient vectors of the dual functionals; `fᵢ(x) = Fᵢ·x` on the subspace.
    pub fn functionals(&self) -> &[DVector<T>] {
        &self.functionals
    }

    pub fn subspace(&self) -> &Subspace<T> {
        &self.subspace
    }

    pub fn norm(&self) -> &NormDescriptor<T> {
        &self.norm
    }

    pub fn duality_residual(&self) -> T {
        self.duality_residual
    }

    pub fn functional_norm_excess(&self) -> T {
        self.functional_norm_excess
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim()
    }

    /// `ℓ∞`-coordinates of a subspace point: `zᵢ = fᵢ(y)`.
    pub fn coordinates(&self, y: &DVector<T>) -> DVector<T> {
        DVector::from_fn(self.vectors.len(), |i, _| self.functionals[i].dot(y))
    }

    /// The isomorphism matrix `J` (columns `xᵢ`).
    pub fn j_matrix(&self) -> DMatrix<T> {
        let m = self.ambient_dim();
        DMatrix::from_fn(m, self.vectors.len(), |i, j| self.vectors[j][i])
    }
}

/// Certificate for `d_BM(U, ℝⁿ_∞) ≤ log n`: verified bounds on `‖J‖` and `‖J⁻¹‖`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct IsomorphismCertificate<T: Real> {
    #[serde(with = "linalg::serde_matrix")]
    pub j: DMatrix<T>,
    pub j_norm_bound: T,
    pub jinv_norm_bound: T,
}

/// Cofactor expansion column: `aᵢ[j] = ∂ det / ∂ C[j][i]`, so that replacing
/// column `i` of `C` by `c` gives determinant `aᵢ·c`.
fn cofactor_column<T: Real>(c_mat: &DMatrix<T>, col: usize) -> DVector<T> {
    let n = c_mat.nrows();
    if n == 1 {
        return DVector::from_element(1, T::one());
    }
    DVector::from_fn(n, |row, _| {
        let minor = DMatrix::from_fn(n - 1, n - 1, |i, j| {
            let ii = if i < row { i } else { i + 1 };
            let jj = if j < col { j } else { j + 1 };
            c_mat[(ii, jj)]
        });
        let sign = if (row + col) % 2 == 0 { T::one() } else { -T::one() };
        sign * minor.determinant()
    })
}

struct AscentOutcome<T: Real> {
    coords: DMatrix<T>,
    abs_det: T,
}

fn coordinate_ascent<T: Real>(
    oracle: &BallMaximizer<T>,
    start: DMatrix<T>,
    cfg: &AuerbachConfig,
) -> AscentOutcome<T> {
    let n = start.ncols();
    let mut c_mat = start;
    let mut abs_det = rabs(c_mat.determinant());
    for _ in 0..cfg.max_sweeps {
        let before = abs_det;
        for i in 0..n {
            let a = cofactor_column(&c_mat, i);
            if a.amax() == T::zero() {
                continue;
            }
            let current = rabs(a.dot(&c_mat.column(i).into_owned()));
            let Ok((val, cand)) = oracle.maximize(&a) else { continue };
            if val > current * (T::one() + T::of(1e-15)) {
                c_mat.set_column(i, &cand);
            }
        }
        abs_det = rabs(c_mat.determinant());
        if abs_det <= before * (T::one() + T::of(cfg.det_tol)) {
            break;
        }
    }
    AscentOutcome { coords: c_mat, abs_det }
}

/// Construct an Auerbach basis for `u` under `nd`.
pub fn auerbach_basis<T: Real>(u: &Subspace<T>, nd: &NormDescriptor<T>) -> Result<AuerbachBasis<T>> {
    auerbach_basis_with(u, nd, &AuerbachConfig::default())
}

pub fn auerbach_basis_with<T: Real>(
    u: &Subspace<T>,
    nd: &NormDescriptor<T>,
    cfg: &AuerbachConfig,
) -> Result<AuerbachBasis<T>> {
    let n = u.dim();
    let m = u.ambient_dim();
    if nd.dimension() != m {
        return Err(Error::DimensionMismatch { expected: m, got: nd.dimension() });
    }
    if n > MAX_SUBSPACE_DIM {
        return Err(Error::InvalidParameter(format!(
            "subspace dimension {n} exceeds supported cap {MAX_SUBSPACE_DIM}"
        )));
    }

    // orthonormal working basis keeps the coordinate problem well conditioned
    let b = orthonormal_columns(u.basis());
    if b.ncols() != n {
        return Err(Error::RankDeficient { rank: b.ncols(), requested: n });
    }
    let oracle = BallMaximizer::new(&b, nd)?;

    let unit_column = |raw: DVector<T>| -> Result<DVector<T>> {
        let nm = norm_eval(&(&b * &raw), nd)?;
        if nm <= T::zero() {
            return Err(Error::NumericalFailure("degenerate start column".into()));
        }
        Ok(raw / nm)
    };

    let mut starts: Vec<DMatrix<T>> = Vec::with_capacity(cfg.restarts.max(1));
    let mut ident = DMatrix::<T>::zeros(n, n);
    for i in 0..n {
        let e = DVector::from_fn(n, |j, _| if i == j { T::one() } else { T::zero() });
        ident.set_column(i, &unit_column(e)?);
    }
    starts.push(ident);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while starts.len() < cfg.restarts.max(1) {
        let mut s = DMatrix::<T>::zeros(n, n);
        for i in 0..n {
            // Box-Muller pairs give rotation-invariant start directions
            let raw = DVector::from_fn(n, |_, _| {
                let u1: f64 = rng.gen_range(1e-12..1.0);
                let u2: f64 = rng.gen();
                T::of((-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos())
            });
            if raw.amax() == T::zero() {
                continue;
            }
            s.set_column(i, &unit_column(raw)?);
        }
        if rabs(s.determinant()) > T::of(1e-12) {
            starts.push(s);
        }
    }

    let mut best: Option<AscentOutcome<T>> = None;
    for start in starts {
        let out = coordinate_ascent(&oracle, start, cfg);
        if best.as_ref().map_or(true, |b| out.abs_det > b.abs_det) {
            best = Some(out);
        }
    }
    let best = best.ok_or_else(|| Error::OptimizerFailure {
        restarts: cfg.restarts,
        detail: "no nondegenerate start".into(),
    })?;

    finish_basis(u, nd, &b, &oracle, best, cfg)
}

fn finish_basis<T: Real>(
    u: &Subspace<T>,
    nd: &NormDescriptor<T>,
    b: &DMatrix<T>,
    oracle: &BallMaximizer<T>,
    out: AscentOutcome<T>,
    cfg: &AuerbachConfig,
) -> Result<AuerbachBasis<T>> {
    let n = out.coords.ncols();
    if out.abs_det <= T::zero() {
        return Err(Error::OptimizerFailure {
            restarts: cfg.restarts,
            detail: "determinant collapsed to zero".into(),
        });
    }

    let mut vectors = Vec::with_capacity(n);
    let mut functionals = Vec::with_capacity(n);
    let mut coord_functionals = Vec::with_capacity(n);
    for i in 0..n {
        let ci = out.coords.column(i).into_owned();
        vectors.push(b * &ci);
        let a = cofactor_column(&out.coords, i);
        let scale = a.dot(&ci);
        if scale == T::zero() {
            return Err(Error::OptimizerFailure {
                restarts: cfg.restarts,
                detail: format!("vanishing cofactor scale at column {i}"),
            });
        }
        let alpha = a / scale;
        // b is orthonormal, so F = b·alpha satisfies bᵀF = alpha
        functionals.push(b * &alpha);
        coord_functionals.push(alpha);
    }

    let mut residual = T::zero();
    for (i, f) in functionals.iter().enumerate() {
        for (j, x) in vectors.iter().enumerate() {
            let target = if i == j { T::one() } else { T::zero() };
            residual = rmax(residual, rabs(f.dot(x) - target));
        }
    }

    let mut excess = T::zero();
    for alpha in &coord_functionals {
        let (norm_i, _) = oracle.maximize(alpha)?;
        excess = rmax(excess, norm_i - T::one());
    }
    excess = rmax(excess, T::zero());

    let mut unit_err = T::zero();
    for x in &vectors {
        unit_err = rmax(unit_err, rabs(norm_eval(x, nd)? - T::one()));
    }

    if residual > T::of(1e-8) || excess > T::of(1e-6) || unit_err > T::of(1e-9) {
        return Err(Error::OptimizerFailure {
            restarts: cfg.restarts,
            detail: format!(
                "tolerances not met: duality residual {residual:e}, functional norm excess {excess:e}, unit norm error {unit_err:e}"
            ),
        });
    }

    Ok(AuerbachBasis {
        vectors,
        functionals,
        subspace: u.clone(),
        norm: nd.clone(),
        duality_residual: residual,
        functional_norm_excess: excess,
    })
}

/// Verified bounds for the isomorphism `J(z) = Σ zᵢ xᵢ` of an Auerbach basis.
///
/// `‖J‖` is evaluated exactly over the 2ⁿ cube vertices (a convex function on
/// the cube peaks at a vertex) and clamped by the analytic bound `n`;
/// `‖J⁻¹‖` is the largest functional norm, at most `1 + excess`.
pub fn bm_certificate<T: Real>(basis: &AuerbachBasis<T>) -> Result<IsomorphismCertificate<T>> {
    let n = basis.dim();
    let nd = basis.norm();
    let mut j_norm = T::zero();
    for sig in 0..(1usize << (n.saturating_sub(1))) {
        let mut v = basis.vectors()[0].clone();
        for i in 1..n {
            if (sig >> (i - 1)) & 1 == 0 {
                v += &basis.vectors()[i];
            } else {
                v -= &basis.vectors()[i];
            }
        }
        j_norm = rmax(j_norm, norm_eval(&v, nd)?);
    }
    let j_norm_bound = if j_norm > T::of(n as f64) { T::of(n as f64) } else { j_norm };
    let jinv_norm_bound = T::one() + basis.functional_norm_excess();
    Ok(IsomorphismCertificate { j: basis.j_matrix(), j_norm_bound, jinv_norm_bound })
}

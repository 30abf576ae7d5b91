//! Covers and covering numbers: exact ℓ∞ grid covers, constructive covers of
//! subspace balls through the Auerbach isomorphism, a farthest-point greedy
//! oracle, and exact minimum covers of small point clouds.

use crate::auerbach::{auerbach_basis, bm_certificate};
use crate::error::{Error, Result};
use crate::linalg;
use crate::norms::{norm_eval, NormDescriptor, PointCloud, Subspace};
use crate::sampling;
use crate::scalar::{rabs, rceil, rmax, Real};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

/// Probe count for coverage certification (deterministic Halton sample).
pub const CERT_PROBES: usize = 8192;

/// Inflation factor applied to the claimed radius during certification.
pub const CERT_INFLATION: f64 = 0.01;

/// Hard cap on constructed cover sizes.
const MAX_CENTERS: usize = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoverMethod {
    Grid,
    Isomorphism,
    Greedy,
}

/// Options for the covering constructions.
#[derive(Debug, Clone, Copy, Default, Serialize, Deserialize)]
pub struct CoverOptions {
    /// Report the Hilbert-space covering constant `7ⁿ` instead of `(n+1)ⁿ`
    /// in the theoretical bound when the norm is ℓ². Off by default.
    pub hilbert_constant: bool,
}

/// Result of a coverage certification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct CoverageCertificate<T: Real> {
    pub probes: usize,
    pub covered: usize,
    /// Largest probe distance to its nearest center.
    pub worst_distance: T,
    pub inflation: f64,
    pub passed: bool,
}

/// Grid data enabling O(1) coverage checks of subspace points.
#[derive(Debug, Clone)]
struct GridInfo<T: Real> {
    /// Maps an ambient subspace point to its grid coordinates.
    to_coords: DMatrix<T>,
    cells_per_axis: usize,
    extent: T,
}

/// A cover: centers, one radius, the count, and how it was built.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct CoverResult<T: Real> {
    #[serde(with = "linalg::serde_vectors")]
    centers: Vec<DVector<T>>,
    radius: T,
    count: usize,
    method: CoverMethod,
    /// Bound the construction promises, when one applies.
    pub theoretical_bound: Option<T>,
    pub notes: Vec<String>,
    pub certificate: Option<CoverageCertificate<T>>,
    #[serde(skip)]
    grid: Option<GridInfo<T>>,
}

impl<T: Real> CoverResult<T> {
    pub(crate) fn from_parts(
        centers: Vec<DVector<T>>,
        radius: T,
        method: CoverMethod,
        notes: Vec<String>,
    ) -> Self {
        let count = centers.len();
        CoverResult {
            centers,
            radius,
            count,
            method,
            theoretical_bound: None,
            notes,
            certificate: None,
            grid: None,
        }
    }

    /// Same centers viewed at a different radius and method (used when a
    /// λ-cover of an inner set is reused as a 2λ-cover of a larger one).
    pub(crate) fn rebrand(mut self, radius: T, method: CoverMethod) -> Self {
        self.radius = radius;
        self.method = method;
        self.certificate = None;
        self
    }

    pub fn centers(&self) -> &[DVector<T>] {
        &self.centers
    }

    pub fn radius(&self) -> T {
        self.radius
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn method(&self) -> CoverMethod {
        self.method
    }

    /// Distance from a point to its nearest center; grid covers resolve the
    /// candidate cell directly, others scan with early exit at `cutoff`.
    pub fn nearest_center_distance(&self, p: &DVector<T>, nd: &NormDescriptor<T>, cutoff: T) -> Result<T> {
        if let Some(grid) = &self.grid {
            let z = &grid.to_coords * p;
            let k = grid.cells_per_axis;
            let step = grid.extent * T::of(2.0) / T::of(k as f64);
            let mut idx = 0usize;
            let mut stride = 1usize;
            for i in 0..z.len() {
                let raw = ((z[i] + grid.extent) / step).as_f64().floor();
                let cell = raw.clamp(0.0, (k - 1) as f64) as usize;
                idx += cell * stride;
                stride *= k;
            }
            let d = norm_eval(&(p - &self.centers[idx]), nd)?;
            if d <= cutoff {
                return Ok(d);
            }
        }
        let mut best = T::infinity();
        for c in &self.centers {
            let d = norm_eval(&(p - c), nd)?;
            if d < best {
                best = d;
            }
            if best <= cutoff {
                break;
            }
        }
        Ok(best)
    }

    /// Check that every probe lies within `radius · (1 + inflation)` of a center.
    pub fn certify_points(
        &self,
        probes: &[DVector<T>],
        nd: &NormDescriptor<T>,
        inflation: f64,
    ) -> Result<CoverageCertificate<T>> {
        let threshold = self.radius * T::of(1.0 + inflation);
        let mut covered = 0usize;
        let mut worst = T::zero();
        for p in probes {
            let d = self.nearest_center_distance(p, nd, threshold)?;
            if d <= threshold {
                covered += 1;
            }
            worst = rmax(worst, d);
        }
        Ok(CoverageCertificate {
            probes: probes.len(),
            covered,
            worst_distance: worst,
            inflation,
            passed: covered == probes.len(),
        })
    }

    /// CSV with one center per row.
    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        let dim = self.centers.first().map_or(0, |c| c.len());
        let header: Vec<String> = (0..dim).map(|i| format!("x{i}")).collect();
        writeln!(w, "{}", header.join(","))?;
        for c in &self.centers {
            let row: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }
}

fn grid_axis_count<T: Real>(ratio: T) -> usize {
    // nudge against floating-point overshoot in exact ratios like 2.0
    let k = rceil(ratio * T::of(1.0 - 1e-12)).as_f64();
    (k as usize).max(1)
}

fn grid_centers<T: Real>(n: usize, extent: T, k: usize) -> Result<Vec<DVector<T>>> {
    let total = k.checked_pow(n as u32).filter(|&t| t <= MAX_CENTERS).ok_or_else(|| {
        Error::NumericalFailure(format!("cover of {k}^{n} centers exceeds the size cap"))
    })?;
    let step = extent * T::of(2.0) / T::of(k as f64);
    let mut centers = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut z = DVector::zeros(n);
        for i in 0..n {
            let cell = rem % k;
            rem /= k;
            z[i] = -extent + step * (T::of(cell as f64) + T::of(0.5));
        }
        centers.push(z);
    }
    Ok(centers)
}

/// Cover `B_{ℓ∞}(0, r) ⊂ ℝⁿ` by `⌈r/ρ⌉ⁿ` ℓ∞-balls of radius `ρ` on an
/// axis-aligned grid. This count is optimal for the ℓ∞-into-ℓ∞ problem.
pub fn cover_linf_ball<T: Real>(n: usize, r: T, rho: T) -> Result<CoverResult<T>> {
    if n == 0 || rho <= T::zero() || rho > r {
        return Err(Error::InvalidParameter(format!("need 0 < rho <= r, got rho={rho}, r={r}")));
    }
    let k = grid_axis_count(r / rho);
    let centers = grid_centers(n, r, k)?;
    let count = centers.len();
    let mut result = CoverResult {
        centers,
        radius: rho,
        count,
        method: CoverMethod::Grid,
        theoretical_bound: Some(T::of((k as f64).powi(n as i32))),
        notes: vec!["grid count ⌈r/ρ⌉ⁿ is optimal for the ℓ∞→ℓ∞ covering".into()],
        certificate: None,
        grid: Some(GridInfo {
            to_coords: DMatrix::identity(n, n),
            cells_per_axis: k,
            extent: r,
        }),
    };
    let nd = NormDescriptor::linf(n);
    let probes: Vec<DVector<T>> = sampling::halton(n, CERT_PROBES)
        .into_iter()
        .map(|pt| DVector::from_iterator(n, pt.iter().map(|&x| T::of(2.0 * x - 1.0) * r)))
        .collect();
    result.certificate = Some(result.certify_points(&probes, &nd, CERT_INFLATION)?);
    Ok(result)
}

/// Deterministic probes of the subspace ball `B_U(0, r)`: boundary and
/// interior points derived from Halton directions in subspace coordinates.
pub fn subspace_ball_probes<T: Real>(
    u: &Subspace<T>,
    nd: &NormDescriptor<T>,
    r: T,
    count: usize,
) -> Result<Vec<DVector<T>>> {
    let n = u.dim();
    let dirs = sampling::sphere_directions::<T>(n, count);
    let radii = sampling::halton(1, dirs.len());
    let mut probes = Vec::with_capacity(dirs.len());
    for (i, c) in dirs.iter().enumerate() {
        let y = u.embed(c);
        let nm = norm_eval(&y, nd)?;
        if nm <= T::zero() {
            continue;
        }
        let scale = if i % 2 == 0 { T::one() } else { T::of(radii[i][0]) };
        probes.push(y * (r * scale / nm));
    }
    Ok(probes)
}

/// Cover `B_U(0, r)` by ambient-norm balls of radius `ρ` centred in `U`,
/// following the isomorphism route: Auerbach basis → `J` → ℓ∞ grid of
/// `⌈‖J‖‖J⁻¹‖ r/ρ⌉ⁿ` cells → push-forward. The count never exceeds
/// `(n+1)ⁿ (r/ρ)ⁿ`.
pub fn cover_subspace_ball<T: Real>(
    u: &Subspace<T>,
    nd: &NormDescriptor<T>,
    r: T,
    rho: T,
    opts: &CoverOptions,
) -> Result<CoverResult<T>> {
    if rho <= T::zero() || rho > r {
        return Err(Error::InvalidParameter(format!("need 0 < rho <= r, got rho={rho}, r={r}")));
    }
    let n = u.dim();
    let basis = auerbach_basis(u, nd)?;
    let cert = bm_certificate(&basis)?;

    let extent = cert.jinv_norm_bound * r;
    let rho_z = rho / cert.j_norm_bound;
    let k = grid_axis_count(extent / rho_z);
    let z_centers = grid_centers(n, extent, k)?;
    let j = &cert.j;
    let centers: Vec<DVector<T>> = z_centers.iter().map(|z| j * z).collect();
    let count = centers.len();

    let ratio = r / rho;
    let constant = if opts.hilbert_constant && nd.is_l2() {
        T::of(7.0).powi(n as i32)
    } else {
        T::of((n + 1) as f64).powi(n as i32)
    };
    let bound = constant * ratio.powi(n as i32);
    let mut notes = vec![format!(
        "grid of ⌈‖J‖‖J⁻¹‖r/ρ⌉ⁿ = {k}^{n} cells; ‖J‖ ≤ {}, ‖J⁻¹‖ ≤ {}",
        cert.j_norm_bound, cert.jinv_norm_bound
    )];
    if opts.hilbert_constant && nd.is_l2() {
        notes.push("reported bound uses the Hilbert-space covering constant 7ⁿ".into());
        if T::of(count as f64) > bound {
            notes.push("constructive grid count exceeds the 7ⁿ reporting constant".into());
        }
    } else if T::of(count as f64) > bound {
        return Err(Error::NumericalFailure(format!(
            "cover count {count} exceeds the (n+1)ⁿ(r/ρ)ⁿ bound {bound}"
        )));
    }

    // functional coordinates z_i = f_i(y) invert J on the subspace
    let m = u.ambient_dim();
    let f_mat = DMatrix::from_fn(n, m, |i, jx| basis.functionals()[i][jx]);
    let mut result = CoverResult {
        centers,
        radius: rho,
        count,
        method: CoverMethod::Isomorphism,
        theoretical_bound: Some(bound),
        notes,
        certificate: None,
        grid: Some(GridInfo { to_coords: f_mat, cells_per_axis: k, extent }),
    };
    let probes = subspace_ball_probes(u, nd, r, CERT_PROBES)?;
    result.certificate = Some(result.certify_points(&probes, nd, CERT_INFLATION)?);
    Ok(result)
}

/// Farthest-point greedy ε-net over a point cloud. Deterministic: seeded at
/// the lexicographically smallest point, ties broken by smallest index.
/// The count upper-bounds `N_X(K, ε)`.
pub fn greedy_cover<T: Real>(
    k_cloud: &PointCloud<T>,
    eps: T,
    nd: &NormDescriptor<T>,
) -> Result<CoverResult<T>> {
    if eps <= T::zero() {
        return Err(Error::InvalidParameter("greedy_cover needs eps > 0".into()));
    }
    let pts = k_cloud.points();
    let tol = eps * T::of(1.0 + 1e-12);
    let seed = sampling::lex_min_index(pts);
    let mut centers = vec![pts[seed].clone()];
    let mut dist: Vec<T> = pts
        .iter()
        .map(|p| norm_eval(&(p - &pts[seed]), nd))
        .collect::<Result<_>>()?;
    loop {
        let mut far = 0usize;
        for i in 1..pts.len() {
            if dist[i] > dist[far] {
                far = i;
            }
        }
        if dist[far] <= tol {
            break;
        }
        centers.push(pts[far].clone());
        for i in 0..pts.len() {
            let d = norm_eval(&(&pts[i] - &pts[far]), nd)?;
            if d < dist[i] {
                dist[i] = d;
            }
        }
    }
    let count = centers.len();
    Ok(CoverResult {
        centers,
        radius: eps,
        count,
        method: CoverMethod::Greedy,
        theoretical_bound: None,
        notes: vec!["farthest-point greedy; count ≤ N_X(K, ε/2)".into()],
        certificate: None,
        grid: None,
    })
}

/// Covering number of a point cloud with centers drawn from the cloud itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Real")]
pub struct CoveringNumber<T: Real> {
    pub count: usize,
    pub cover: CoverResult<T>,
    /// True when the count is the exact minimum over center subsets of `K`.
    pub exact: bool,
    /// The classical relation tying centers-in-K counts to arbitrary centers.
    pub relation: String,
}

/// Exact minimum cover for `|K| ≤ 20` (search over center subsets of `K`),
/// greedy upper bound otherwise.
pub fn covering_number<T: Real>(
    k_cloud: &PointCloud<T>,
    eps: T,
    nd: &NormDescriptor<T>,
) -> Result<CoveringNumber<T>> {
    let relation = "N(K,eps) <= count(centers in K) <= N(K,eps/2)".to_string();
    let pts = k_cloud.points();
    if pts.len() > 20 {
        let cover = greedy_cover(k_cloud, eps, nd)?;
        return Ok(CoveringNumber { count: cover.count(), cover, exact: false, relation });
    }

    let tol = eps * T::of(1.0 + 1e-12);
    let n = pts.len();
    let mut masks = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if norm_eval(&(&pts[i] - &pts[j]), nd)? <= tol {
                masks[i] |= 1 << j;
            }
        }
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let greedy = greedy_cover(k_cloud, eps, nd)?;
    let mut best: Vec<usize> = (0..n).collect();
    if greedy.count() < best.len() {
        // map greedy centers back to indices for a warm upper bound
        best = greedy
            .centers()
            .iter()
            .map(|c| pts.iter().position(|p| !sampling::differs(p, c, T::zero())).unwrap_or(0))
            .collect();
    }

    fn search(
        covered: u32,
        full: u32,
        chosen: &mut Vec<usize>,
        best: &mut Vec<usize>,
        masks: &[u32],
    ) {
        if covered == full {
            if chosen.len() < best.len() {
                *best = chosen.clone();
            }
            return;
        }
        if chosen.len() + 1 >= best.len() {
            return;
        }
        // branch on the uncovered point with the fewest covering candidates
        let mut pivot = usize::MAX;
        let mut pivot_options = u32::MAX;
        for j in 0..masks.len() {
            if covered & (1 << j) == 0 {
                let options = masks.iter().filter(|&&m| m & (1 << j) != 0).count() as u32;
                if options < pivot_options {
                    pivot_options = options;
                    pivot = j;
                }
            }
        }
        for i in 0..masks.len() {
            if masks[i] & (1 << pivot) != 0 {
                chosen.push(i);
                search(covered | masks[i], full, chosen, best, masks);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::new();
    search(0, full, &mut chosen, &mut best, &masks);

    let centers: Vec<DVector<T>> = best.iter().map(|&i| pts[i].clone()).collect();
    let count = centers.len();
    let cover = CoverResult {
        centers,
        radius: eps,
        count,
        method: CoverMethod::Greedy,
        theoretical_bound: None,
        notes: vec![relation.clone()],
        certificate: None,
        grid: None,
    };
    Ok(CoveringNumber { count, cover, exact: true, relation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    #[test]
    fn linf_cover_equal_radii_is_single_ball() {
        let c = cover_linf_ball::<f64>(2, 1.0, 1.0).unwrap();
        assert_eq!(c.count(), 1);
        assert!(c.centers()[0].amax() == 0.0);
        assert!(c.certificate.as_ref().unwrap().passed);
    }

    #[test]
    fn linf_cover_halving_1d() {
        let c = cover_linf_ball::<f64>(1, 1.0, 0.5).unwrap();
        assert_eq!(c.count(), 2);
        let mut xs: Vec<f64> = c.centers().iter().map(|c| c[0]).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((xs[0] + 0.5).abs() < 1e-12 && (xs[1] - 0.5).abs() < 1e-12);
        // one ball cannot cover [-1, 1]: check by exhaustive center sampling
        for k in 0..=100 {
            let center = -1.0 + 0.02 * k as f64;
            let covers = (center - (-1.0)).abs() <= 0.5 && (center - 1.0).abs() <= 0.5;
            assert!(!covers);
        }
    }

    #[test]
    fn linf_cover_2d_four_cells() {
        let c = cover_linf_ball::<f64>(2, 1.0, 0.5).unwrap();
        assert_eq!(c.count(), 4);
        assert!(c.certificate.as_ref().unwrap().passed);
    }

    #[test]
    fn linf_cover_rejects_bad_radii() {
        assert!(cover_linf_ball::<f64>(2, 1.0, 1.5).is_err());
        assert!(cover_linf_ball::<f64>(2, 1.0, 0.0).is_err());
    }

    #[test]
    fn subspace_cover_axis_line_in_linf_plane() {
        let u = Subspace::<f64>::coordinate(2, &[0]).unwrap();
        let nd = NormDescriptor::linf(2);
        let c = cover_subspace_ball(&u, &nd, 1.0, 0.5, &CoverOptions::default()).unwrap();
        assert!(c.count() <= 4, "bound (1+1)^1 * 2 = 4, got {}", c.count());
        assert!(c.certificate.as_ref().unwrap().passed);
        // centers stay in U
        for center in c.centers() {
            assert!(center[1].abs() < 1e-12);
        }
    }

    #[test]
    fn subspace_cover_equal_radii_bound() {
        let u = Subspace::<f64>::coordinate(3, &[0, 2]).unwrap();
        let nd = NormDescriptor::l2(3);
        let c = cover_subspace_ball(&u, &nd, 1.0, 1.0, &CoverOptions::default()).unwrap();
        assert!(c.count() <= 9, "bound (n+1)^n = 9 at r = ρ, got {}", c.count());
        assert!(c.certificate.as_ref().unwrap().passed);
    }

    #[test]
    fn hilbert_constant_switch_changes_reported_bound() {
        let u = Subspace::<f64>::coordinate(3, &[0, 1]).unwrap();
        let nd = NormDescriptor::l2(3);
        let plain = cover_subspace_ball(&u, &nd, 1.0, 0.5, &CoverOptions::default()).unwrap();
        let hilbert =
            cover_subspace_ball(&u, &nd, 1.0, 0.5, &CoverOptions { hilbert_constant: true }).unwrap();
        assert_eq!(plain.theoretical_bound.unwrap(), 9.0 * 4.0);
        assert_eq!(hilbert.theoretical_bound.unwrap(), 49.0 * 4.0);
        // switch is l2-only
        let ndinf = NormDescriptor::linf(3);
        let inf = cover_subspace_ball(&u, &ndinf, 1.0, 0.5, &CoverOptions { hilbert_constant: true }).unwrap();
        assert_eq!(inf.theoretical_bound.unwrap(), 9.0 * 4.0);
    }

    #[test]
    fn greedy_single_point() {
        let k = PointCloud::new(vec![dvector![1.0, 2.0]]).unwrap();
        let c = greedy_cover(&k, 0.1, &NormDescriptor::l2(2)).unwrap();
        assert_eq!(c.count(), 1);
    }

    #[test]
    fn greedy_two_distant_points() {
        let k = PointCloud::new(vec![dvector![0.0], dvector![3.0]]).unwrap();
        let c = greedy_cover(&k, 1.0, &NormDescriptor::l2(1)).unwrap();
        assert_eq!(c.count(), 2);
    }

    #[test]
    fn greedy_segment_count_near_optimal() {
        let pts: Vec<DVector<f64>> = (0..1000).map(|i| dvector![i as f64 / 999.0]).collect();
        let k = PointCloud::new(pts).unwrap();
        let c = greedy_cover(&k, 0.125, &NormDescriptor::linf(1)).unwrap();
        // exact interval covering needs ceil(1/(2*0.125)) = 4 balls
        assert!(c.count() >= 4 && c.count() <= 8, "got {}", c.count());
    }

    #[test]
    fn covering_number_single_and_diameter() {
        let nd = NormDescriptor::l2(2);
        let k = PointCloud::new(vec![dvector![0.0, 0.0]]).unwrap();
        assert_eq!(covering_number(&k, 1.0, &nd).unwrap().count, 1);
        let k2 = PointCloud::new(vec![dvector![0.0, 0.0], dvector![1.0, 0.0], dvector![0.0, 1.0]]).unwrap();
        let diam = k2.diameter(&nd).unwrap();
        assert_eq!(covering_number(&k2, diam, &nd).unwrap().count, 1);
    }

    #[test]
    fn covering_number_three_collinear_unit_spacing() {
        // points {0, 1, 2}, eps = 1: the middle point covers all of K
        // (closed balls), so the exhaustive minimum with centers in K is 1
        let k = PointCloud::new(vec![dvector![0.0], dvector![1.0], dvector![2.0]]).unwrap();
        let nd = NormDescriptor::l2(1);
        let res = covering_number(&k, 1.0, &nd).unwrap();
        assert!(res.exact);
        assert_eq!(res.count, 1);
        assert!(res.relation.contains("N(K,eps)"));
    }

    #[test]
    fn covering_number_matches_brute_force_enumeration() {
        // independent oracle: try all subsets in increasing size order
        let pts = vec![
            dvector![0.0, 0.0],
            dvector![2.5, 0.0],
            dvector![0.0, 2.5],
            dvector![2.5, 2.5],
            dvector![1.2, 1.2],
        ];
        let nd = NormDescriptor::l2(2);
        let k = PointCloud::new(pts.clone()).unwrap();
        let eps = 1.4;
        let res = covering_number(&k, eps, &nd).unwrap();

        let n = pts.len();
        let mut brute = usize::MAX;
        'outer: for size in 1..=n {
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let all_covered = (0..n).all(|j| {
                    (0..n).any(|i| {
                        mask & (1 << i) != 0
                            && norm_eval(&(&pts[j] - &pts[i]), &nd).unwrap() <= eps * (1.0 + 1e-12)
                    })
                });
                if all_covered {
                    brute = size;
                    break 'outer;
                }
            }
        }
        assert_eq!(res.count, brute);
    }

    #[test]
    fn covering_monotone_in_eps() {
        let pts: Vec<DVector<f64>> = (0..12)
            .map(|i| dvector![(i as f64 * 0.739).sin(), (i as f64 * 1.131).cos()])
            .collect();
        let k = PointCloud::new(pts).unwrap();
        let nd = NormDescriptor::l2(2);
        let mut last = usize::MAX;
        for eps in [0.2, 0.4, 0.8, 1.6] {
            let c = covering_number(&k, eps, &nd).unwrap().count;
            assert!(c <= last);
            last = c;
        }
    }

    #[test]
    fn cover_csv_has_one_center_per_row() {
        let c = cover_linf_ball::<f64>(2, 1.0, 0.5).unwrap();
        let mut buf = Vec::new();
        c.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + c.count());
    }
}

//! The `A_α` matrix, its spectral radius with a certified Perron vector,
//! degree-based bounds on the α-index, and the column-sum certificate used to
//! rule out non-extremal graphs.

use serde::Serialize;

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Mixing parameter `α ∈ [0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&alpha) {
            Ok(AlphaParam(alpha))
        } else {
            Err(Error::AlphaOutOfRange(alpha))
        }
    }

    /// Like [`AlphaParam::new`] but restricted to `[1/2, 1)`, where the
    /// extremal results are claimed.
    pub fn extremal_range(alpha: f64) -> Result<Self> {
        if (0.5..1.0).contains(&alpha) {
            Ok(AlphaParam(alpha))
        } else {
            Err(Error::AlphaOutsideExtremalRange(alpha))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// Dense symmetric `αD + (1-α)A`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl AlphaMatrix {
    pub fn new(g: &Graph, alpha: AlphaParam) -> AlphaMatrix {
        let n = g.order();
        let a = alpha.value();
        let mut entries = vec![0.0; n * n];
        for u in 0..n {
            entries[u * n + u] = a * g.degree(u) as f64;
            for v in ones(g.rows()[u]) {
                entries[u * n + v] = 1.0 - a;
            }
        }
        AlphaMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> f64 {
        self.entries[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[f64] {
        &self.entries[u * self.n..(u + 1) * self.n]
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|u| dot(self.row(u), x)).collect()
    }

    /// `self * self`.
    pub fn square(&self) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a != 0.0 {
                    for j in 0..n {
                        out[i * n + j] += a * self.get(k, j);
                    }
                }
            }
        }
        out
    }
}

pub fn build_alpha_matrix(g: &Graph, alpha: AlphaParam) -> AlphaMatrix {
    AlphaMatrix::new(g, alpha)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn max_abs(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(0.0, |m, x| m.max(x.abs()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralConfig {
    /// Bound on `‖A_α x − ρ x‖_∞` at convergence.
    pub tol: f64,
    pub max_iters: usize,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig { tol: 1e-10, max_iters: 100_000 }
    }
}

/// Largest eigenvalue of `A_α(G)` with its unit Perron vector.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResult {
    pub radius: f64,
    pub perron: Vec<f64>,
    /// `‖A_α x − ρ x‖_∞` over the whole graph.
    pub residual: f64,
    pub iterations: usize,
}

pub fn spectral_radius(g: &Graph, alpha: AlphaParam) -> Result<SpectralResult> {
    spectral_radius_with(g, alpha, &SpectralConfig::default())
}

/// Computes `ρ_α(G)` per connected component and keeps the largest.
///
/// For a disconnected graph the returned vector is the Perron vector of the
/// dominant component, zero elsewhere.
pub fn spectral_radius_with(g: &Graph, alpha: AlphaParam, cfg: &SpectralConfig) -> Result<SpectralResult> {
    let components = g.components();
    if components.len() == 1 {
        return power_iteration(&AlphaMatrix::new(g, alpha), g.max_degree() as f64, cfg);
    }
    let mut best: Option<(SpectralResult, Vec<usize>)> = None;
    let mut iterations = 0;
    for comp in components {
        let h = g.induced_subgraph(comp)?;
        let r = power_iteration(&AlphaMatrix::new(&h, alpha), h.max_degree() as f64, cfg)?;
        iterations += r.iterations;
        if best.as_ref().is_none_or(|(b, _)| r.radius > b.radius) {
            best = Some((r, comp.iter().collect()));
        }
    }
    let (inner, verts) = best.expect("at least one component");
    let mut perron = vec![0.0; g.order()];
    for (x, v) in inner.perron.iter().zip(verts) {
        perron[v] = *x;
    }
    let m = AlphaMatrix::new(g, alpha);
    let ax = m.mul_vec(&perron);
    let residual = max_abs(ax.iter().zip(&perron).map(|(a, x)| a - inner.radius * x));
    Ok(SpectralResult { radius: inner.radius, perron, residual, iterations })
}

/// Power iteration on `M + shift·I` from the normalized all-ones vector.
///
/// With `shift = Δ` every eigenvalue of the shifted matrix is non-negative
/// (Gershgorin), so for an irreducible non-negative `M` the Perron root is the
/// strictly dominant one. The estimate is the Rayleigh quotient.
fn power_iteration(m: &AlphaMatrix, shift: f64, cfg: &SpectralConfig) -> Result<SpectralResult> {
    let n = m.dim();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut residual = f64::INFINITY;
    for it in 1..=cfg.max_iters {
        let ax = m.mul_vec(&x);
        let radius = dot(&x, &ax);
        residual = max_abs(ax.iter().zip(&x).map(|(a, xi)| a - radius * xi));
        if residual <= cfg.tol {
            return Ok(SpectralResult { radius, perron: x, residual, iterations: it });
        }
        let mut y: Vec<f64> = ax.iter().zip(&x).map(|(a, xi)| a + shift * xi).collect();
        let norm = dot(&y, &y).sqrt();
        if norm == 0.0 {
            // zero matrix: any unit vector is an eigenvector for 0
            return Ok(SpectralResult { radius: 0.0, perron: x, residual: 0.0, iterations: it });
        }
        y.iter_mut().for_each(|v| *v /= norm);
        x = y;
    }
    Err(Error::NotConverged { iterations: cfg.max_iters, residual })
}

fn require_no_isolated(g: &Graph) -> Result<()> {
    match (0..g.order()).find(|&u| g.degree(u) == 0) {
        Some(u) => Err(Error::IsolatedVertex(u)),
        None => Ok(()),
    }
}

/// Per-vertex upper bound `α d(u) + (1-α)/d(u) · Σ_{v~u} d(v)`, maximized over `u`.
pub fn bound_upper_degree(g: &Graph, alpha: AlphaParam) -> Result<f64> {
    require_no_isolated(g)?;
    let a = alpha.value();
    Ok((0..g.order())
        .map(|u| {
            let d = g.degree(u) as f64;
            a * d + (1.0 - a) / d * g.neighbor_degree_sum(u) as f64
        })
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Per-edge upper bound
/// `½[α(d(u)+d(v)) + sqrt(α²(d(u)-d(v))² + 4(1-α)² m(u) m(v))]`, maximized over edges.
pub fn bound_upper_edge(g: &Graph, alpha: AlphaParam) -> Result<f64> {
    require_no_isolated(g)?;
    let a = alpha.value();
    let avg: Vec<f64> = (0..g.order()).map(|u| g.neighbor_degree_average(u)).collect::<Result<_>>()?;
    Ok(g.edges()
        .map(|(u, v)| {
            let (du, dv) = (g.degree(u) as f64, g.degree(v) as f64);
            let disc = a * a * (du - dv) * (du - dv) + 4.0 * (1.0 - a) * (1.0 - a) * avg[u] * avg[v];
            0.5 * (a * (du + dv) + disc.sqrt())
        })
        .fold(f64::NEG_INFINITY, f64::max))
}

/// Lower bound from the maximum degree `Δ`: `α(Δ+1)` for `α ≤ 1/2`,
/// `αΔ + (1-α)²/α` for `α > 1/2` (the two agree at `α = 1/2`).
pub fn bound_lower_delta(g: &Graph, alpha: AlphaParam) -> f64 {
    let a = alpha.value();
    let delta = g.max_degree() as f64;
    if a <= 0.5 {
        a * (delta + 1.0)
    } else {
        a * delta + (1.0 - a) * (1.0 - a) / a
    }
}

/// Column sums of `B = A_α² − α n A_α + 2(2α−1)(n−2) I`, evaluated from the
/// explicit matrix and from the degree formula
/// `α d(u)² + (1−α) Σ_{v~u} d(v) − α n d(u) + 2(2α−1)(n−2)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ColumnSums {
    pub matrix: Vec<f64>,
    pub formula: Vec<f64>,
}

impl ColumnSums {
    pub fn max_discrepancy(&self) -> f64 {
        max_abs(self.matrix.iter().zip(&self.formula).map(|(a, b)| a - b))
    }

    pub fn all_negative(&self) -> bool {
        self.formula.iter().chain(&self.matrix).all(|&c| c < 0.0)
    }
}

pub const CERTIFICATE_AGREEMENT: f64 = 1e-9;

/// Computes both column-sum routes and fails if they differ by more than
/// [`CERTIFICATE_AGREEMENT`]. `n_param` is the `n` in the definition of `B`.
pub fn column_sum_certificate(g: &Graph, alpha: AlphaParam, n_param: usize) -> Result<ColumnSums> {
    let n = g.order();
    let a = alpha.value();
    let np = n_param as f64;
    let shift = 2.0 * (2.0 * a - 1.0) * (np - 2.0);
    let am = AlphaMatrix::new(g, alpha);
    let sq = am.square();
    let mut matrix = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            let b = sq[i * n + j] - a * np * am.get(i, j) + if i == j { shift } else { 0.0 };
            matrix[j] += b;
        }
    }
    let formula: Vec<f64> = (0..n)
        .map(|u| {
            let d = g.degree(u) as f64;
            a * d * d + (1.0 - a) * g.neighbor_degree_sum(u) as f64 - a * np * d + shift
        })
        .collect();
    for u in 0..n {
        if (matrix[u] - formula[u]).abs() > CERTIFICATE_AGREEMENT {
            return Err(Error::CertificateMismatch { vertex: u, matrix: matrix[u], formula: formula[u] });
        }
    }
    Ok(ColumnSums { matrix, formula })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make, FamilySpec};

    fn fam(s: &str) -> Graph {
        make(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn al(a: f64) -> AlphaParam {
        AlphaParam::new(a).unwrap()
    }

    #[test]
    fn alpha_ranges() {
        assert!(AlphaParam::new(-0.1).is_err());
        assert!(AlphaParam::new(1.0).is_ok());
        assert!(AlphaParam::extremal_range(1.0).is_err());
        assert!(AlphaParam::extremal_range(0.3).is_err());
        assert!(AlphaParam::extremal_range(0.5).is_ok());
        assert!(AlphaParam::new(f64::NAN).is_err());
    }

    #[test]
    fn matrix_entries() {
        let k2 = fam("K2");
        let m = AlphaMatrix::new(&k2, al(0.5));
        assert_eq!(m.entries, vec![0.5, 0.5, 0.5, 0.5]);
        let w7 = fam("W7");
        let d = AlphaMatrix::new(&w7, al(1.0));
        for u in 0..7 {
            for v in 0..7 {
                let want = if u == v { w7.degree(u) as f64 } else { 0.0 };
                assert_eq!(d.get(u, v), want);
            }
        }
        let a = AlphaMatrix::new(&fam("C3"), al(0.0));
        assert_eq!(a, AlphaMatrix::new(&fam("K3"), al(0.0)));
        assert_eq!(a.entries, vec![0.0, 1.0, 1.0, 1.0, 0.0, 1.0, 1.0, 1.0, 0.0]);
    }

    #[test]
    fn regular_graphs_have_radius_degree() {
        for a in [0.0, 0.3, 0.5, 0.9, 1.0] {
            let r = spectral_radius(&fam("C9"), al(a)).unwrap();
            assert!((r.radius - 2.0).abs() < 1e-10);
            assert!(r.residual <= 1e-10);
            let norm: f64 = r.perron.iter().map(|x| x * x).sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bipartite_adjacency_radius_converges() {
        let r = spectral_radius(&fam("K2,6"), al(0.0)).unwrap();
        assert!((r.radius - 12f64.sqrt()).abs() < 1e-9);
        assert!(r.perron.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn disconnected_takes_largest_component() {
        let g = crate::families::disjoint_union(&fam("K4"), &fam("C5")).unwrap();
        let r = spectral_radius(&g, al(0.5)).unwrap();
        assert!((r.radius - 3.0).abs() < 1e-10);
        assert!(r.perron[4..].iter().all(|&x| x == 0.0));
        assert!(r.residual <= 1e-10);
        let r = spectral_radius(&Graph::empty(3).unwrap(), al(0.5)).unwrap();
        assert_eq!(r.radius, 0.0);
    }

    #[test]
    fn non_convergence_is_reported() {
        let cfg = SpectralConfig { tol: 1e-10, max_iters: 2 };
        let err = spectral_radius_with(&fam("K2,6"), al(0.3), &cfg).unwrap_err();
        assert!(matches!(err, Error::NotConverged { iterations: 2, .. }));
    }

    #[test]
    fn degree_bound_examples() {
        assert!((bound_upper_degree(&fam("C7"), al(0.6)).unwrap() - 2.0).abs() < 1e-12);
        assert!((bound_upper_degree(&fam("K1,3"), al(0.5)).unwrap() - 2.0).abs() < 1e-12);
        assert!((bound_upper_degree(&fam("W7"), al(0.5)).unwrap() - 4.5).abs() < 1e-12);
        let isolated = Graph::from_edge_list(3, &[(0, 1)]).unwrap();
        assert!(matches!(bound_upper_degree(&isolated, al(0.5)), Err(Error::IsolatedVertex(2))));
    }

    #[test]
    fn edge_bound_examples() {
        assert!((bound_upper_edge(&fam("C5"), al(0.5)).unwrap() - 2.0).abs() < 1e-12);
        assert!((bound_upper_edge(&fam("K2,6"), al(0.5)).unwrap() - 4.0).abs() < 1e-12);
        // P_3 at α = 0: m(end) = 2, m(middle) = 1, so the bound is sqrt(2)
        assert!((bound_upper_edge(&fam("P3"), al(0.0)).unwrap() - 2f64.sqrt()).abs() < 1e-12);
        assert!(bound_upper_edge(&Graph::empty(2).unwrap(), al(0.5)).is_err());
    }

    #[test]
    fn lower_bound_examples() {
        let w7 = fam("W7");
        assert!((bound_lower_delta(&w7, al(0.5)) - 3.5).abs() < 1e-12);
        assert!((bound_lower_delta(&w7, al(0.75)) - (4.5 + 0.0625 / 0.75)).abs() < 1e-12);
        assert!((bound_lower_delta(&fam("K1,5"), al(0.5)) - 3.0).abs() < 1e-12);
        assert_eq!(bound_lower_delta(&w7, al(0.0)), 0.0);
    }

    #[test]
    fn column_sums_of_k26_vanish() {
        // hub: .5*36 + .5*12 - .5*8*6 = 0; leaf: .5*4 + .5*12 - .5*8*2 = 0
        let c = column_sum_certificate(&fam("K2,6"), al(0.5), 8).unwrap();
        for v in c.formula.iter().chain(&c.matrix) {
            assert!(v.abs() < 1e-12, "{c:?}");
        }
        assert!(!c.all_negative());
    }

    #[test]
    fn column_sums_of_regular_graph() {
        // r^2 - n r / 2 for r = 2, n = 8
        let c = column_sum_certificate(&fam("C8"), al(0.5), 8).unwrap();
        assert!(c.formula.iter().all(|&x| (x + 4.0).abs() < 1e-12));
        assert!(c.all_negative());
        assert!(c.max_discrepancy() < 1e-12);
    }
}

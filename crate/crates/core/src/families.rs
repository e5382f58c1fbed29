//! Named graph families, join and disjoint union, and closed-form α-indices.
//!
//! Vertex numbering is fixed so that serialized outputs are reproducible:
//!
//! | family | numbering |
//! |---|---|
//! | `P_n` | path `0-1-...-(n-1)` |
//! | `C_n` | path plus the edge `(n-1)-0` |
//! | `K_n` | all pairs |
//! | `K_{a,b}` | side `0..a`, side `a..a+b` |
//! | `W_n` | hub `0`, rim cycle `1-2-...-(n-1)-1` |
//! | `F_k` | hub `0`, triangles `{0, 2i-1, 2i}` for `i = 1..=k` |

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::spectral::AlphaParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Wheel on `n` vertices, `K_1 ∨ C_{n-1}`.
    Wheel(usize),
    /// `k` triangles sharing one vertex; order `2k + 1`.
    Friendship(usize),
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Wheel(n) => n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Friendship(k) => 2 * k + 1,
        }
    }

    fn validate(&self) -> Result<()> {
        let (ok, rule) = match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) => (n >= 1, "n >= 1"),
            FamilySpec::Cycle(n) => (n >= 3, "n >= 3"),
            FamilySpec::Wheel(n) => (n >= 4, "n >= 4"),
            FamilySpec::CompleteBipartite(a, b) => (a >= 1 && b >= 1, "a, b >= 1"),
            FamilySpec::Friendship(k) => (k >= 1, "k >= 1"),
        };
        if !ok {
            return Err(Error::InvalidFamily(format!("{self}: requires {rule}")));
        }
        if self.order() > MAX_ORDER {
            return Err(Error::InvalidFamily(format!("{self}: order {} exceeds {MAX_ORDER}", self.order())));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::Friendship(k) => write!(f, "F{k}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `P5`, `C7`, `K4`, `K2,6`, `W7`, `F3` (letter case ignored).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse {s:?}"));
        let s = s.trim();
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let params = chars
            .as_str()
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let spec = match (letter, params.as_slice()) {
            ('P', &[n]) => FamilySpec::Path(n),
            ('C', &[n]) => FamilySpec::Cycle(n),
            ('K', &[n]) => FamilySpec::Complete(n),
            ('K', &[a, b]) => FamilySpec::CompleteBipartite(a, b),
            ('W', &[n]) => FamilySpec::Wheel(n),
            ('F', &[k]) => FamilySpec::Friendship(k),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn make(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut edges = Vec::new();
    match *spec {
        FamilySpec::Path(n) => edges.extend((1..n).map(|v| (v - 1, v))),
        FamilySpec::Cycle(n) => {
            edges.extend((1..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 0));
        }
        FamilySpec::Complete(n) => {
            for v in 0..n {
                edges.extend((0..v).map(|u| (u, v)));
            }
        }
        FamilySpec::CompleteBipartite(a, b) => {
            for u in 0..a {
                edges.extend((a..a + b).map(|v| (u, v)));
            }
        }
        FamilySpec::Wheel(n) => {
            edges.extend((1..n).map(|v| (0, v)));
            edges.extend((2..n).map(|v| (v - 1, v)));
            edges.push((n - 1, 1));
        }
        FamilySpec::Friendship(k) => {
            for i in 1..=k {
                edges.extend([(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
            }
        }
    }
    Graph::from_edge_list(spec.order(), &edges)
}

fn combine(g1: &Graph, g2: &Graph, cross: bool) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 + n2 > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n: n1 + n2, max: MAX_ORDER });
    }
    let low = (1u64 << n1) - 1;
    let high = if n1 + n2 == 64 { !low } else { ((1u64 << (n1 + n2)) - 1) & !low };
    let mut rows = Vec::with_capacity(n1 + n2);
    rows.extend(g1.rows().iter().map(|&r| if cross { r | high } else { r }));
    rows.extend(g2.rows().iter().map(|&r| (r << n1) | if cross { low } else { 0 }));
    Ok(Graph::from_rows_unchecked(rows))
}

/// `g1 ∨ g2`: the disjoint union plus every edge between the two blocks.
pub fn join(g1: &Graph, g2: &Graph) -> Result<Graph> {
    combine(g1, g2, true)
}

/// `g1 ∪ g2` with `g1` on the low vertex block.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Result<Graph> {
    combine(g1, g2, false)
}

/// Larger root of `x^2 + b x + c = 0` (real roots assumed), evaluated without
/// cancellation between `-b` and the square root.
pub fn larger_quadratic_root(b: f64, c: f64) -> f64 {
    let disc = (b * b - 4.0 * c).max(0.0);
    let sq = disc.sqrt();
    if b <= 0.0 {
        (-b + sq) / 2.0
    } else if sq == b {
        0.0
    } else {
        // both roots non-positive; the larger one is c / (smaller root)
        2.0 * c / (-b - sq)
    }
}

/// α-index of `G1 ∨ G2` for an `r1`-regular `G1` on `n1` vertices and an
/// `r2`-regular `G2` on `n2` vertices: the larger eigenvalue of
/// `[[r1 + α n2, (1-α)^2 n1 n2], [1, r2 + α n1]]`.
pub fn rho_join_regular(r1: usize, n1: usize, r2: usize, n2: usize, alpha: AlphaParam) -> Result<f64> {
    if r1 >= n1 || r2 >= n2 {
        return Err(Error::Hypothesis(format!(
            "regular join needs 0 <= r < n for each factor, got ({r1}, {n1}) and ({r2}, {n2})"
        )));
    }
    let a = alpha.value();
    let (r1, n1, r2, n2) = (r1 as f64, n1 as f64, r2 as f64, n2 as f64);
    let p = r1 + a * n2;
    let s = r2 + a * n1;
    let off = (1.0 - a) * (1.0 - a) * n1 * n2;
    // char. polynomial x^2 - (p + s) x + (p s - off); discriminant (p - s)^2 + 4 off >= 0
    Ok(larger_quadratic_root(-(p + s), p * s - off))
}

/// α-index of `K_{a,b}`: `½(α(a+b) + sqrt(α²(a+b)² + 4ab(1-2α)))`.
pub fn rho_complete_bipartite(a: usize, b: usize, alpha: AlphaParam) -> Result<f64> {
    if a == 0 || b == 0 {
        return Err(Error::Hypothesis("complete bipartite sides must be non-empty".into()));
    }
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    let al = alpha.value();
    let (sum, prod) = ((a + b) as f64, (a * b) as f64);
    let disc = al * al * sum * sum + 4.0 * prod * (1.0 - 2.0 * al);
    Ok(0.5 * (al * sum + disc.max(0.0).sqrt()))
}

/// α-index of the friendship graph of odd order `n`:
/// `½(αn + 1 + sqrt(α²n² - 10αn + 12α + 4n - 3))`.
pub fn rho_friendship(n: usize, alpha: AlphaParam) -> Result<f64> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Hypothesis(format!("friendship graph order must be odd and >= 3, got {n}")));
    }
    let a = alpha.value();
    let nf = n as f64;
    let disc = a * a * nf * nf - 10.0 * a * nf + 12.0 * a + 4.0 * nf - 3.0;
    Ok(0.5 * (a * nf + 1.0 + disc.max(0.0).sqrt()))
}

/// α-index of the wheel `W_n = K_1 ∨ C_{n-1}`.
pub fn rho_wheel(n: usize, alpha: AlphaParam) -> Result<f64> {
    if n < 4 {
        return Err(Error::Hypothesis(format!("wheel order must be >= 4, got {n}")));
    }
    rho_join_regular(0, 1, 2, n - 1, alpha)
}

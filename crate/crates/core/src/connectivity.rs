//! Vertex and edge connectivity via unit-capacity max-flow, and the
//! minimally k-(edge-)connected classes.
//!
//! Conventions: a disconnected graph has connectivity 0, and `κ(K_n) = n − 1`.

use serde::Serialize;

use crate::bits::{low_mask, ones};
use crate::error::{Error, Result};
use crate::flow::{edge_disjoint_paths, vertex_disjoint_paths};
use crate::graph::{Graph, VertexSet};

fn require_pair(g: &Graph) -> Result<()> {
    if g.order() < 2 {
        Err(Error::SingleVertex)
    } else {
        Ok(())
    }
}

/// `λ(G)`: the minimum over `t ≠ 0` of the number of edge-disjoint `0`-`t` paths.
pub fn edge_connectivity(g: &Graph) -> Result<usize> {
    require_pair(g)?;
    let adj = g.rows();
    let mut best = g.min_degree();
    for t in 1..g.order() {
        if best == 0 {
            break;
        }
        best = best.min(edge_disjoint_paths(adj, 0, t, best));
    }
    Ok(best)
}

/// Whether `λ(G) ≥ k`. Stops each flow after `k` paths.
pub fn is_k_edge_connected(g: &Graph, k: usize) -> bool {
    if g.order() < 2 {
        return k == 0;
    }
    if g.min_degree() < k {
        return false;
    }
    let adj = g.rows();
    (1..g.order()).all(|t| edge_disjoint_paths(adj, 0, t, k) >= k)
}

/// `κ(G)`.
///
/// Some minimum separator `S` misses one of the first `|S| + 1` vertices, say
/// `v_i`, and then `κ(v_i, t) = |S|` for some `t` not adjacent to `v_i`. So it
/// suffices to scan sources `v_0, v_1, ...` while the index does not exceed
/// the best separator found so far.
pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    require_pair(g)?;
    let n = g.order();
    if !g.is_connected() {
        return Ok(0);
    }
    let adj = g.rows();
    let mut best = n - 1;
    let mut s = 0;
    while s < n && s <= best {
        let others = low_mask(n) & !adj[s] & !(1 << s);
        for t in ones(others) {
            best = best.min(vertex_disjoint_paths(adj, s, t, best));
        }
        s += 1;
    }
    Ok(best)
}

/// Whether `κ(G) ≥ k`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if n < k + 1 || g.min_degree() < k || !g.is_connected() {
        return false;
    }
    // a separator of size < k misses one of v_0..v_{k-1}
    let adj = g.rows();
    (0..k).all(|s| {
        let others = low_mask(n) & !adj[s] & !(1 << s);
        ones(others).all(|t| vertex_disjoint_paths(adj, s, t, k) >= k)
    })
}

pub fn is_minimally_k_edge_connected(g: &Graph, k: usize) -> bool {
    is_k_edge_connected(g, k) && g.edges().all(|(u, v)| !is_k_edge_connected(&g.without_edge(u, v), k))
}

pub fn is_minimally_k_connected(g: &Graph, k: usize) -> bool {
    is_k_connected(g, k) && g.edges().all(|(u, v)| !is_k_connected(&g.without_edge(u, v), k))
}

/// Connectivity values and class verdicts of one graph for a target `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembership {
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub k: usize,
    pub is_k_connected: bool,
    pub is_k_edge_connected: bool,
    pub is_minimally_k_connected: bool,
    pub is_minimally_k_edge_connected: bool,
}

pub fn classify(g: &Graph, k: usize) -> Result<ClassMembership> {
    if k == 0 {
        return Err(Error::Hypothesis("target connectivity k must be >= 1".into()));
    }
    let kappa = vertex_connectivity(g)?;
    let lambda = edge_connectivity(g)?;
    Ok(ClassMembership {
        vertex_connectivity: kappa,
        edge_connectivity: lambda,
        k,
        is_k_connected: kappa >= k,
        is_k_edge_connected: lambda >= k,
        is_minimally_k_connected: is_minimally_k_connected(g, k),
        is_minimally_k_edge_connected: is_minimally_k_edge_connected(g, k),
    })
}

struct LowLink<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    bridges: Vec<(usize, usize)>,
    cuts: VertexSet,
}

impl LowLink<'_> {
    fn visit(&mut self, u: usize, parent: Option<usize>) {
        self.timer += 1;
        self.disc[u] = self.timer;
        self.low[u] = self.timer;
        let mut children = 0;
        for v in ones(self.g.rows()[u]) {
            if Some(v) == parent {
                continue;
            }
            if self.disc[v] != 0 {
                self.low[u] = self.low[u].min(self.disc[v]);
                continue;
            }
            children += 1;
            self.visit(v, Some(u));
            self.low[u] = self.low[u].min(self.low[v]);
            if self.low[v] > self.disc[u] {
                self.bridges.push((u.min(v), u.max(v)));
            }
            if parent.is_some() && self.low[v] >= self.disc[u] {
                self.cuts.insert(u);
            }
        }
        if parent.is_none() && children > 1 {
            self.cuts.insert(u);
        }
    }
}

fn lowlink(g: &Graph) -> (Vec<(usize, usize)>, VertexSet) {
    let n = g.order();
    let mut st =
        LowLink { g, disc: vec![0; n], low: vec![0; n], timer: 0, bridges: Vec::new(), cuts: VertexSet::empty() };
    for s in 0..n {
        if st.disc[s] == 0 {
            st.visit(s, None);
        }
    }
    let mut bridges = st.bridges;
    bridges.sort_unstable();
    (bridges, st.cuts)
}

/// Cut edges, sorted as `(u, v)` with `u < v`.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    lowlink(g).0
}

/// Cut vertices.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    lowlink(g).1
}

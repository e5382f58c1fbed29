//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` row per vertex. Every edit returns a new
//! value, so graphs can be shared freely between enumeration workers.

use std::fmt;
use std::io::BufRead;

use crate::bits::{compress, low_mask, ones};
use crate::error::{Error, Result};
use crate::flow;

pub const MAX_ORDER: usize = 64;

/// A set of vertices of a graph, as a bitset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// All vertices `0..n`.
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_ORDER);
        self.0 |= 1 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        ones(self.0)
    }

    fn check(self, n: usize) -> Result<()> {
        match (self.0 & !low_mask(n)).trailing_zeros() as usize {
            64 => Ok(()),
            v => Err(Error::VertexOutOfRange { vertex: v, n }),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Simple undirected graph with `1 <= n <= 64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n], m: 0 })
    }

    /// Builds a graph from an edge list; repeated edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Builds a graph from adjacency rows, validating symmetry and looplessness.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::VertexOutOfRange { vertex: (row & !mask).trailing_zeros() as usize, n });
            }
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            for v in ones(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(Error::Parse { line: 0, message: format!("adjacency rows not symmetric at {u}-{v}") });
                }
            }
        }
        Ok(Graph::from_rows_unchecked(rows))
    }

    pub(crate) fn from_rows_unchecked(adj: Vec<u64>) -> Graph {
        let twice: u32 = adj.iter().map(|r| r.count_ones()).sum();
        let g = Graph { n: adj.len(), m: twice as usize / 2, adj };
        debug_assert!(g.invariants_hold());
        g
    }

    fn invariants_hold(&self) -> bool {
        let mask = low_mask(self.n);
        (1..=MAX_ORDER).contains(&self.n)
            && self
                .adj
                .iter()
                .enumerate()
                .all(|(u, &row)| row & !mask == 0 && row >> u & 1 == 0 && ones(row).all(|v| self.adj[v] >> u & 1 == 1))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u])
    }

    pub fn closed_neighbors(&self, u: usize) -> VertexSet {
        VertexSet(self.adj[u] | 1 << u)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Sum of the degrees of the neighbors of `u`.
    pub fn neighbor_degree_sum(&self, u: usize) -> usize {
        ones(self.adj[u]).map(|v| self.degree(v)).sum()
    }

    /// Average neighbor degree `m(u)`; undefined for isolated vertices.
    pub fn neighbor_degree_average(&self, u: usize) -> Result<f64> {
        match self.degree(u) {
            0 => Err(Error::IsolatedVertex(u)),
            d => Ok(self.neighbor_degree_sum(u) as f64 / d as f64),
        }
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| ones(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj, m: self.m + 1 })
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeMissing(u, v));
        }
        Ok(self.without_edge(u, v))
    }

    pub(crate) fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { n: self.n, adj, m: self.m - 1 }
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Subgraph induced by `s`, relabeled in increasing original-index order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        s.check(self.n)?;
        let adj = s.iter().map(|v| compress(self.adj[v], s.bits())).collect();
        Ok(Graph::from_rows_unchecked(adj))
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows_unchecked(adj)
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        reach(&self.adj, 1 << start)
    }

    /// Connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = low_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_of(left.trailing_zeros() as usize);
            left &= !c.bits();
            out.push(c);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n
    }

    /// All simple cycles (length >= 3), each listed once, starting at its
    /// smallest vertex. Exponential; intended for small graphs.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(self.n);
        for s in 0..self.n {
            path.clear();
            path.push(s);
            self.extend_cycles(s, 1 << s, &mut path, &mut out);
        }
        out
    }

    fn extend_cycles(&self, s: usize, used: u64, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if path.len() >= 3 && self.adj[last] >> s & 1 == 1 && path[1] < last {
            out.push(path.clone());
        }
        // only vertices above s, so s is the smallest vertex on the cycle
        let next = self.adj[last] & !used & !low_mask(s + 1);
        for v in ones(next) {
            path.push(v);
            self.extend_cycles(s, used | 1 << v, path, out);
            path.pop();
        }
    }

    /// Whether some cycle has a chord.
    ///
    /// An edge `xy` is a chord of some cycle exactly when `x` and `y` lie on a
    /// common cycle of `g - xy`, i.e. `g - xy` has two internally
    /// vertex-disjoint `x`-`y` paths.
    pub fn has_chorded_cycle(&self) -> bool {
        self.edges().any(|(x, y)| {
            let h = self.without_edge(x, y);
            flow::vertex_disjoint_paths(h.rows(), x, y, 2) >= 2
        })
    }

    /// Moves the edges `vw` (`w` in `nset`) over to `uw`.
    ///
    /// Requires `nset` non-empty, `nset` within `N(v)` and disjoint from `N[u]`.
    pub fn switch_edges(&self, u: usize, v: usize, nset: VertexSet) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        nset.check(self.n)?;
        if nset.is_empty() {
            return Err(Error::SwitchPrecondition("moved neighbor set is empty"));
        }
        if !nset.is_subset(self.neighbors(v)) {
            return Err(Error::SwitchPrecondition("moved vertices must be neighbors of v"));
        }
        if !nset.intersection(self.closed_neighbors(u)).is_empty() {
            return Err(Error::SwitchPrecondition("moved vertices must lie outside N[u]"));
        }
        let mut adj = self.adj.clone();
        for w in nset.iter() {
            adj[v] &= !(1 << w);
            adj[w] &= !(1 << v);
            adj[u] |= 1 << w;
            adj[w] |= 1 << u;
        }
        Ok(Graph { n: self.n, adj, m: self.m })
    }

    /// Parses the edge-list text format: a header line `n m` followed by `m`
    /// lines `u v` with 0-based vertex indices.
    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut lines = reader.lines().enumerate().filter_map(|(i, l)| match l {
            Ok(l) if l.trim().is_empty() => None,
            other => Some((i + 1, other)),
        });
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header".into()))?;
        let header = header?;
        let nums = parse_pair(&header).ok_or_else(|| parse_err(hline, format!("expected `n m`, got {header:?}")))?;
        let (n, m) = nums;
        check_order(n).map_err(|e| parse_err(hline, e.to_string()))?;
        let mut edges = Vec::with_capacity(m);
        for (line, text) in lines.by_ref().take(m) {
            let text = text?;
            let e = parse_pair(&text).ok_or_else(|| parse_err(line, format!("expected `u v`, got {text:?}")))?;
            Graph::from_edge_list(n, &[e]).map_err(|err| parse_err(line, err.to_string()))?;
            edges.push(e);
        }
        if edges.len() < m {
            return Err(parse_err(hline, format!("header promises {m} edges, found {}", edges.len())));
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, format!("more than the {m} edges announced")));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
        _ => None,
    }
}

fn check_order(n: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, max: MAX_ORDER })
    }
}

/// Closure of `seed` under adjacency.
pub(crate) fn reach(adj: &[u64], seed: u64) -> VertexSet {
    let mut seen = seed;
    let mut frontier = seed;
    while frontier != 0 {
        let mut next = 0;
        for v in ones(frontier) {
            next |= adj[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    VertexSet(seen)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

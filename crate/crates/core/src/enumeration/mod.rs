//! Isomorph-free generation of graph classes, canonical forms and graph6 I/O.
//!
//! Built-in generation scans labeled edge subsets depth-first and keeps one
//! canonical representative per isomorphism class. Only labelings with
//! non-increasing degrees `d(0) ≥ d(1) ≥ ... ≥ d(n-1)` are visited: every
//! graph has one, and it lets the scan prune on degrees as rows are completed.

pub mod canon;
pub mod graph6;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::connectivity::{is_minimally_k_connected, is_minimally_k_edge_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use canon::{are_isomorphic, canonical_form, canonical_labeling, CanonicalForm, MAX_CANONICAL_ORDER};
pub use graph6::{parse_graph6, read_graph6, write_graph6, write_graph6_lines};

pub const MAX_GENERATION_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassFilter {
    MinKEdgeConnected(usize),
    MinKConnected(usize),
    AllConnected,
}

impl ClassFilter {
    pub fn accepts(&self, g: &Graph) -> bool {
        match *self {
            ClassFilter::MinKEdgeConnected(k) => is_minimally_k_edge_connected(g, k),
            ClassFilter::MinKConnected(k) => is_minimally_k_connected(g, k),
            ClassFilter::AllConnected => g.is_connected(),
        }
    }

    /// Minimum degree every member has.
    fn degree_floor(&self, n: usize) -> usize {
        match *self {
            ClassFilter::MinKEdgeConnected(k) | ClassFilter::MinKConnected(k) => k,
            ClassFilter::AllConnected => usize::from(n > 1),
        }
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassFilter::MinKEdgeConnected(k) => write!(f, "min-{k}-edge-connected"),
            ClassFilter::MinKConnected(k) => write!(f, "min-{k}-connected"),
            ClassFilter::AllConnected => f.write_str("all-connected"),
        }
    }
}

impl FromStr for ClassFilter {
    type Err = Error;

    /// `min-<k>-edge-connected`, `min-<k>-connected` or `all-connected`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Hypothesis(format!(
                "unknown class {s:?}; expected min-<k>-edge-connected, min-<k>-connected or all-connected"
            ))
        };
        if s == "all-connected" || s == "connected" {
            return Ok(ClassFilter::AllConnected);
        }
        let rest = s.strip_prefix("min-").ok_or_else(bad)?;
        let (k, kind) = rest.split_once('-').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(Error::Hypothesis("class parameter k must be >= 1".into()));
        }
        match kind {
            "edge-connected" => Ok(ClassFilter::MinKEdgeConnected(k)),
            "connected" => Ok(ClassFilter::MinKConnected(k)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for ClassFilter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanOptions {
    /// Skip edge sets with more than `2n − 2` edges when generating the
    /// minimally 2-edge-connected class (no member has more).
    pub edge_cap: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions { edge_cap: true }
    }
}

/// One isomorphism class member: its canonical form and canonically labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMember {
    pub form: CanonicalForm,
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub filter: ClassFilter,
    pub n: usize,
    /// Sorted by canonical form.
    pub members: Vec<ClassMember>,
    /// Labeled edge sets that survived pruning and were tested against the filter.
    pub labeled_candidates: u64,
    /// Human-readable justification for every pruning rule applied.
    pub pruning: Vec<String>,
}

impl Enumeration {
    pub fn graphs(&self) -> impl Iterator<Item = &Graph> {
        self.members.iter().map(|m| &m.graph)
    }
}

/// Every isomorphism class of order `n` passing `filter`, sorted by canonical form.
pub fn enumerate_class(n: usize, filter: ClassFilter) -> Result<Vec<Graph>> {
    Ok(enumerate_class_with(n, filter, ScanOptions::default())?.members.into_iter().map(|m| m.graph).collect())
}

pub fn enumerate_class_with(n: usize, filter: ClassFilter, opts: ScanOptions) -> Result<Enumeration> {
    if n == 0 {
        return Err(Error::OrderOutOfRange { n, max: MAX_GENERATION_ORDER });
    }
    if n > MAX_GENERATION_ORDER {
        return Err(Error::GenerationTooLarge { n, max: MAX_GENERATION_ORDER });
    }
    let floor = filter.degree_floor(n);
    let mut pruning = vec![
        "labelings restricted to non-increasing degree order (every graph admits one)".to_string(),
        format!("minimum degree >= {floor} (every member of {filter} has it)"),
    ];
    let max_edges = n * (n - 1) / 2;
    let cap = match filter {
        ClassFilter::MinKEdgeConnected(2) if opts.edge_cap => {
            pruning.push(format!(
                "edge count <= 2n-2 = {} (a minimally 2-edge-connected graph on n vertices has at most 2n-2 edges)",
                2 * n - 2
            ));
            max_edges.min(2 * n - 2)
        }
        _ => max_edges,
    };
    if n == 1 {
        let g = Graph::empty(1)?;
        let members =
            if filter.accepts(&g) { vec![ClassMember { form: canonical_form(&g)?, graph: g }] } else { Vec::new() };
        return Ok(Enumeration { filter, n, members, labeled_candidates: 1, pruning });
    }

    let scan = Scan::new(n, floor, cap);
    // Work is partitioned by the neighborhood of vertex 0 (vertices 1..n).
    let roots: Vec<u64> = (0u64..1 << (n - 1)).map(|r| r << 1).collect();
    let (found, candidates) = roots
        .into_par_iter()
        .map(|row0| {
            let mut worker = Worker { scan: &scan, filter, found: HashMap::new(), candidates: 0, error: None };
            worker.run(row0);
            match worker.error {
                Some(e) => Err(e),
                None => Ok((worker.found, worker.candidates)),
            }
        })
        .try_reduce(
            || (HashMap::new(), 0),
            |(mut a, ca), (b, cb)| {
                a.extend(b);
                Ok((a, ca + cb))
            },
        )?;
    let sorted: BTreeMap<CanonicalForm, Graph> = found.into_iter().collect();
    let members = sorted.into_iter().map(|(form, graph)| ClassMember { form, graph }).collect();
    Ok(Enumeration { filter, n, members, labeled_candidates: candidates, pruning })
}

/// Deduplicates externally supplied graphs and keeps those passing `filter`.
/// Returns the sorted members and the number of inputs rejected by the filter.
pub fn collect_class(
    graphs: impl IntoIterator<Item = Graph>,
    filter: ClassFilter,
) -> Result<(Vec<ClassMember>, usize)> {
    let mut found = BTreeMap::new();
    let mut rejected = 0;
    for g in graphs {
        if !filter.accepts(&g) {
            rejected += 1;
            continue;
        }
        let (form, perm) = canonical_labeling(&g)?;
        found.entry(form).or_insert_with(|| g.permute(&perm));
    }
    Ok((found.into_iter().map(|(form, graph)| ClassMember { form, graph }).collect(), rejected))
}

struct Scan {
    n: usize,
    floor: usize,
    cap: usize,
    /// Vertex pairs in row order `(0,1), (0,2), ..., (1,2), ...`.
    pairs: Vec<(usize, usize)>,
}

impl Scan {
    fn new(n: usize, floor: usize, cap: usize) -> Scan {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Scan { n, floor, cap, pairs }
    }
}

struct Worker<'a> {
    scan: &'a Scan,
    filter: ClassFilter,
    found: HashMap<CanonicalForm, Graph>,
    candidates: u64,
    error: Option<Error>,
}

#[derive(Clone, Copy)]
struct State {
    rows: [u64; MAX_GENERATION_ORDER],
    deg: [usize; MAX_GENERATION_ORDER],
    /// Undecided pairs touching each vertex.
    open: [usize; MAX_GENERATION_ORDER],
    m: usize,
}

impl Worker<'_> {
    fn run(&mut self, row0: u64) {
        let n = self.scan.n;
        let mut st = State {
            rows: [0; MAX_GENERATION_ORDER],
            deg: [0; MAX_GENERATION_ORDER],
            open: [n - 1; MAX_GENERATION_ORDER],
            m: 0,
        };
        st.open[0] = 0;
        for j in 1..n {
            st.open[j] -= 1;
            if row0 >> j & 1 == 1 {
                st.rows[0] |= 1 << j;
                st.rows[j] |= 1;
                st.deg[0] += 1;
                st.deg[j] += 1;
                st.m += 1;
            }
        }
        if st.m > self.scan.cap || !self.row_done(&st, 0) {
            return;
        }
        self.descend(st, n - 1);
    }

    /// Checks that become decidable once every pair of row `i` is fixed.
    fn row_done(&self, st: &State, i: usize) -> bool {
        let n = self.scan.n;
        let d = st.deg[i];
        if d < self.scan.floor || (i > 0 && d > st.deg[i - 1]) {
            return false;
        }
        if (i + 1..n).any(|j| st.deg[j] > d) {
            return false;
        }
        self.feasible(st)
    }

    fn feasible(&self, st: &State) -> bool {
        let mut deficit = 0;
        for v in 0..self.scan.n {
            if st.deg[v] + st.open[v] < self.scan.floor {
                return false;
            }
            deficit += self.scan.floor.saturating_sub(st.deg[v]);
        }
        deficit <= 2 * (self.scan.cap - st.m)
    }

    fn descend(&mut self, st: State, p: usize) {
        if self.error.is_some() {
            return;
        }
        let scan = self.scan;
        if p == scan.pairs.len() {
            self.leaf(&st);
            return;
        }
        let (i, j) = scan.pairs[p];
        let row_end = j == scan.n - 1;

        let mut without = st;
        without.open[i] -= 1;
        without.open[j] -= 1;
        let mut with = without;

        let ok = if row_end { self.row_done(&without, i) } else { self.feasible(&without) };
        if ok {
            self.descend(without, p + 1);
        }

        if st.m < scan.cap {
            with.rows[i] |= 1 << j;
            with.rows[j] |= 1 << i;
            with.deg[i] += 1;
            with.deg[j] += 1;
            with.m += 1;
            let ceiling = if i > 0 { with.deg[i - 1] } else { scan.n - 1 };
            let ok = with.deg[i] <= ceiling
                && with.deg[j] <= with.deg[i] + with.open[i]
                && if row_end { self.row_done(&with, i) } else { self.feasible(&with) };
            if ok {
                self.descend(with, p + 1);
            }
        }
    }

    fn leaf(&mut self, st: &State) {
        let n = self.scan.n;
        let last = n - 1;
        if st.deg[last] < self.scan.floor || st.deg[last] > st.deg[last - 1] {
            return;
        }
        self.candidates += 1;
        let g = Graph::from_rows_unchecked(st.rows[..n].to_vec());
        if !self.filter.accepts(&g) {
            return;
        }
        match canonical_labeling(&g) {
            Ok((form, perm)) => {
                self.found.entry(form).or_insert_with(|| g.permute(&perm));
            }
            Err(e) => self.error = Some(e),
        }
    }
}

//! Canonical labeling by colour refinement and individualization.
//!
//! The canonical form is the lexicographically smallest upper-triangle
//! bitstring over all leaves of the search tree. The tree is invariant under
//! relabeling, so isomorphic graphs reach the same minimum. Two vertices with
//! identical neighborhoods (apart from each other) are swapped by an
//! automorphism that fixes the current partition, so only one of them is
//! individualized at any node.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::graph6::write_graph6;

pub const MAX_CANONICAL_ORDER: usize = 12;

/// Upper-triangle adjacency bits in graph6 order, under the canonical
/// labeling. The first pair `(0, 1)` is the most significant bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The canonically labeled representative.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let total = n * (n - 1) / 2;
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g6 = write_graph6(&self.to_graph()).map_err(|_| fmt::Error)?;
        f.write_str(&g6)
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

type Colors = [u8; MAX_CANONICAL_ORDER];

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<(u128, Colors)>,
}

impl Search<'_> {
    /// Refines `colors` to the coarsest equitable partition below it.
    /// Cell indices stay ordered consistently with the input colouring.
    fn refine(&self, colors: &mut Colors) -> usize {
        let n = self.n;
        let mut cells = count_cells(colors, n);
        loop {
            let mut sigs: Vec<([u8; MAX_CANONICAL_ORDER + 1], usize)> = (0..n)
                .map(|v| {
                    let mut sig = [0u8; MAX_CANONICAL_ORDER + 1];
                    sig[0] = colors[v];
                    for u in ones(self.adj[v]) {
                        sig[1 + colors[u] as usize] += 1;
                    }
                    (sig, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut c = 0u8;
            for w in 0..n {
                if w > 0 && sigs[w].0 != sigs[w - 1].0 {
                    c += 1;
                }
                colors[sigs[w].1] = c;
            }
            let next = c as usize + 1;
            if next == cells {
                return cells;
            }
            cells = next;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !(1 << v) == self.adj[v] & !(1 << u)
    }

    fn leaf_bits(&self, colors: &Colors) -> u128 {
        let mut at = [0usize; MAX_CANONICAL_ORDER];
        for v in 0..self.n {
            at[colors[v] as usize] = v;
        }
        let mut bits = 0u128;
        for j in 1..self.n {
            let row = self.adj[at[j]];
            for &vi in &at[..j] {
                bits = bits << 1 | (row >> vi & 1) as u128;
            }
        }
        bits
    }

    fn descend(&mut self, mut colors: Colors) {
        let cells = self.refine(&mut colors);
        if cells == self.n {
            let bits = self.leaf_bits(&colors);
            if self.best.as_ref().is_none_or(|(b, _)| bits < *b) {
                self.best = Some((bits, colors));
            }
            return;
        }
        // first non-singleton cell
        let mut size = [0u8; MAX_CANONICAL_ORDER];
        for &c in &colors[..self.n] {
            size[c as usize] += 1;
        }
        let target = (0..cells).find(|&c| size[c] > 1).expect("partition not discrete") as u8;
        let mut tried: Vec<usize> = Vec::new();
        for v in (0..self.n).filter(|&v| colors[v] == target) {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = colors;
            for (x, c) in child[..self.n].iter_mut().enumerate() {
                if *c > target || (*c == target && x != v) {
                    *c += 1;
                }
            }
            self.descend(child);
        }
    }
}

fn count_cells(colors: &Colors, n: usize) -> usize {
    let mut seen = 0u32;
    for &c in &colors[..n] {
        seen |= 1 << c;
    }
    seen.count_ones() as usize
}

/// Canonical form plus the labeling that realizes it: `perm[v]` is the
/// canonical position of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::CanonicalTooLarge { n, max: MAX_CANONICAL_ORDER });
    }
    let mut search = Search { adj: g.rows(), n, best: None };
    search.descend([0; MAX_CANONICAL_ORDER]);
    let (bits, colors) = search.best.expect("search visits at least one leaf");
    let perm = colors[..n].iter().map(|&c| c as usize).collect();
    Ok((CanonicalForm { n: n as u8, bits }, perm))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(f, _)| f)
}

/// Isomorphism test via canonical forms; graphs of different order are not
/// isomorphic.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

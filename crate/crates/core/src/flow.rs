//! Unit-capacity max-flow kernels on bitset adjacency.
//!
//! Both kernels count disjoint paths with BFS augmentation and stop as soon as
//! `limit` paths are found, so threshold queries ("at least k?") cost at most k
//! augmentations.

use crate::bits::ones;

/// Number of edge-disjoint `s`-`t` paths in the undirected graph `adj`, capped at `limit`.
pub(crate) fn edge_disjoint_paths(adj: &[u64], s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && s < adj.len() && t < adj.len());
    let n = adj.len();
    // flow[x] bit y set <=> one unit travels x -> y along edge xy.
    let mut flow = [0u64; 64];
    let mut parent = [0usize; 64];
    let target = 1u64 << t;
    let mut found = 0;
    while found < limit {
        let mut visited = 1u64 << s;
        let mut frontier = visited;
        while frontier != 0 && visited & target == 0 {
            let mut next = 0u64;
            for x in ones(frontier) {
                let reach = adj[x] & !flow[x] & !visited;
                for y in ones(reach) {
                    parent[y] = x;
                }
                visited |= reach;
                next |= reach;
            }
            frontier = next;
        }
        if visited & target == 0 {
            break;
        }
        let mut y = t;
        while y != s {
            let x = parent[y];
            if flow[y] >> x & 1 == 1 {
                flow[y] &= !(1 << x);
            } else {
                flow[x] |= 1 << y;
            }
            y = x;
        }
        found += 1;
    }
    debug_assert!(n <= 64);
    found
}

/// Number of internally vertex-disjoint `s`-`t` paths, capped at `limit`.
///
/// `s` and `t` must be distinct and non-adjacent. Every vertex `v` is split into
/// `2v` (in) and `2v + 1` (out) joined by a unit arc; an edge `uv` becomes the
/// arcs `u_out -> v_in` and `v_out -> u_in`. The split network has no
/// antiparallel arcs, so residual arcs out of `x` are the unsaturated forward
/// arcs plus the reversals of arcs carrying flow into `x`.
pub(crate) fn vertex_disjoint_paths(adj: &[u64], s: usize, t: usize, limit: usize) -> usize {
    debug_assert!(s != t && adj[s] >> t & 1 == 0);
    let n = adj.len();
    let mut cap = [0u128; 128];
    for v in 0..n {
        cap[2 * v] = 1u128 << (2 * v + 1);
        let mut out = 0u128;
        for u in ones(adj[v]) {
            out |= 1u128 << (2 * u);
        }
        cap[2 * v + 1] = out;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow_out = [0u128; 128];
    let mut flow_in = [0u128; 128];
    let mut parent = [0usize; 128];
    let target = 1u128 << sink;
    let mut found = 0;
    while found < limit {
        let mut visited = 1u128 << source;
        let mut frontier = visited;
        while frontier != 0 && visited & target == 0 {
            let mut next = 0u128;
            let mut rest = frontier;
            while rest != 0 {
                let x = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut reach = ((cap[x] & !flow_out[x]) | flow_in[x]) & !visited;
                visited |= reach;
                next |= reach;
                while reach != 0 {
                    let y = reach.trailing_zeros() as usize;
                    reach &= reach - 1;
                    parent[y] = x;
                }
            }
            frontier = next;
        }
        if visited & target == 0 {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            if flow_in[x] >> y & 1 == 1 {
                // cancel flow y -> x
                flow_in[x] &= !(1u128 << y);
                flow_out[y] &= !(1u128 << x);
            } else {
                flow_out[x] |= 1u128 << y;
                flow_in[y] |= 1u128 << x;
            }
            y = x;
        }
        found += 1;
    }
    found
}

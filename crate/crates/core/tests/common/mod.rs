//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's flow, canonical-form or power-iteration code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use alphax::{AlphaParam, Graph};
use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// The labeled graph whose edge set is the bitmask `mask` over `pairs(n)`.
pub fn from_mask(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let total = n * n.saturating_sub(1) / 2;
    (0u64..1 << total).map(move |mask| from_mask(n, mask))
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut impl Rng, n_min: usize, n_max: usize) -> Graph {
    loop {
        let n = rng.gen_range(n_min..=n_max);
        let p = rng.gen_range(0.25..0.9);
        let g = random_graph(rng, n, p);
        if connected(&g, !0) {
            return g;
        }
    }
}

/// Whether the vertices in `keep` induce a connected graph (plain DFS).
pub fn connected(g: &Graph, keep: u64) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|&v| keep >> v & 1 == 1).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if keep >> v & 1 == 1 && !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == alive.len()
}

/// Vertex connectivity by trying every vertex subset; `n - 1` when no
/// subset of size at most `n - 2` disconnects the graph.
pub fn brute_kappa(g: &Graph) -> usize {
    let n = g.order();
    let full = (1u64 << n) - 1;
    (0u64..1 << n)
        .filter(|s| (s.count_ones() as usize) + 2 <= n && !connected(g, full & !s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n - 1)
}

/// Edge connectivity as the smallest cut `δ(S)` over proper nonempty `S`.
pub fn brute_lambda(g: &Graph) -> usize {
    let n = g.order();
    (1u64..(1 << n) - 1).map(|s| g.edges().filter(|&(u, v)| (s >> u & 1) != (s >> v & 1)).count()).min().unwrap()
}

pub fn brute_min_k_connected(g: &Graph, k: usize) -> bool {
    brute_kappa(g) >= k && g.edges().all(|(u, v)| brute_kappa(&g.delete_edge(u, v).unwrap()) < k)
}

pub fn brute_min_k_edge_connected(g: &Graph, k: usize) -> bool {
    g.order() >= 2 && brute_lambda(g) >= k && g.edges().all(|(u, v)| brute_lambda(&g.delete_edge(u, v).unwrap()) < k)
}

/// Upper-triangle bitstring (graph6 order) of `g` relabeled by `perm`.
fn labeled_bits(g: &Graph, perm: &[usize]) -> u128 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u128;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | u128::from(g.has_edge(inv[i], inv[j]));
        }
    }
    bits
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Minimum bitstring over every relabeling.
pub fn perm_min_form(g: &Graph) -> u128 {
    permutations(g.order()).iter().map(|p| labeled_bits(g, p)).min().unwrap()
}

/// Isomorphism classes of order `n` passing `keep`, by brute force over all
/// labeled graphs.
pub fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeSet<u128> {
    let perms = permutations(n);
    all_labeled(n).filter(|g| keep(g)).map(|g| perms.iter().map(|p| labeled_bits(&g, p)).min().unwrap()).collect()
}

/// One representative graph per class in `brute_classes`.
pub fn graph_from_bits(n: usize, bits: u128) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits >> (total - 1 - k) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

pub fn dense_alpha(g: &Graph, alpha: f64) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            alpha * g.degree(i) as f64
        } else if g.has_edge(i, j) {
            1.0 - alpha
        } else {
            0.0
        }
    })
}

/// Largest eigenvalue from a dense symmetric eigensolve.
pub fn eig_radius(g: &Graph, alpha: f64) -> f64 {
    dense_alpha(g, alpha).symmetric_eigen().eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

pub fn alpha(a: f64) -> AlphaParam {
    AlphaParam::new(a).unwrap()
}

/// Every simple cycle as a vertex sequence, by extending paths from their
/// smallest vertex and keeping one of the two orientations.
pub fn brute_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn extend(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        for v in 0..g.order() {
            if !g.has_edge(last, v) {
                continue;
            }
            if v == start && path.len() >= 3 && path[1] < last {
                out.push(path.clone());
            }
            if v > start && !path.contains(&v) {
                path.push(v);
                extend(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        extend(g, &mut vec![s], &mut out);
    }
    out
}

pub fn brute_has_chorded_cycle(g: &Graph) -> bool {
    brute_cycles(g).iter().any(|c| {
        let k = c.len();
        (0..k).any(|i| (i + 2..k).any(|j| !(i == 0 && j == k - 1) && g.has_edge(c[i], c[j])))
    })
}

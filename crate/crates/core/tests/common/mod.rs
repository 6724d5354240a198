//! Independent oracles shared by the integration tests. Nothing here calls
//! into the counting or canonical-form code under test.

#![allow(dead_code)]

use cis_core::{Graph, VertexSet};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Adjacency matrix copied out of the graph.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Depth-first connectivity of the subgraph induced by `members`.
pub fn induces_connected(m: &[Vec<bool>], members: &[usize]) -> bool {
    if members.is_empty() {
        return false;
    }
    let mut seen = vec![false; members.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..members.len() {
            if !seen[j] && m[members[i]][members[j]] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every nonempty subset (as a bitmask) that induces a connected subgraph.
pub fn naive_cis(g: &Graph) -> Vec<u64> {
    let n = g.order();
    assert!(n <= 16, "naive oracle is exponential");
    let m = matrix(g);
    (1u64..1 << n)
        .filter(|&mask| {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            induces_connected(&m, &members)
        })
        .collect()
}

/// Per-order counts from the naive oracle, index `k - 1`.
pub fn naive_profile(g: &Graph) -> Vec<u64> {
    let mut counts = vec![0u64; g.order()];
    for mask in naive_cis(g) {
        counts[mask.count_ones() as usize - 1] += 1;
    }
    counts
}

/// Cut vertices by definition: deleting them disconnects their component.
pub fn naive_cut_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let m = matrix(g);
    let components = |skip: Option<usize>| {
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if Some(s) == skip || seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for w in 0..n {
                    if Some(w) != skip && !seen[w] && m[u][w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    };
    let base = components(None);
    (0..n)
        .filter(|&v| {
            let isolated = (0..n).all(|w| !m[v][w]);
            let after = components(Some(v));
            // an isolated vertex removes its own component
            if isolated {
                after + 1 > base
            } else {
                after > base
            }
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            if k.is_multiple_of(2) {
                perm.swap(i, k - 1);
            } else {
                perm.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut perm, &mut out);
    out
}

/// Upper-triangle bit string of `g` relabeled by `perm` (vertex `v` becomes
/// `perm[v]`), in graph6 column order.
fn bits_under(m: &[Vec<bool>], perm: &[usize]) -> Vec<bool> {
    let n = perm.len();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(m[inv[i]][inv[j]]);
        }
    }
    bits
}

/// Minimum graph6 bit string over every permutation. Exact but factorial.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let m = matrix(g);
    permutations(g.order())
        .iter()
        .map(|p| bits_under(&m, p))
        .min()
        .expect("at least one permutation")
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && brute_canonical(g) == brute_canonical(h)
}

/// All labeled graphs on `n` vertices, by edge bitmask over the upper
/// triangle.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        p.swap(i, j);
    }
    p
}

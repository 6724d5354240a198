//! Exact canonical labeling for small graphs.
//!
//! Search tree over ordered partitions: refine to an equitable partition,
//! then branch on each vertex of the first non-singleton cell. Every leaf is
//! a labeling; the canonical labeling is the leaf whose relabeled graph has
//! the smallest graph6 bit string. Refinement and cell choice depend only on
//! the partition structure, so the set of leaf graphs is a relabeling
//! invariant and so is its minimum.
//!
//! Two prunings keep symmetric graphs cheap. Twins (vertices with the same
//! neighborhood apart from each other) are swapped by an automorphism, so
//! only one of them is branched on. Leaves that reproduce the best graph
//! reveal automorphisms; a candidate is skipped when an automorphism that
//! fixes the current prefix maps it to a vertex already explored.

use alloc::vec::Vec;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by the canonical labeling (leaf codes are
/// `u128`, which fits `C(16, 2)` bits).
pub(crate) const CODE_MAX_ORDER: usize = 16;

/// Returns `position`, with `position[v]` the canonical label of vertex `v`.
pub(crate) fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    assert!(
        n <= CODE_MAX_ORDER,
        "canonical labeling supports n <= {CODE_MAX_ORDER}"
    );
    let mut search = Search {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let mut prefix = Vec::with_capacity(n);
    search.explore(alloc::vec![g.vertices()], &mut prefix);
    let (_, order) = search.best.expect("the search reaches at least one leaf");
    let mut position = alloc::vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    position
}

struct Search<'a> {
    g: &'a Graph,
    /// Best leaf code and the vertex order that produced it.
    best: Option<(u128, Vec<usize>)>,
    /// Automorphisms as image arrays.
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Vec<VertexSet>, prefix: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, prefix) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(VertexSet::singleton(v));
            next.push(cell.without(v));
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.explore(next, prefix);
            prefix.pop();
            tried.push(v);
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        self.g.neighbors(u).without(v) == self.g.neighbors(v).without(u)
    }

    /// Whether `v` shares an orbit with a tried vertex under the group
    /// generated by known automorphisms fixing `prefix` pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for aut in &self.automorphisms {
            if prefix.iter().any(|&p| aut[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in aut.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &[VertexSet]) {
        let order: Vec<usize> = cells
            .iter()
            .map(|c| c.lowest().expect("nonempty cell"))
            .collect();
        let code = leaf_code(self.g, &order);
        match &self.best {
            Some((best, _)) if code > *best => {}
            Some((best, best_order)) if code == *best => {
                // Both orders produce the same graph: v -> best_order[pos(v)].
                let mut aut = alloc::vec![0; order.len()];
                for (pos, &v) in order.iter().enumerate() {
                    aut[v] = best_order[pos];
                }
                if aut.iter().enumerate().any(|(x, &y)| x != y) {
                    self.automorphisms.push(aut);
                }
            }
            _ => self.best = Some((code, order)),
        }
    }
}

/// graph6 bit string of the graph relabeled so that `order[i]` becomes
/// vertex `i`, read as a big-endian integer.
fn leaf_code(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        let col = g.neighbors(order[j]);
        for &u in &order[..j] {
            code = code << 1 | col.contains(u) as u128;
        }
    }
    code
}

/// Refines `cells` to the coarsest equitable partition finer than it. A cell
/// is split by the number of neighbors each member has in some splitter
/// cell; the parts replace it in increasing order of that number.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    let mut changed = true;
    while changed {
        changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut i = 0;
            while i < cells.len() {
                let cell = cells[i];
                if cell.len() == 1 {
                    i += 1;
                    continue;
                }
                let mut buckets: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell {
                    let d = g.neighbors(v).intersection(splitter).len();
                    match buckets.iter_mut().find(|(k, _)| *k == d) {
                        Some((_, set)) => set.insert(v),
                        None => buckets.push((d, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() == 1 {
                    i += 1;
                    continue;
                }
                buckets.sort_unstable_by_key(|&(d, _)| d);
                let parts = buckets.len();
                cells.splice(i..=i, buckets.into_iter().map(|(_, set)| set));
                i += parts;
                changed = true;
            }
            s += 1;
        }
    }
}

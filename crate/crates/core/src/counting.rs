//! Enumeration and counting of connected induced subgraphs.
//!
//! Every connected set is reached by growing a seed vertex (the pivot)
//! through its frontier. At each step the lowest frontier vertex `w` is
//! either added to the set or moved to the exclusion set, after which `w`
//! is never offered again on that branch. A branch ends when the frontier is
//! empty, so each connected set corresponds to exactly one leaf of the
//! recursion. Without an anchor the pivot is the lowest vertex of the set
//! and every lower vertex starts out excluded.
//!
//! Output order: pivots ascending, then depth-first with the "add" branch
//! before the "exclude" branch.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};
use crate::vertex_set::VertexSet;

/// Per-order and total counts of connected induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CountProfile {
    per_order: Vec<BigUint>,
    total: BigUint,
}

impl CountProfile {
    fn from_counts(counts: &[u128]) -> Self {
        let per_order: Vec<BigUint> = counts.iter().map(|&c| BigUint::from(c)).collect();
        let total = per_order.iter().sum();
        CountProfile { per_order, total }
    }

    pub fn order(&self) -> usize {
        self.per_order.len()
    }

    /// `N_1, .., N_n`; index `k - 1` holds the count of `k`-vertex sets.
    pub fn per_order(&self) -> &[BigUint] {
        &self.per_order
    }

    /// `N_k` for `1 <= k <= n`.
    pub fn of_order(&self, k: usize) -> &BigUint {
        &self.per_order[k - 1]
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    Any,
    Containing(usize),
    ContainingPair(usize, usize),
}

/// Which connected sets to report: an anchor plus an optional exact size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AnchorQuery {
    pub anchor: Anchor,
    pub order: Option<usize>,
}

impl AnchorQuery {
    pub const ALL: AnchorQuery = AnchorQuery {
        anchor: Anchor::Any,
        order: None,
    };

    pub fn any() -> Self {
        Self::ALL
    }

    pub fn containing(v: usize) -> Self {
        AnchorQuery {
            anchor: Anchor::Containing(v),
            order: None,
        }
    }

    pub fn containing_pair(u: usize, v: usize) -> Self {
        AnchorQuery {
            anchor: Anchor::ContainingPair(u, v),
            order: None,
        }
    }

    pub fn with_order(mut self, k: usize) -> Self {
        self.order = Some(k);
        self
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.anchor {
            Anchor::Any => {}
            Anchor::Containing(v) => g.check_vertex(v)?,
            Anchor::ContainingPair(u, v) => {
                g.check_vertex(u)?;
                g.check_vertex(v)?;
                if u == v {
                    return Err(Error::RepeatedAnchor(u));
                }
            }
        }
        if let Some(k) = self.order {
            if k == 0 || k > g.order() {
                return Err(Error::ParameterOutOfRange(alloc::format!(
                    "subgraph order k={k} outside 1..={}",
                    g.order()
                )));
            }
        }
        Ok(())
    }

    /// The initial `(set, excluded)` frames, in reverse processing order,
    /// and the vertex that must end up in every reported set.
    fn seeds(&self, g: &Graph) -> (Vec<Frame>, Option<usize>) {
        match self.anchor {
            Anchor::Any => {
                let frames = (0..g.order())
                    .rev()
                    .map(|v| Frame {
                        set: VertexSet::singleton(v),
                        excluded: VertexSet::prefix(v),
                    })
                    .collect();
                (frames, None)
            }
            Anchor::Containing(v) => (alloc::vec![Frame::seed(v)], None),
            Anchor::ContainingPair(u, v) => (alloc::vec![Frame::seed(u)], Some(v)),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    set: VertexSet,
    excluded: VertexSet,
}

impl Frame {
    fn seed(v: usize) -> Self {
        Frame {
            set: VertexSet::singleton(v),
            excluded: VertexSet::EMPTY,
        }
    }
}

/// Outcome of inspecting one node of the recursion.
enum Step {
    Emit(VertexSet),
    Dead,
    Branch(usize),
}

struct Kernel<'a> {
    adjacency: &'a [VertexSet],
    all: VertexSet,
    target: Option<usize>,
    order: Option<usize>,
}

impl<'a> Kernel<'a> {
    fn new(g: &'a Graph, q: &AnchorQuery, target: Option<usize>) -> Self {
        Kernel {
            adjacency: g.adjacency(),
            all: g.vertices(),
            target,
            order: q.order,
        }
    }

    #[inline]
    fn step(&self, f: Frame) -> Step {
        if let Some(t) = self.target {
            if f.excluded.contains(t) {
                return Step::Dead;
            }
        }
        let size = f.set.len();
        if let Some(k) = self.order {
            if size == k {
                return match self.target {
                    Some(t) if !f.set.contains(t) => Step::Dead,
                    _ => Step::Emit(f.set),
                };
            }
            if size + self.all.difference(f.excluded | f.set).len() < k {
                return Step::Dead;
            }
        }
        let mut frontier = VertexSet::EMPTY;
        for v in f.set {
            frontier |= self.adjacency[v];
        }
        let frontier = frontier.difference(f.set | f.excluded);
        match frontier.lowest() {
            Some(w) => Step::Branch(w),
            None if self.order.is_some() => Step::Dead,
            None => match self.target {
                Some(t) if !f.set.contains(t) => Step::Dead,
                _ => Step::Emit(f.set),
            },
        }
    }

    /// Adds the size of every reported set below `f` into `counts`.
    fn count(&self, f: Frame, counts: &mut [u128]) {
        match self.step(f) {
            Step::Emit(s) => counts[s.len() - 1] += 1,
            Step::Dead => {}
            Step::Branch(w) => {
                self.count(
                    Frame {
                        set: f.set.with(w),
                        excluded: f.excluded,
                    },
                    counts,
                );
                self.count(
                    Frame {
                        set: f.set,
                        excluded: f.excluded.with(w),
                    },
                    counts,
                );
            }
        }
    }
}

/// Streams the connected induced subgraphs selected by `q`, each exactly
/// once, in the order documented at module level.
pub fn enumerate_cis<'a>(g: &'a Graph, q: &AnchorQuery) -> Result<CisIter<'a>> {
    q.validate(g)?;
    let (stack, target) = q.seeds(g);
    Ok(CisIter {
        kernel: Kernel::new(g, q, target),
        stack,
    })
}

pub struct CisIter<'a> {
    kernel: Kernel<'a>,
    stack: Vec<Frame>,
}

impl Iterator for CisIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some(f) = self.stack.pop() {
            match self.kernel.step(f) {
                Step::Emit(s) => return Some(s),
                Step::Dead => {}
                Step::Branch(w) => {
                    self.stack.push(Frame {
                        set: f.set,
                        excluded: f.excluded.with(w),
                    });
                    self.stack.push(Frame {
                        set: f.set.with(w),
                        excluded: f.excluded,
                    });
                }
            }
        }
        None
    }
}

/// Per-size counts of the sets selected by `q`. Entries for sizes the query
/// excludes are zero. Counts are accumulated in `u128`, which holds every
/// value possible at [`MAX_ORDER`] vertices (at most `2^64 - 1`).
pub fn count_query(g: &Graph, q: &AnchorQuery) -> Result<CountProfile> {
    q.validate(g)?;
    let (seeds, target) = q.seeds(g);
    let kernel = Kernel::new(g, q, target);
    let mut counts = [0u128; MAX_ORDER];
    for f in seeds.into_iter().rev() {
        kernel.count(f, &mut counts);
    }
    Ok(CountProfile::from_counts(&counts[..g.order()]))
}

/// `N_1(G), .., N_n(G)` and `N(G)`. Disconnected graphs are allowed; every
/// nonempty vertex set inducing a connected subgraph counts.
pub fn count_profile(g: &Graph) -> CountProfile {
    count_query(g, &AnchorQuery::ALL).expect("the unanchored query is always valid")
}

/// `N(G)_v`.
pub fn count_containing(g: &Graph, v: usize) -> Result<BigUint> {
    Ok(count_query(g, &AnchorQuery::containing(v))?.total)
}

/// `N(G)_{u,v}`; zero when `u` and `v` lie in different components.
pub fn count_containing_pair(g: &Graph, u: usize, v: usize) -> Result<BigUint> {
    Ok(count_query(g, &AnchorQuery::containing_pair(u, v))?.total)
}

/// Number of subtrees of the tree `t` that contain `root`, by the product
/// recurrence `f(v) = prod over children c of (1 + f(c))`. Linear time.
pub fn rooted_subtree_count(t: &Graph, root: usize) -> Result<BigUint> {
    t.check_vertex(root)?;
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    // Preorder by explicit stack; parents precede children.
    let mut parent = alloc::vec![usize::MAX; n];
    let mut preorder = Vec::with_capacity(n);
    let mut stack = alloc::vec![root];
    parent[root] = root;
    while let Some(v) = stack.pop() {
        preorder.push(v);
        for c in t.neighbors(v) {
            if parent[c] == usize::MAX {
                parent[c] = v;
                stack.push(c);
            }
        }
    }
    let mut f: Vec<BigUint> = alloc::vec![BigUint::one(); n];
    for &v in preorder.iter().rev() {
        if v != root {
            let contribution = &f[v] + 1u32;
            f[parent[v]] *= contribution;
        }
    }
    Ok(core::mem::take(&mut f[root]))
}

/// Cut vertices, by the depth-first low-point method. Works on any graph;
/// a vertex is a cut vertex when removing it increases the number of
/// components.
pub fn articulation_points(g: &Graph) -> VertexSet {
    let n = g.order();
    let mut disc = alloc::vec![usize::MAX; n];
    let mut low = alloc::vec![0usize; n];
    let mut cut = VertexSet::EMPTY;
    let mut time = 0;
    // (vertex, parent, neighbors still to visit)
    let mut stack: Vec<(usize, usize, VertexSet)> = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, g.neighbors(root)));
        while let Some(top) = stack.last_mut() {
            let (v, p) = (top.0, top.1);
            match top.2.lowest() {
                Some(w) => {
                    top.2.remove(w);
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, g.neighbors(w)));
                    } else if w != p {
                        low[v] = low[v].min(disc[w]);
                    }
                }
                None => {
                    stack.pop();
                    if p != usize::MAX {
                        low[p] = low[p].min(low[v]);
                        if p != root && low[v] >= disc[p] {
                            cut.insert(p);
                        }
                    }
                }
            }
        }
        if root_children > 1 {
            cut.insert(root);
        }
    }
    cut
}

/// Number of vertices whose deletion leaves `g` connected, checked one
/// vertex at a time. Requires a connected graph of order at least 2.
pub fn non_cut_vertex_count(g: &Graph) -> Result<usize> {
    if g.order() < 2 {
        return Err(Error::ParameterOutOfRange(alloc::format!(
            "non-cut vertex count needs order >= 2 (got {})",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertices();
    Ok((0..g.order())
        .filter(|&v| g.is_connected_set(all.without(v)))
        .count())
}

/// `N(G)` by repeated vertex deletion, `N(G) = N(G)_v + N(G - v)`, always
/// deleting the lowest vertex of the first component (vertex 0).
pub fn count_by_deletion(g: &Graph) -> BigUint {
    let mut total = BigUint::zero();
    let mut h = g.clone();
    loop {
        let v = h.connected_components()[0]
            .lowest()
            .expect("components are nonempty");
        total += count_containing(&h, v).expect("vertex is in range");
        if h.order() == 1 {
            return total;
        }
        h = h.delete_vertex(v).expect("order is at least 2");
    }
}

//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest supported order; one [`VertexSet`] word per neighborhood.
pub const MAX_ORDER: usize = 64;

/// A finite simple graph with vertices `0..order`.
///
/// Immutable once built. Equality is labeled equality; use
/// [`crate::atlas::is_isomorphic`] for isomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph of the given order.
    pub fn edgeless(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(Graph {
            adjacency: alloc::vec![VertexSet::EMPTY; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new(order)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Builds a graph from explicit neighborhoods, checking symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adjacency: Vec<VertexSet>) -> Result<Self> {
        let order = adjacency.len();
        check_order(order)?;
        let all = VertexSet::prefix(order);
        for (v, &nbrs) in adjacency.iter().enumerate() {
            if let Some(bad) = nbrs.difference(all).lowest() {
                return Err(Error::VertexOutOfRange { vertex: bad, order });
            }
            if nbrs.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            for u in nbrs {
                if !adjacency[u].contains(v) {
                    return Err(Error::ParameterOutOfRange(alloc::format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(Graph { adjacency })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adjacency
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adjacency[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, &nbrs)| nbrs.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    /// `start` must be a member of `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adjacency[v];
            }
            frontier = next.intersection(within).difference(seen);
            seen |= frontier;
        }
        seen
    }

    /// Whether `s` induces a connected subgraph. The empty set is not
    /// connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.lowest() {
            None => false,
            Some(v) => self.reach_within(v, s) == s,
        }
    }

    /// Components ordered by their lowest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.lowest() {
            let comp = self.reach_within(v, rest);
            rest -= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.order() && self.is_connected()
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.edge_count() == self.order() && self.is_connected()
    }

    /// The subgraph induced by `s`, relabeled so that retained vertices keep
    /// their relative order.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        if let Some(bad) = s.difference(self.vertices()).lowest() {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.order(),
            });
        }
        let keep: Vec<usize> = s.iter().collect();
        let adjacency = keep
            .iter()
            .map(|&v| compress(self.adjacency[v], s))
            .collect();
        Ok(Graph { adjacency })
    }

    /// `G - v`. Fails on a one-vertex graph, whose deletion would be empty.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        self.induced_subgraph(self.vertices().without(v))
    }

    /// Relabels vertex `v` as `position[v]`. `position` must be a permutation
    /// of `0..order`.
    pub fn permute(&self, position: &[usize]) -> Graph {
        debug_assert_eq!(position.len(), self.order());
        let mut adjacency = alloc::vec![VertexSet::EMPTY; self.order()];
        for (v, &nbrs) in self.adjacency.iter().enumerate() {
            adjacency[position[v]] = nbrs.iter().map(|u| position[u]).collect();
        }
        Graph { adjacency }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(v, &nbrs)| all.difference(nbrs).without(v))
            .collect();
        Graph { adjacency }
    }

    /// Adds a new vertex `order` adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        let order = self.order() + 1;
        check_order(order)?;
        if let Some(bad) = nbrs.difference(self.vertices()).lowest() {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.order(),
            });
        }
        let new = order - 1;
        let mut adjacency = self.adjacency.clone();
        for u in nbrs {
            adjacency[u].insert(new);
        }
        adjacency.push(nbrs);
        Ok(Graph { adjacency })
    }
}

/// Block-diagonal union; the vertices of `graphs[i]` follow those of
/// `graphs[i - 1]`.
pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
    if graphs.is_empty() {
        return Err(Error::EmptyUnion);
    }
    let total: usize = graphs.iter().map(Graph::order).sum();
    check_order(total)?;
    let mut adjacency = Vec::with_capacity(total);
    let mut offset = 0;
    for g in graphs {
        for &nbrs in &g.adjacency {
            adjacency.push(VertexSet::from_bits(nbrs.bits() << offset));
        }
        offset += g.order();
    }
    Ok(Graph { adjacency })
}

fn check_order(order: usize) -> Result<()> {
    if (1..=MAX_ORDER).contains(&order) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            order,
            max: MAX_ORDER,
        })
    }
}

/// Maps the members of `set` that lie in `keep` to their rank within `keep`.
fn compress(set: VertexSet, keep: VertexSet) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for (rank, v) in keep.iter().enumerate() {
        if set.contains(v) {
            out.insert(rank);
        }
    }
    out
}

/// Incremental construction; rejects loops and out-of-range ids. Repeated
/// edges are idempotent.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adjacency: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Result<Self> {
        check_order(order)?;
        Ok(GraphBuilder {
            adjacency: alloc::vec![VertexSet::EMPTY; order],
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let order = self.adjacency.len();
        for w in [u, v] {
            if w >= order {
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.adjacency[u].remove(v);
        self.adjacency[v].remove(u);
        self
    }

    pub fn build(self) -> Graph {
        Graph {
            adjacency: self.adjacency,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
            first = false;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Graph::edgeless(0),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert!(matches!(
            Graph::edgeless(65),
            Err(Error::OrderOutOfRange { .. })
        ));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        );
        let bad = alloc::vec![VertexSet::singleton(1), VertexSet::EMPTY];
        assert!(Graph::from_adjacency(bad).is_err());
    }

    #[test]
    fn induced_and_delete() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let k3 = k4.induced_subgraph(VertexSet::prefix(3)).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(cycle(4).delete_vertex(0).unwrap(), path(3));
        assert_eq!(
            k4.induced_subgraph(VertexSet::EMPTY),
            Err(Error::EmptyVertexSet)
        );
        assert!(k4.delete_vertex(4).is_err());
        assert_eq!(
            Graph::edgeless(1).unwrap().delete_vertex(0),
            Err(Error::EmptyVertexSet)
        );
    }

    #[test]
    fn induced_relabels_in_order() {
        // path 0-1-2-3-4, keep {1, 3, 4} -> vertices 0,1,2 with edge 1-2 only
        let g = path(5)
            .induced_subgraph([1, 3, 4].into_iter().collect())
            .unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), [(1, 2)]);
    }

    #[test]
    fn components() {
        let e3 = Graph::edgeless(3).unwrap();
        assert_eq!(e3.connected_components().len(), 3);
        assert!(cycle(5).is_connected());
        let u = disjoint_union(&[path(2), path(3)]).unwrap();
        let sizes: Vec<usize> = u.connected_components().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, [2, 3]);
        assert!(!u.is_connected());
        assert_eq!(disjoint_union(&[]), Err(Error::EmptyUnion));
        let big = Graph::edgeless(40).unwrap();
        assert!(disjoint_union(&[big.clone(), big]).is_err());
    }

    #[test]
    fn class_predicates() {
        assert!(path(5).is_tree());
        assert!(cycle(5).is_unicyclic());
        assert!(!cycle(5).is_tree());
        assert!(Graph::edgeless(1).unwrap().is_tree());
        assert_eq!(path(4).leaves().iter().collect::<Vec<_>>(), [0, 3]);
    }

    #[test]
    fn full_width_graph() {
        let g = path(64);
        assert_eq!(g.edge_count(), 63);
        assert!(g.is_connected());
        assert_eq!(g.complement().edge_count(), 64 * 63 / 2 - 63);
        let h = g.delete_vertex(63).unwrap();
        assert_eq!(h, path(63));
    }
}

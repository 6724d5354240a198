//! Isomorphism-free catalogs of small graphs.
//!
//! Catalogs grow one vertex at a time. A child of a canonical parent on
//! `n - 1` vertices is kept only if deleting its canonical deletion vertex
//! gives back that parent; the deletion vertex is the highest-labeled
//! vertex, in canonical labeling, among those whose removal stays in the
//! class (leaves for trees and unicyclic graphs, non-cut vertices for
//! connected graphs, any vertex otherwise). Each isomorphism class then has
//! exactly one parent, and duplicates among the children of one parent are
//! merged by canonical code. Cycles have no leaf and are added directly to
//! the unicyclic catalogs. Graphs with `r` components are assembled as
//! multisets of connected graphs.
//!
//! Yielded graphs are in canonical labeling, so [`emit_graph6`] of a yielded
//! graph is its [`CanonicalCode`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::canon::canonical_labeling;
use crate::counting::articulation_points;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::format::emit_graph6;
use crate::graph::{disjoint_union, Graph};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GraphClass {
    Tree,
    Unicyclic,
    Connected,
    All,
    /// Exactly `r` connected components.
    Components(usize),
}

impl GraphClass {
    /// Largest order [`generate`] accepts for this class.
    pub const fn cap(self) -> usize {
        match self {
            GraphClass::Tree | GraphClass::Unicyclic => 11,
            GraphClass::Connected => 8,
            GraphClass::All => 7,
            GraphClass::Components(_) => 8,
        }
    }

    /// Smallest order with at least one member.
    pub const fn min_order(self) -> usize {
        match self {
            GraphClass::Unicyclic => 3,
            GraphClass::Components(r) => r,
            _ => 1,
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Tree => g.is_tree(),
            GraphClass::Unicyclic => g.is_unicyclic(),
            GraphClass::Connected => g.is_connected(),
            GraphClass::All => true,
            GraphClass::Components(r) => g.connected_components().len() == r,
        }
    }

    /// Vertices whose deletion keeps a member of the class in the class.
    fn deletable(self, g: &Graph) -> VertexSet {
        match self {
            GraphClass::Tree | GraphClass::Unicyclic => g.leaves(),
            GraphClass::Connected => g.vertices().difference(articulation_points(g)),
            GraphClass::All | GraphClass::Components(_) => g.vertices(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Tree => f.write_str("tree"),
            GraphClass::Unicyclic => f.write_str("unicyclic"),
            GraphClass::Connected => f.write_str("connected"),
            GraphClass::All => f.write_str("all"),
            GraphClass::Components(r) => write!(f, "components_{r}"),
        }
    }
}

impl FromStr for GraphClass {
    type Err = Error;

    /// `tree`, `unicyclic`, `connected`, `all`, or `components_<r>`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "tree" => GraphClass::Tree,
            "unicyclic" => GraphClass::Unicyclic,
            "connected" => GraphClass::Connected,
            "all" => GraphClass::All,
            _ => match s.strip_prefix("components_").and_then(|r| r.parse().ok()) {
                Some(r) if r >= 1 => GraphClass::Components(r),
                _ => {
                    return Err(Error::ParameterOutOfRange(format!(
                        "unknown graph class {s:?}"
                    )))
                }
            },
        })
    }
}

/// graph6 string of the canonical representative. Equal codes mean
/// isomorphic graphs and vice versa.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// The graph relabeled into canonical order.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    check_canonical_order(g.order())?;
    Ok(g.permute(&canonical_labeling(g)))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalCode> {
    Ok(CanonicalCode(emit_graph6(&canonical_graph(g)?)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        check_canonical_order(g.order())?;
        check_canonical_order(h.order())?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn check_canonical_order(n: usize) -> Result<()> {
    if n > CANONICAL_MAX_ORDER {
        Err(Error::CapExceeded {
            what: "canonical form",
            order: n,
            cap: CANONICAL_MAX_ORDER,
        })
    } else {
        Ok(())
    }
}

/// One representative per isomorphism class of `class` graphs on `n`
/// vertices, sorted by canonical code.
pub fn generate(class: GraphClass, n: usize) -> Result<Vec<Graph>> {
    check_generation(class, n)?;
    if let GraphClass::Components(r) = class {
        return generate_components(r, n);
    }
    if n < class.min_order() {
        return Ok(Vec::new());
    }
    let mut level = base_level(class);
    for m in class.min_order() + 1..=n {
        level = next_level(class, &level, m);
    }
    Ok(level)
}

/// Catalogs for every order `1..=n`; entry `m - 1` holds order `m`.
pub fn generate_up_to(class: GraphClass, n: usize) -> Result<Vec<Vec<Graph>>> {
    check_generation(class, n)?;
    if let GraphClass::Components(r) = class {
        return (1..=n).map(|m| generate_components(r, m)).collect();
    }
    let mut out: Vec<Vec<Graph>> = (1..class.min_order().min(n + 1))
        .map(|_| Vec::new())
        .collect();
    if n < class.min_order() {
        return Ok(out);
    }
    out.push(base_level(class));
    for m in class.min_order() + 1..=n {
        let next = next_level(class, out.last().expect("base level present"), m);
        out.push(next);
    }
    Ok(out)
}

fn check_generation(class: GraphClass, n: usize) -> Result<()> {
    if let GraphClass::Components(0) = class {
        return Err(Error::ParameterOutOfRange(
            "component count must be at least 1".into(),
        ));
    }
    if n == 0 {
        return Err(Error::ParameterOutOfRange(
            "order must be at least 1".into(),
        ));
    }
    if n > class.cap() {
        return Err(Error::CapExceeded {
            what: "catalog generation",
            order: n,
            cap: class.cap(),
        });
    }
    Ok(())
}

fn canonical(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

fn base_level(class: GraphClass) -> Vec<Graph> {
    let g = match class {
        GraphClass::Unicyclic => FamilySpec::Cycle { n: 3 }.construct(),
        _ => Graph::edgeless(1),
    };
    alloc::vec![g.expect("base graphs are valid")]
}

fn next_level(class: GraphClass, parents: &[Graph], n: usize) -> Vec<Graph> {
    let mut out: BTreeMap<String, Graph> = BTreeMap::new();
    for parent in parents {
        let parent_code = emit_graph6(parent);
        let mut children: BTreeMap<String, Graph> = BTreeMap::new();
        for nbrs in neighbor_choices(class, n - 1) {
            let child = parent.with_vertex(nbrs).expect("order stays within range");
            let canon = canonical(&child);
            let code = emit_graph6(&canon);
            if children.contains_key(&code) {
                continue;
            }
            let drop = class
                .deletable(&canon)
                .highest()
                .expect("class members always have a deletable vertex");
            let reduced = canon.delete_vertex(drop).expect("order is at least 2");
            if emit_graph6(&canonical(&reduced)) == parent_code {
                children.insert(code, canon);
            }
        }
        for (code, g) in children {
            let clash = out.insert(code, g);
            debug_assert!(clash.is_none(), "a child was accepted under two parents");
        }
    }
    if class == GraphClass::Unicyclic {
        let cycle = canonical(&FamilySpec::Cycle { n }.construct().expect("n >= 3"));
        out.insert(emit_graph6(&cycle), cycle);
    }
    out.into_values().collect()
}

/// Neighborhoods of the new vertex `m` (joined to a graph on `0..m`).
fn neighbor_choices(class: GraphClass, m: usize) -> Vec<VertexSet> {
    match class {
        GraphClass::Tree | GraphClass::Unicyclic => (0..m).map(VertexSet::singleton).collect(),
        GraphClass::Connected => (1..1u64 << m).map(VertexSet::from_bits).collect(),
        GraphClass::All | GraphClass::Components(_) => {
            (0..1u64 << m).map(VertexSet::from_bits).collect()
        }
    }
}

/// Multisets of `r` connected graphs with orders summing to `n`.
fn generate_components(r: usize, n: usize) -> Result<Vec<Graph>> {
    if r > n {
        return Ok(Vec::new());
    }
    let biggest = n - r + 1;
    let connected = generate_up_to(GraphClass::Connected, biggest)?;
    // Components listed by (order, index in its catalog), non-increasing.
    let pool: Vec<(usize, usize)> = connected
        .iter()
        .enumerate()
        .flat_map(|(i, level)| (0..level.len()).map(move |j| (i + 1, j)))
        .collect();
    let mut out: BTreeMap<String, Graph> = BTreeMap::new();
    let mut pick: Vec<usize> = Vec::with_capacity(r);
    fn rec(
        pool: &[(usize, usize)],
        connected: &[Vec<Graph>],
        r: usize,
        remaining: usize,
        start: usize,
        pick: &mut Vec<usize>,
        out: &mut BTreeMap<String, Graph>,
    ) {
        if pick.len() == r {
            if remaining == 0 {
                let parts: Vec<Graph> = pick
                    .iter()
                    .map(|&i| connected[pool[i].0 - 1][pool[i].1].clone())
                    .collect();
                let g = canonical(&disjoint_union(&parts).expect("total order within cap"));
                out.insert(emit_graph6(&g), g);
            }
            return;
        }
        let slots_left = r - pick.len();
        for i in start..pool.len() {
            let size = pool[i].0;
            if size + (slots_left - 1) > remaining {
                break;
            }
            pick.push(i);
            rec(pool, connected, r, remaining - size, i, pick, out);
            pick.pop();
        }
    }
    rec(&pool, &connected, r, n, 0, &mut pick, &mut out);
    Ok(out.into_values().collect())
}

//! Counting connected induced subgraphs of small simple graphs.
//!
//! A connected induced subgraph is a nonempty vertex set whose induced
//! subgraph is connected. This crate provides:
//!
//! - [`Graph`] and [`VertexSet`], one machine word per neighborhood, with
//!   graph6 and edge-list codecs;
//! - the named families ([`FamilySpec`]) with fixed labelings;
//! - exact enumeration and counting, total, per order, and anchored at one
//!   or two vertices ([`counting`]);
//! - closed-form counts and extremal bounds as pure arithmetic
//!   ([`formulas`]);
//! - canonical forms and isomorphism-free catalogs by class ([`atlas`]).
//!
//! The crate is `no_std` and needs only `alloc`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod atlas;
mod canon;
pub mod counting;
mod error;
pub mod family;
pub mod format;
pub mod formulas;
pub mod graph;
mod vertex_set;

pub use atlas::{canonical_form, generate, is_isomorphic, CanonicalCode, GraphClass};
pub use counting::{
    count_by_deletion, count_containing, count_containing_pair, count_profile, enumerate_cis,
    rooted_subtree_count, Anchor, AnchorQuery, CountProfile,
};
pub use error::{Error, Result};
pub use family::{FamilySpec, FamilyTag};
pub use format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
pub use formulas::{
    bound_value, closed_form_total, expected_extremizers, BoundSpec, Measure, Objective,
};
pub use graph::{disjoint_union, Graph, MAX_ORDER};
pub use num_bigint::BigUint;
pub use vertex_set::VertexSet;

//! Flows in signed multigraphs.
//!
//! A signed graph carries a sign on every edge; a circuit is unbalanced
//! when it has an odd number of negative edges. Under a half-edge
//! orientation, an assignment of abelian-group values to edges is a flow
//! when Kirchhoff conservation holds at every vertex. This crate provides:
//!
//! * exact arithmetic in finite abelian groups ([`group`]),
//! * the signed-graph data model with switching, balance and half-edge
//!   orientations ([`sgraph`]),
//! * fundamental directed circuits and the root circuit, which together
//!   generate every flow of a connected unbalanced graph ([`circuits`]),
//! * flow enumeration, classification by the order-2 element of the root
//!   coefficient, and a brute-force oracle ([`flows`]),
//! * the flow polynomial by inclusion-exclusion over edge subsets
//!   ([`flowpoly`]),
//! * bonds, broken bonds, the broken-bond expansion of the `d = 0` flow
//!   polynomial, and the simplicial complex of bond-free edge sets
//!   ([`bonds`]),
//! * a JSON command-line front end ([`cli`]) exposed through the `sflow`
//!   binary.
//!
//! See the crate examples for runnable tours of each capability.

pub mod bonds;
pub mod circuits;
pub mod cli;
mod dsu;
pub mod error;
pub mod families;
pub mod flowpoly;
pub mod flows;
pub mod group;
pub mod sgraph;

pub use bonds::{Bond, EdgeOrder};
pub use circuits::{CircuitVector, FundamentalSystem};
pub use error::{Budget, Error, Result};
pub use flowpoly::IntPolynomial;
pub use flows::FlowVector;
pub use group::{AbelianGroup, GroupElement};
pub use sgraph::{Edge, EdgeSet, Orientation, Sign, SignedGraph, VertexSet};

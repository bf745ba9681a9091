//! Exact chromatic polynomials of mixed graphs and order polynomials of
//! labeled posets, with checkers for the reciprocity identities that tie them
//! to acyclic orientations.
//!
//! Every count is exact. Polynomials have arbitrary-precision rational
//! coefficients and the brute-force oracles in [`enumeration`] serve as
//! independent witnesses for the engines in [`chromatic`] and [`poset`].

pub mod chromatic;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod polynomial;
pub mod poset;
pub mod report;

pub use chromatic::{
    strong_chromatic_polynomial, weak_chromatic_polynomial, weak_chromatic_via_oracle, WeakEngine,
};
pub use error::{Error, Result};
pub use graph::{Arc, Edge, Element, MixedGraph, Orientation, Origin, Subgraph, VertexId};
pub use polynomial::Polynomial;
pub use poset::{OmegaLabeling, Poset};
pub use report::{Row, Theorem, VerificationReport};

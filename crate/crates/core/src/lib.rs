//! Spined categories and the triangulation functor.
//!
//! A spined category is a category with a distinguished sequence of objects
//! (the spine) and a proxy pushout operation for spans out of spine objects.
//! Nat-valued functors preserving both are S-functors; the largest of them is
//! the triangulation functor Δ, computed here as a minimum of an S-functor over
//! pseudo-chordal targets.
//!
//! Two concrete instances are provided:
//!
//! * [`graph::GraphMonoCategory`]: simple graphs with injective homomorphisms,
//!   complete graphs as the spine and clique-sums as proxy pushouts. Its Δ is
//!   treewidth (in the max-clique convention, i.e. treewidth + 1).
//! * [`hypergraph::HypergraphMonoCategory`]: the analogous construction for
//!   hypergraphs, whose Δ is hypergraph treewidth via the primal graph.
//!
//! The generic law checkers in [`category`] verify the spined-category and
//! S-functor axioms on finite populations.

pub mod category;
pub mod chordal;
pub mod cli;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod triangulation;

pub use category::{LawFailure, LawReport, NatCategory, ProxyPushout, SFunctor, SpinedCategory};
pub use error::{Error, Result};
pub use graph::{GraphMonoCategory, GraphMorphism, SimpleGraph};
pub use hypergraph::{Hypergraph, HypergraphMonoCategory, HypergraphMorphism};
pub use triangulation::{delta_graph, treewidth_oracle, Convention, WidthValue};

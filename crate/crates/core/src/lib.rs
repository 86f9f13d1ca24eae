//! Conflict-free incidence colorings of simple graphs.
//!
//! An *incidence* is a vertex–edge pair `(v, e)` with `v` an endpoint of `e`.
//! Two incidences conflict when some vertex `w` has both of them in its
//! incidence set `I(w)`. A conflict-free incidence coloring gives every edge
//! two colors such that the edges around every vertex carry pairwise
//! disjoint color pairs, which is the same thing as a 2-fold edge coloring.
//!
//! The crate provides
//!
//! * the graph and coloring model together with an independent verifier
//!   ([`graph`]),
//! * exact proper edge coloring and the doubling construction
//!   ([`edge_coloring`]),
//! * an exact branch-and-bound oracle for the incidence chromatic number
//!   ([`oracle`]),
//! * optimal closed-form colorings of cycles and complete graphs
//!   ([`closed_form`]),
//! * the gadget calculus for the class of graphs built from `K4+`, including
//!   a peeling recognizer and the 7-coloring extenders ([`class_p`]),
//! * the dispatcher producing optimal colorings of connected
//!   outer-1-planar graphs ([`o1p`]).
//!
//! Everything here is pure and allocation-only; file formats and the command
//! line live in the `incol` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod class_p;
pub mod closed_form;
pub mod edge_coloring;
mod error;
pub mod graph;
pub mod o1p;
pub mod oracle;
mod search;

pub use error::Error;
pub use graph::{
    conflicting, incidences_at, palette_count, verify, Color, ColorPair, EdgeId, Graph,
    Incidence, IncidenceColoring, Slot, VerifyError, VertexId,
};
pub use search::{Budget, SearchOutcome};

pub type Result<T, E = Error> = core::result::Result<T, E>;

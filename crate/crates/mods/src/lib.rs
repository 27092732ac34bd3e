//! Exact solvers and theorem checks for majority out-domination in digraphs.
//!
//! A *majority out-dominating set* (MODS) of a digraph `D` on `n` vertices
//! is a set `S` whose closed out-neighborhood covers at least half of the
//! vertices, `|N+[S]| >= ceil(n/2)`. This crate computes the associated
//! minimum, the set majority out-domination number, exactly; checks the
//! sharp bounds that relate it to degrees, longest paths and cycles, and the
//! out-domination number; quantifies how the number moves under arc and
//! vertex edits; and explores all orientations of an undirected graph to
//! compute the lower and upper orientable set majority domination numbers.
//!
//! The `mods` binary exposes all of it on the command line, including a
//! `suite` command that re-verifies every implemented theorem over a corpus
//! of family and seeded random instances.

pub mod bounds;
pub mod cli;
pub mod digraph;
pub mod error;
pub mod family;
pub mod graph;
pub mod io;
pub mod orient;
pub mod perturb;
pub mod report;
pub mod set;
pub mod solver;
pub mod suite;

pub use digraph::Digraph;
pub use error::{Error, Result};
pub use family::{FamilySpec, Instance};
pub use graph::{Graph, Orientation};
pub use set::VertexSet;
pub use solver::{Method, SolveResult};

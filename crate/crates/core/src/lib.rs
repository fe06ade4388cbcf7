//! Sliding-window coloring of temporal graphs.
//!
//! A temporal graph is a fixed vertex set whose edges are active at sets of
//! time slots. A sliding Δ-window coloring assigns every vertex a color in
//! every slot so that each edge active somewhere inside any Δ consecutive
//! slots gets differently colored endpoints at least once in that window.
//!
//! Vertices are 0-indexed, slots and colors 1-indexed.

pub mod approx;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracles;
pub mod reducer;
pub mod reductions;
pub mod sat;
pub mod solver;
pub mod verifier;

pub use error::{BudgetKind, Error, Result};
pub use graph::{Instance, TemporalColoring, TemporalEdge, TemporalGraph, VertexPair, WindowRange};
pub use solver::{Decision, SolverConfig};
pub use verifier::{is_proper, Verdict, Violation};

//! Heuristic graph coloring with clique lower bounds.
//!
//! The solver alternates between raising a lower bound (heuristic and exact
//! clique search), deleting vertices whose degree is below that bound, and
//! recoloring what remains with a k-core layered greedy or DSatur. Deleted
//! vertices are colored back at the end.
//!
//! Only `alloc` is required. Time is read through [`clock::Clock`], so the
//! caller chooses between a wall clock and the deterministic
//! [`clock::VirtualClock`].

#![no_std]

extern crate alloc;

mod bitset;
pub mod clique;
pub mod clock;
pub mod coloring;
pub mod graph;
pub mod kcore;
pub mod mdd;
pub mod oracle;
pub mod reduce;
pub mod solver;

pub use clique::{exact_lb, find_clique_heuristic, max_clique_exact, Clique};
pub use clock::{Clock, Deadline, VirtualClock};
pub use coloring::{dsatur, recolor, Coloring};
pub use graph::{BuildStats, Graph, GraphError, GraphView, WorkingGraph};
pub use kcore::{core_decompose, CoreDecomposition};
pub use mdd::{mdd_color, mdd_sort, Lambda, MddOrder};
pub use reduce::{extend_coloring, redu_rule, DeletionStack, ExtendError};
pub use solver::{solve, SolveError, SolveResult, SolverConfig};

//! Low-degree reduction and the lift-back of reduced colorings.
//!
//! With a lower bound `ℓ` on the chromatic number, any vertex of degree
//! below `ℓ` can be deleted: once the rest is colored, it sees at most
//! `ℓ - 1` colors and fits into `{0..ℓ}`. Deleting it may expose further
//! such vertices, so reduction cascades.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::graph::{Graph, GraphView, WorkingGraph};

/// One deleted vertex and the bound that justified deleting it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StackEntry {
    pub vertex: usize,
    pub ell: usize,
}

/// Deleted vertices in deletion order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeletionStack {
    entries: Vec<StackEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtendError {
    /// The partial coloring has a monochromatic edge.
    ImproperPartial { u: usize, v: usize },
    /// A stack entry is out of range, repeated, or colored in the partial.
    InconsistentStack { index: usize, vertex: usize },
    /// Replaying deletions found an entry whose degree was not below its bound.
    NotLowDegree { index: usize, vertex: usize, degree: usize, ell: usize },
}

impl fmt::Display for ExtendError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendError::ImproperPartial { u, v } => {
                write!(f, "partial coloring is improper on edge ({u}, {v})")
            }
            ExtendError::InconsistentStack { index, vertex } => {
                write!(f, "deletion stack entry {index} (vertex {vertex}) is inconsistent")
            }
            ExtendError::NotLowDegree { index, vertex, degree, ell } => write!(
                f,
                "deletion stack entry {index}: vertex {vertex} had degree {degree}, not below {ell}"
            ),
        }
    }
}

impl core::error::Error for ExtendError {}

impl DeletionStack {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push_all(&mut self, vertices: &[usize], ell: usize) {
        self.entries
            .extend(vertices.iter().map(|&vertex| StackEntry { vertex, ell }));
    }

    pub fn entries(&self) -> &[StackEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Re-simulates the deletions on `g`: every entry must be a distinct
    /// vertex whose degree, after removing all earlier entries, is below
    /// its recorded bound.
    pub fn validate(&self, g: &Graph) -> Result<(), ExtendError> {
        let mut w = WorkingGraph::new(g);
        for (index, e) in self.entries.iter().enumerate() {
            if e.vertex >= g.n() || !w.is_alive(e.vertex) {
                return Err(ExtendError::InconsistentStack { index, vertex: e.vertex });
            }
            let degree = w.degree(e.vertex);
            if degree >= e.ell {
                return Err(ExtendError::NotLowDegree {
                    index,
                    vertex: e.vertex,
                    degree,
                    ell: e.ell,
                });
            }
            w.remove_vertices(&[e.vertex]);
        }
        Ok(())
    }
}

/// Result of one [`redu_rule`] call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Removed vertices in deletion order; ascending id within each round.
    pub removed: Vec<usize>,
    /// Size of every round, in order.
    pub rounds: Vec<usize>,
}

impl Reduction {
    pub fn reduced(&self) -> bool {
        !self.removed.is_empty()
    }

    /// The removed vertices of round `i`.
    pub fn round(&self, i: usize) -> &[usize] {
        let start: usize = self.rounds[..i].iter().sum();
        &self.removed[start..start + self.rounds[i]]
    }
}

/// Repeatedly deletes every alive vertex of degree below `ell` until none
/// is left. Each round removes the whole current set at once; vertices whose
/// degree drops below `ell` because of a round are removed in the next one.
pub fn redu_rule(w: &mut WorkingGraph<'_>, ell: usize) -> Reduction {
    let mut removed = Vec::new();
    let mut rounds = Vec::new();
    let mut round: Vec<usize> = w.vertices().filter(|&v| w.degree(v) < ell).collect();
    let mut queued = vec![false; w.capacity()];
    while !round.is_empty() {
        w.remove_vertices(&round);
        removed.extend_from_slice(&round);
        rounds.push(round.len());

        let mut next = Vec::new();
        for &v in &round {
            for &u in w.base_neighbors(v) {
                if w.is_alive(u) && !queued[u] && w.degree(u) < ell {
                    queued[u] = true;
                    next.push(u);
                }
            }
        }
        next.sort_unstable();
        round = next;
    }
    Reduction { removed, rounds }
}

/// Lifts a coloring of the reduced graph back to `g`: stack entries are
/// colored in reverse deletion order with the smallest color absent from
/// their already-colored neighbors. Every stacked vertex sees fewer than
/// its `ell` colored neighbors, so the result uses at most
/// `max(ell, colors(partial))` colors.
pub fn extend_coloring(
    g: &Graph,
    partial: &Coloring,
    stack: &DeletionStack,
) -> Result<Coloring, ExtendError> {
    if let Some((u, v)) = partial.conflict(g) {
        return Err(ExtendError::ImproperPartial { u, v });
    }
    let mut out = partial.clone();
    out.resize(g.n());
    for (index, e) in stack.entries().iter().enumerate() {
        if e.vertex >= g.n() || out.get(e.vertex).is_some() {
            return Err(ExtendError::InconsistentStack { index, vertex: e.vertex });
        }
    }
    let mut mark = vec![usize::MAX; g.n() + 1];
    for (index, e) in stack.entries().iter().enumerate().rev() {
        let v = e.vertex;
        if out.get(v).is_some() {
            return Err(ExtendError::InconsistentStack { index, vertex: v });
        }
        let mut seen = 0;
        for &u in g.adjacency(v) {
            if let Some(c) = out.get(u) {
                let c = c as usize;
                if c < mark.len() {
                    mark[c] = index;
                }
                seen += 1;
            }
        }
        if seen >= e.ell {
            return Err(ExtendError::NotLowDegree { index, vertex: v, degree: seen, ell: e.ell });
        }
        // at most n - 1 colored neighbors, so a free color exists below n
        let c = (0..mark.len()).find(|&c| mark[c] != index).unwrap();
        out.set(v, c as u32);
    }
    Ok(out)
}

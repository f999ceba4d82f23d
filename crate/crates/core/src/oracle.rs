//! Independent checks: coloring validation and exact chromatic number for
//! tiny graphs. Nothing here shares code with the heuristics it is used to
//! check.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::Coloring;
use crate::graph::Graph;

/// Largest order accepted by [`brute_force_chromatic`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    Uncolored(usize),
    /// Monochromatic edge `(u, v)` with `u < v`.
    Conflict(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncolored(v) => write!(f, "vertex {v} is uncolored"),
            Violation::Conflict(u, v) => write!(f, "edge ({u}, {v}) is monochromatic"),
        }
    }
}

impl core::error::Error for Violation {}

/// Checks that `c` colors every vertex of `g` and no edge is monochromatic.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<(), Violation> {
    if let Some(v) = (0..g.n()).find(|&v| c.get(v).is_none()) {
        return Err(Violation::Uncolored(v));
    }
    for (u, v) in g.edges() {
        if c.get(u) == c.get(v) {
            return Err(Violation::Conflict(u, v));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TooLarge {
    pub n: usize,
}

impl fmt::Display for TooLarge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "brute-force chromatic number limited to {BRUTE_FORCE_LIMIT} vertices, got {}",
            self.n
        )
    }
}

impl core::error::Error for TooLarge {}

/// Exact chromatic number by iterative deepening over `k`, starting from a
/// maximum clique found by subset enumeration; the clique is pre-colored to
/// break symmetry.
pub fn brute_force_chromatic(g: &Graph) -> Result<usize, TooLarge> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(TooLarge { n });
    }
    if n == 0 {
        return Ok(0);
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.adjacency(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect();

    let mut clique = 0u32;
    for set in 1u32..(1 << n) {
        if set.count_ones() <= clique.count_ones() {
            continue;
        }
        let is_clique = (0..n)
            .filter(|&v| set >> v & 1 == 1)
            .all(|v| set & !(1 << v) & !adj[v] == 0);
        if is_clique {
            clique = set;
        }
    }

    let mut order: Vec<usize> = (0..n).filter(|&v| clique >> v & 1 == 1).collect();
    let pinned = order.len();
    let mut rest: Vec<usize> = (0..n).filter(|&v| clique >> v & 1 == 0).collect();
    rest.sort_by_key(|&v| core::cmp::Reverse(adj[v].count_ones()));
    order.extend(rest);

    for k in pinned.max(1)..=n {
        let mut colors = vec![usize::MAX; n];
        for (i, &v) in order[..pinned].iter().enumerate() {
            colors[v] = i;
        }
        if extend(&order, pinned, k, &adj, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("every graph is n-colorable")
}

fn extend(order: &[usize], i: usize, k: usize, adj: &[u32], colors: &mut [usize]) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // first-use symmetry: never open more than one new color at a time
    let used = order[..i].iter().map(|&u| colors[u] + 1).max().unwrap_or(0);
    for c in 0..k.min(used + 1) {
        let clash = (0..order.len()).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c);
        if !clash {
            colors[v] = c;
            if extend(order, i + 1, k, adj, colors) {
                return true;
            }
            colors[v] = usize::MAX;
        }
    }
    false
}

//! Mixed-degree ordering and the core-layered greedy coloring built on it.
//!
//! For a placed set `S`, the mixed degree of an unplaced vertex is
//! `d_r + λ·d_e`, where `d_r` counts its neighbors outside `S` and `d_e` those
//! inside. Keys are kept in tenths so bucketing is exact.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::coloring::{min_available, recolor, ColorMarks, Coloring};
use crate::graph::GraphView;
use crate::kcore::core_decompose;

/// Mixed-degree weight in tenths (`0..=10`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lambda(u8);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaOutOfRange(pub f64);

impl fmt::Display for LambdaOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda {} outside [0, 1]", self.0)
    }
}

impl core::error::Error for LambdaOutOfRange {}

impl Lambda {
    pub const DEFAULT: Lambda = Lambda(7);

    pub fn from_tenths(t: u8) -> Option<Lambda> {
        (t <= 10).then_some(Lambda(t))
    }

    /// Rounds to the nearest tenth.
    pub fn from_f64(x: f64) -> Result<Lambda, LambdaOutOfRange> {
        if !(0.0..=1.0).contains(&x) {
            return Err(LambdaOutOfRange(x));
        }
        // x*10 + 0.5 in [0.5, 10.5]: truncation is rounding
        Ok(Lambda((x * 10.0 + 0.5) as u8))
    }

    pub fn tenths(self) -> u8 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 10.0
    }
}

impl Default for Lambda {
    fn default() -> Self {
        Lambda::DEFAULT
    }
}

/// Bookkeeping of the growing placed set.
#[derive(Debug, Clone)]
pub struct MixedDegreeState {
    placed: Vec<bool>,
    r_deg: Vec<usize>,
    e_deg: Vec<usize>,
    lambda: Lambda,
}

impl MixedDegreeState {
    pub fn is_placed(&self, v: usize) -> bool {
        self.placed[v]
    }

    /// Neighbors of `v` not yet placed.
    pub fn r_deg(&self, v: usize) -> usize {
        self.r_deg[v]
    }

    /// Neighbors of `v` already placed.
    pub fn e_deg(&self, v: usize) -> usize {
        self.e_deg[v]
    }

    /// Ten times the mixed degree.
    pub fn key(&self, v: usize) -> usize {
        10 * self.r_deg[v] + self.lambda.0 as usize * self.e_deg[v]
    }

    pub fn lambda(&self) -> Lambda {
        self.lambda
    }
}

/// Round-by-round mixed-degree peeling with bucket queues.
pub struct MddSorter<'a, G: GraphView> {
    g: &'a G,
    state: MixedDegreeState,
    buckets: Vec<Vec<usize>>,
    min: usize,
    remaining: usize,
}

impl<'a, G: GraphView> MddSorter<'a, G> {
    pub fn new(g: &'a G, lambda: Lambda) -> Self {
        let cap = g.capacity();
        let mut state = MixedDegreeState {
            placed: vec![false; cap],
            r_deg: vec![0; cap],
            e_deg: vec![0; cap],
            lambda,
        };
        let mut max_key = 0;
        for v in g.vertices() {
            state.r_deg[v] = g.degree(v);
            max_key = max_key.max(state.key(v));
        }
        let mut buckets = vec![Vec::new(); max_key + 1];
        for v in g.vertices() {
            buckets[state.key(v)].push(v);
        }
        MddSorter {
            g,
            state,
            buckets,
            min: 0,
            remaining: g.order(),
        }
    }

    pub fn state(&self) -> &MixedDegreeState {
        &self.state
    }

    /// Places every unplaced vertex of minimum mixed degree (ascending id)
    /// and returns them; `None` once all vertices are placed.
    pub fn next_round(&mut self) -> Option<Vec<usize>> {
        if self.remaining == 0 {
            return None;
        }
        let round = loop {
            let key = self.min;
            let state = &self.state;
            let mut round: Vec<usize> = core::mem::take(&mut self.buckets[key])
                .into_iter()
                .filter(|&v| !state.placed[v] && state.key(v) == key)
                .collect();
            if !round.is_empty() {
                round.sort_unstable();
                break round;
            }
            self.min += 1;
        };
        for &v in &round {
            self.state.placed[v] = true;
        }
        self.remaining -= round.len();
        for &v in &round {
            for u in self.g.neighbors(v) {
                if self.state.placed[u] {
                    continue;
                }
                let old = self.state.key(u);
                self.state.r_deg[u] -= 1;
                self.state.e_deg[u] += 1;
                let new = self.state.key(u);
                if new != old {
                    self.buckets[new].push(u);
                    self.min = self.min.min(new);
                }
            }
        }
        Some(round)
    }
}

/// Full mixed-degree order of the alive vertices.
pub fn mdd_sort<G: GraphView>(g: &G, lambda: Lambda) -> Vec<usize> {
    let mut sorter = MddSorter::new(g, lambda);
    let mut out = Vec::with_capacity(g.order());
    while let Some(round) = sorter.next_round() {
        out.extend(round);
    }
    out
}

/// Coloring order: vertices grouped by core layer (ascending shell).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MddOrder {
    pub sequence: Vec<usize>,
    /// Start of every layer in `sequence`, plus a final `sequence.len()`.
    pub layer_boundaries: Vec<usize>,
    /// Whether layers were reordered by mixed degree.
    pub reordered: bool,
}

impl MddOrder {
    /// Peeling order of the core decomposition; with `reorder`, each layer is
    /// re-sorted by position in the mixed-degree order.
    pub fn build<G: GraphView>(g: &G, lambda: Lambda, reorder: bool) -> MddOrder {
        let cores = core_decompose(g);
        let layer_boundaries = cores.layer_boundaries();
        let mut sequence = cores.peel_order;
        if reorder {
            let mut pos = vec![0usize; g.capacity()];
            for (i, v) in mdd_sort(g, lambda).into_iter().enumerate() {
                pos[v] = i;
            }
            for w in layer_boundaries.windows(2) {
                sequence[w[0]..w[1]].sort_unstable_by_key(|&v| pos[v]);
            }
        }
        MddOrder {
            sequence,
            layer_boundaries,
            reordered: reorder,
        }
    }
}

/// Greedy coloring in reverse `order`. With an incumbent using `k` colors,
/// a vertex that would open color `k` or above first tries [`recolor`]; if
/// that fails the incumbent is returned unchanged.
pub fn mdd_color<G: GraphView>(g: &G, incumbent: Option<&Coloring>, order: &MddOrder) -> Coloring {
    let limit = incumbent.map(Coloring::num_colors);
    let mut f = Coloring::empty(g.capacity());
    let mut marks = ColorMarks::new();
    for &v in order.sequence.iter().rev() {
        let c = min_available(g, &f, v, &mut marks);
        match limit {
            Some(limit) if c >= limit => {
                if !recolor(g, &mut f, v, limit) {
                    return incumbent.unwrap().clone();
                }
            }
            _ => f.set(v, c as u32),
        }
    }
    debug_assert!(f.is_proper_total(g));
    f
}

//! Vertex colorings, the single-move recolor repair, and DSatur.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::{Graph, GraphView};

/// Partial or total assignment of colors (`0..`) to vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coloring {
    assign: Vec<Option<u32>>,
}

impl Coloring {
    /// All `n` vertices uncolored.
    pub fn empty(n: usize) -> Self {
        Coloring {
            assign: vec![None; n],
        }
    }

    pub fn from_colors(colors: &[u32]) -> Self {
        Coloring {
            assign: colors.iter().map(|&c| Some(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.assign.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assign.is_empty()
    }

    pub fn resize(&mut self, n: usize) {
        self.assign.resize(n, None);
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<u32> {
        self.assign.get(v).copied().flatten()
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: u32) {
        self.assign[v] = Some(c);
    }

    pub fn unset(&mut self, v: usize) {
        self.assign[v] = None;
    }

    pub fn assignments(&self) -> &[Option<u32>] {
        &self.assign
    }

    /// Number of distinct colors in use.
    pub fn num_colors(&self) -> usize {
        let Some(max) = self.assign.iter().flatten().max() else {
            return 0;
        };
        let mut used = vec![false; *max as usize + 1];
        for &c in self.assign.iter().flatten() {
            used[c as usize] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    pub fn colored_count(&self) -> usize {
        self.assign.iter().filter(|c| c.is_some()).count()
    }

    /// Keeps only vertices alive in `g`.
    pub fn restrict<G: GraphView>(&self, g: &G) -> Coloring {
        let mut out = Coloring::empty(g.capacity());
        for v in g.vertices() {
            if let Some(c) = self.get(v) {
                out.set(v, c);
            }
        }
        out
    }

    /// Relabels colors to `0..num_colors`, preserving their relative order.
    pub fn compact(&mut self) {
        let Some(max) = self.assign.iter().flatten().max() else {
            return;
        };
        let mut map = vec![u32::MAX; *max as usize + 1];
        for &c in self.assign.iter().flatten() {
            map[c as usize] = 0;
        }
        let mut next = 0;
        for m in map.iter_mut() {
            if *m == 0 {
                *m = next;
                next += 1;
            }
        }
        for c in self.assign.iter_mut().flatten() {
            *c = map[*c as usize];
        }
    }

    /// First edge `(u, v)`, `u < v`, whose endpoints share a color.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().find(|&(u, v)| match (self.get(u), self.get(v)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }

    /// No conflict among colored vertices of the view.
    pub fn is_proper_on<G: GraphView>(&self, g: &G) -> bool {
        g.vertices().all(|v| match self.get(v) {
            Some(c) => g.neighbors(v).all(|u| u < v || self.get(u) != Some(c)),
            None => true,
        })
    }

    /// Every vertex of the view is colored and no edge is monochromatic.
    pub fn is_proper_total<G: GraphView>(&self, g: &G) -> bool {
        g.vertices().all(|v| self.get(v).is_some()) && self.is_proper_on(g)
    }
}

/// Scratch marks for "which colors appear around v" queries.
pub(crate) struct ColorMarks {
    mark: Vec<usize>,
    epoch: usize,
}

impl ColorMarks {
    pub fn new() -> Self {
        ColorMarks {
            mark: Vec::new(),
            epoch: 0,
        }
    }

    pub fn begin(&mut self) {
        self.epoch += 1;
    }

    pub fn insert(&mut self, c: u32) {
        let c = c as usize;
        if c >= self.mark.len() {
            self.mark.resize(c + 1, 0);
        }
        self.mark[c] = self.epoch;
    }

    pub fn contains(&self, c: usize) -> bool {
        self.mark.get(c) == Some(&self.epoch)
    }

    pub fn smallest_free(&self) -> usize {
        (0..).find(|&c| !self.contains(c)).unwrap()
    }
}

/// Smallest color not used by a colored neighbor of `v`.
pub(crate) fn min_available<G: GraphView>(
    g: &G,
    f: &Coloring,
    v: usize,
    marks: &mut ColorMarks,
) -> usize {
    marks.begin();
    for u in g.neighbors(v) {
        if let Some(c) = f.get(u) {
            marks.insert(c);
        }
    }
    marks.smallest_free()
}

/// Single-move repair for an uncolored `v` that sees every color below
/// `limit`: find a color `c` held by exactly one neighbor `u` such that `u`
/// can move to another color below `limit` unused around it; then move `u`
/// and give `c` to `v`. Colors and targets are tried in ascending order.
/// On failure `f` is left untouched.
pub fn recolor<G: GraphView>(g: &G, f: &mut Coloring, v: usize, limit: usize) -> bool {
    debug_assert!(f.get(v).is_none());
    let mut count = vec![0usize; limit];
    let mut blocker = vec![usize::MAX; limit];
    for u in g.neighbors(v) {
        if let Some(c) = f.get(u) {
            let c = c as usize;
            if c < limit {
                count[c] += 1;
                blocker[c] = u;
            }
        }
    }
    if let Some(c) = (0..limit).find(|&c| count[c] == 0) {
        f.set(v, c as u32);
        return true;
    }
    let mut marks = ColorMarks::new();
    for c in 0..limit {
        if count[c] != 1 {
            continue;
        }
        let u = blocker[c];
        marks.begin();
        for w in g.neighbors(u) {
            if let Some(cw) = f.get(w) {
                marks.insert(cw);
            }
        }
        if let Some(target) = (0..limit).find(|&t| t != c && !marks.contains(t)) {
            f.set(u, target as u32);
            f.set(v, c as u32);
            return true;
        }
    }
    false
}

/// DSatur: repeatedly colors the uncolored vertex with the most distinct
/// neighbor colors (ties: most uncolored neighbors, then lower id) with its
/// smallest free color. Lazy binary heap, `O((n + m) log n)`.
pub fn dsatur<G: GraphView>(g: &G) -> Coloring {
    let cap = g.capacity();
    let mut f = Coloring::empty(cap);
    // neighbor_colors[v]: sorted distinct colors around v
    let mut neighbor_colors: Vec<Vec<u32>> = vec![Vec::new(); cap];
    let mut uncolored_deg: Vec<usize> = (0..cap)
        .map(|v| if g.is_alive(v) { g.degree(v) } else { 0 })
        .collect();
    let mut heap: BinaryHeap<(usize, usize, Reverse<usize>)> = g
        .vertices()
        .map(|v| (0, uncolored_deg[v], Reverse(v)))
        .collect();
    let mut marks = ColorMarks::new();

    while let Some((sat, deg, Reverse(v))) = heap.pop() {
        if f.get(v).is_some() || sat != neighbor_colors[v].len() || deg != uncolored_deg[v] {
            continue;
        }
        marks.begin();
        for &c in &neighbor_colors[v] {
            marks.insert(c);
        }
        let c = marks.smallest_free() as u32;
        f.set(v, c);
        for u in g.neighbors(v) {
            if f.get(u).is_some() {
                continue;
            }
            uncolored_deg[u] -= 1;
            let list = &mut neighbor_colors[u];
            if let Err(pos) = list.binary_search(&c) {
                list.insert(pos, c);
            }
            heap.push((list.len(), uncolored_deg[u], Reverse(u)));
        }
    }
    debug_assert!(f.is_proper_total(g));
    f
}

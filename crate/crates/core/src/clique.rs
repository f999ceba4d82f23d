//! Clique-based lower bounds: a fast multi-restart greedy search, an exact
//! branch-and-bound solver for small graphs, and the test-set refinement
//! loop that feeds the exact solver growing dense regions of the working
//! graph.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::BitSet;
use crate::clock::Deadline;
use crate::graph::{induced_subgraph, Graph, GraphView};
use crate::kcore::core_decompose;

/// Default cap on the test-set size handed to the exact solver.
pub const DEFAULT_SIZE_UPPER: usize = 1000;

/// Branch nodes explored between two clock reads.
const NODES_PER_CLOCK_CHECK: u64 = 1024;

/// A set of pairwise adjacent vertices; any clique size is a lower bound on
/// the chromatic number of every graph containing it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Clique {
    vertices: Vec<usize>,
}

impl Clique {
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        Clique { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sorted member ids.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_clique_in<G: GraphView>(&self, g: &G) -> bool {
        self.vertices.iter().all(|&v| g.is_alive(v))
            && self.vertices.iter().enumerate().all(|(i, &u)| {
                self.vertices[i + 1..].iter().all(|&v| g.has_edge(u, v))
            })
    }
}

/// Reusable buffers for the greedy clique construction.
struct GreedyScratch {
    in_cand: Vec<bool>,
    inner: Vec<usize>,
    stamp: Vec<u32>,
    epoch: u32,
}

impl GreedyScratch {
    fn new(cap: usize) -> Self {
        GreedyScratch {
            in_cand: vec![false; cap],
            inner: vec![0; cap],
            stamp: vec![0; cap],
            epoch: 0,
        }
    }

    fn next_epoch(&mut self) -> u32 {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.iter_mut().for_each(|s| *s = 0);
            self.epoch = 1;
        }
        self.epoch
    }
}

/// Grows a clique from `start`, always adding the candidate with the most
/// neighbors among the remaining candidates (ties to the lowest id).
fn greedy_clique_from<G: GraphView>(g: &G, start: usize, s: &mut GreedyScratch) -> Vec<usize> {
    let mut clique = vec![start];
    let mut cand: Vec<usize> = g.neighbors(start).collect();
    for &v in &cand {
        s.in_cand[v] = true;
    }
    for &v in &cand {
        s.inner[v] = g.neighbors(v).filter(|&u| s.in_cand[u]).count();
    }

    let mut removed = Vec::new();
    while !cand.is_empty() {
        let mut pick = cand[0];
        for &v in &cand[1..] {
            if s.inner[v] > s.inner[pick] || (s.inner[v] == s.inner[pick] && v < pick) {
                pick = v;
            }
        }
        clique.push(pick);

        let epoch = s.next_epoch();
        for u in g.neighbors(pick) {
            s.stamp[u] = epoch;
        }
        removed.clear();
        for &v in &cand {
            if s.stamp[v] != epoch {
                removed.push(v);
                s.in_cand[v] = false;
            }
        }
        for &r in &removed {
            for w in g.neighbors(r) {
                if s.in_cand[w] {
                    s.inner[w] -= 1;
                }
            }
        }
        cand.retain(|&v| s.in_cand[v]);
    }
    clique
}

/// Multi-restart greedy clique search on the alive subgraph.
///
/// Restarts begin from vertices of the top-degree decile, visited in a
/// seeded random order. At least one restart always runs; further ones stop
/// when the deadline expires, the pool is exhausted, or the clique reaches
/// the trivial `max degree + 1` ceiling.
pub fn find_clique_heuristic<G: GraphView, R: Rng + ?Sized>(
    g: &G,
    rng: &mut R,
    deadline: &Deadline<'_>,
) -> Clique {
    let mut by_degree: Vec<usize> = g.vertices().collect();
    if by_degree.is_empty() {
        return Clique::default();
    }
    by_degree.sort_unstable_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let ceiling = g.degree(by_degree[0]) + 1;
    let pool_len = by_degree.len().div_ceil(10).max(1);
    let mut pool = by_degree[..pool_len].to_vec();
    pool.shuffle(rng);

    let mut scratch = GreedyScratch::new(g.capacity());
    let mut best: Vec<usize> = Vec::new();
    for (i, &start) in pool.iter().enumerate() {
        if i > 0 && deadline.expired() {
            break;
        }
        let c = greedy_clique_from(g, start, &mut scratch);
        if c.len() > best.len() {
            best = c;
            if best.len() >= ceiling {
                break;
            }
        }
    }
    let clique = Clique::new(best);
    debug_assert!(clique.is_clique_in(g));
    clique
}

/// Outcome of [`max_clique_exact`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSearch {
    pub clique: Clique,
    /// The search space was exhausted: no clique larger than
    /// `max(lower, clique.len())` exists.
    pub complete: bool,
    pub nodes: u64,
}

struct BranchAndBound<'a, 'c> {
    adj: Vec<BitSet>,
    deadline: &'a Deadline<'c>,
    floor: usize,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    aborted: bool,
}

impl BranchAndBound<'_, '_> {
    fn bound(&self) -> usize {
        self.floor.max(self.best.len())
    }

    /// Greedy sequential coloring of `p` in bit order. Returns vertices grouped
    /// by color class together with their (1-based) color.
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(p.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut uncolored = p.clone();
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.difference_with(&self.adj[v]);
                uncolored.remove(v);
                order.push(v);
                colors.push(k);
            }
        }
        (order, colors)
    }

    fn expand(&mut self, mut p: BitSet) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(NODES_PER_CLOCK_CHECK) && self.deadline.expired() {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let (order, colors) = self.color_sort(&p);
        for i in (0..order.len()).rev() {
            if self.aborted || self.current.len() + colors[i] <= self.bound() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

/// Exact maximum clique by bitset branch-and-bound with greedy-coloring
/// bounds. Vertices are branched in reverse degeneracy order. `lower` is a
/// clique size already known to exist; only strictly larger cliques are
/// searched for, so a complete search that returns a clique no larger than
/// `lower` proves `ω(g) = lower`.
pub fn max_clique_exact(g: &Graph, lower: usize, deadline: &Deadline<'_>) -> CliqueSearch {
    let n = g.n();
    if n == 0 {
        return CliqueSearch {
            clique: Clique::default(),
            complete: true,
            nodes: 0,
        };
    }
    let peel = core_decompose(g).peel_order;
    // bit i <-> vertex order[i]; highest cores get the lowest bits
    let order: Vec<usize> = peel.into_iter().rev().collect();
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let adj: Vec<BitSet> = order
        .iter()
        .map(|&v| {
            let mut b = BitSet::new(n);
            for &u in g.adjacency(v) {
                b.insert(rank[u]);
            }
            b
        })
        .collect();

    // seed incumbent: greedy in bit order
    let mut seed: Vec<usize> = Vec::new();
    for (i, row) in adj.iter().enumerate() {
        if seed.iter().all(|&j| row.contains(j)) {
            seed.push(i);
        }
    }

    let mut bb = BranchAndBound {
        adj,
        deadline,
        floor: lower,
        best: seed,
        current: Vec::new(),
        nodes: 0,
        aborted: false,
    };
    bb.expand(BitSet::full(n));

    let clique = Clique::new(bb.best.iter().map(|&i| order[i]).collect());
    debug_assert!(clique.is_clique_in(g));
    CliqueSearch {
        clique,
        complete: !bb.aborted,
        nodes: bb.nodes,
    }
}

/// Vertices collected around a maximum-degree seed for the exact solver.
#[derive(Debug, Clone)]
pub struct TestSet {
    members: Vec<usize>,
    in_set: Vec<bool>,
    /// Per vertex: alive neighbors not yet in the set.
    outside: Vec<usize>,
    frontier: Vec<usize>,
    in_frontier: Vec<bool>,
    pub size_upper: usize,
}

impl TestSet {
    /// Starts from the closed neighborhood of a maximum-degree vertex (lowest
    /// id among ties). Returns `None` on an empty graph.
    pub fn seed<G: GraphView>(g: &G, size_upper: usize) -> Option<Self> {
        let u = g
            .vertices()
            .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))?;
        let cap = g.capacity();
        let mut t = TestSet {
            members: Vec::new(),
            in_set: vec![false; cap],
            outside: (0..cap).map(|v| if g.is_alive(v) { g.degree(v) } else { 0 }).collect(),
            frontier: Vec::new(),
            in_frontier: vec![false; cap],
            size_upper,
        };
        t.add_closed_neighborhood(g, u);
        Some(t)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.in_set[v]
    }

    fn insert<G: GraphView>(&mut self, g: &G, v: usize) {
        if self.in_set[v] {
            return;
        }
        self.in_set[v] = true;
        self.members.push(v);
        for x in g.neighbors(v) {
            self.outside[x] -= 1;
            if !self.in_set[x] && !self.in_frontier[x] {
                self.in_frontier[x] = true;
                self.frontier.push(x);
            }
        }
    }

    fn add_closed_neighborhood<G: GraphView>(&mut self, g: &G, v: usize) {
        self.insert(g, v);
        for u in g.neighbors(v) {
            self.insert(g, u);
        }
    }

    /// The outside vertex touching the set with the most neighbors still
    /// outside it (ties to the lowest id).
    pub fn next_growth_vertex(&mut self) -> Option<usize> {
        let in_set = &self.in_set;
        self.frontier.retain(|&v| !in_set[v]);
        let outside = &self.outside;
        self.frontier
            .iter()
            .copied()
            .max_by(|&a, &b| outside[a].cmp(&outside[b]).then(b.cmp(&a)))
    }

    /// Adds `N[v]` for the next growth vertex. Returns false when nothing
    /// outside the set touches it.
    pub fn grow<G: GraphView>(&mut self, g: &G) -> bool {
        match self.next_growth_vertex() {
            Some(v) => {
                self.add_closed_neighborhood(g, v);
                true
            }
            None => false,
        }
    }
}

/// Tries to beat `lb` with an exact clique on growing test-set subgraphs.
/// Returns the improving clique, if any, in working-graph ids.
pub fn exact_lb_clique<G: GraphView>(
    g: &G,
    lb: usize,
    deadline: &Deadline<'_>,
    size_upper: usize,
) -> Option<Clique> {
    let mut set = TestSet::seed(g, size_upper)?;
    let mut first = true;
    while !deadline.expired() {
        let grew = set.grow(g);
        if !grew && !first {
            break;
        }
        first = false;
        if set.len() >= set.size_upper {
            return None;
        }
        let members = set.members().to_vec();
        let sub = induced_subgraph(g, &members);
        let found = max_clique_exact(&sub, lb, deadline);
        if found.clique.len() > lb {
            let clique = Clique::new(found.clique.vertices().iter().map(|&i| members[i]).collect());
            debug_assert!(clique.is_clique_in(g));
            return Some(clique);
        }
        if !grew {
            break;
        }
    }
    None
}

/// Lower-bound refinement: never returns less than `lb`.
pub fn exact_lb<G: GraphView>(g: &G, lb: usize, deadline: &Deadline<'_>, size_upper: usize) -> usize {
    exact_lb_clique(g, lb, deadline, size_upper).map_or(lb, |c| c.len())
}

//! Compressed undirected graphs and the mutable working-graph view.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Read access shared by the immutable [`Graph`] and the shrinking
/// [`WorkingGraph`]. Vertex ids are always ids of the underlying base graph;
/// dead vertices are simply skipped.
pub trait GraphView {
    /// Upper bound on vertex ids (`n` of the base graph).
    fn capacity(&self) -> usize;

    fn is_alive(&self, v: usize) -> bool;

    /// Number of alive vertices.
    fn order(&self) -> usize;

    /// Degree of `v` counting only alive neighbors.
    fn degree(&self, v: usize) -> usize;

    /// Full adjacency of `v` in the base graph; callers filter with
    /// [`GraphView::is_alive`] or use [`GraphView::neighbors`].
    fn base_neighbors(&self, v: usize) -> &[usize];

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.base_neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.is_alive(u))
    }

    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.capacity()).filter(move |&v| self.is_alive(v))
    }

    fn is_empty(&self) -> bool {
        self.order() == 0
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.is_alive(u) && self.is_alive(v) && self.base_neighbors(u).binary_search(&v).is_ok()
    }
}

/// Counts of input pairs dropped while building a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub duplicates: usize,
    pub self_loops: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: usize, n: usize },
    LabelCount { labels: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph of order {n}")
            }
            GraphError::LabelCount { labels, n } => {
                write!(f, "{labels} labels given for graph of order {n}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple undirected graph in CSR form.
///
/// Adjacency lists are strictly increasing, symmetric and loop-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    adjacency: Vec<usize>,
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from undirected pairs. Duplicate pairs
    /// (in either orientation) and self-loops are dropped and counted.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<(Graph, BuildStats), GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut stats = BuildStats::default();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            pairs.push(if u < v { (u, v) } else { (v, u) });
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        stats.duplicates = before - pairs.len();

        let mut degree = vec![0usize; n];
        for &(u, v) in &pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![0usize; 2 * pairs.len()];
        // pairs are sorted by (u, v), so pushing v into u's list keeps it
        // sorted; the reverse direction is sorted after the loop.
        for &(u, v) in &pairs {
            adjacency[fill[u]] = v;
            fill[u] += 1;
            adjacency[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            adjacency[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok((
            Graph {
                offsets,
                adjacency,
                labels: None,
            },
            stats,
        ))
    }

    /// Attaches external labels (one per vertex) used when emitting results.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                labels: labels.len(),
                n: self.n(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            offsets: vec![0; n + 1],
            adjacency: Vec::new(),
            labels: None,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).unwrap().0
    }

    pub fn cycle(n: usize) -> Graph {
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Graph::from_edges(n, edges).unwrap().0
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.adjacency.len() / 2
    }

    pub fn adjacency(&self, v: usize) -> &[usize] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    /// External label of `v`: the stored label, or the 1-based DIMACS id.
    pub fn label(&self, v: usize) -> u64 {
        match &self.labels {
            Some(labels) => labels[v],
            None => v as u64 + 1,
        }
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// Undirected edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`, renumbered densely in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        induced_subgraph(self, vertices)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.adjacency(v).len()).max().unwrap_or(0)
    }
}

impl GraphView for Graph {
    fn capacity(&self) -> usize {
        self.n()
    }

    fn is_alive(&self, _v: usize) -> bool {
        true
    }

    fn order(&self) -> usize {
        self.n()
    }

    fn degree(&self, v: usize) -> usize {
        self.adjacency(v).len()
    }

    fn base_neighbors(&self, v: usize) -> &[usize] {
        self.adjacency(v)
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency(v).iter().copied()
    }

    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        0..self.n()
    }
}

/// Subgraph of a view induced by `vertices` (all alive), renumbered densely
/// in the given order.
pub fn induced_subgraph<G: GraphView>(g: &G, vertices: &[usize]) -> Graph {
    let mut index = vec![usize::MAX; g.capacity()];
    for (i, &v) in vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut edges = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        for u in g.neighbors(v) {
            let j = index[u];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(vertices.len(), edges).unwrap().0
}

/// A graph with some vertices deleted. Degrees are maintained incrementally.
#[derive(Debug, Clone)]
pub struct WorkingGraph<'g> {
    base: &'g Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    order: usize,
}

impl<'g> WorkingGraph<'g> {
    pub fn new(base: &'g Graph) -> Self {
        WorkingGraph {
            base,
            alive: vec![true; base.n()],
            degree: (0..base.n()).map(|v| base.adjacency(v).len()).collect(),
            order: base.n(),
        }
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    /// Deletes `vertices` and decrements the degrees of their alive
    /// neighbors.
    ///
    /// # Panics
    /// If a vertex is already dead or listed twice.
    pub fn remove_vertices(&mut self, vertices: &[usize]) {
        for &v in vertices {
            assert!(self.alive[v], "vertex {v} removed while not alive");
            self.alive[v] = false;
        }
        self.order -= vertices.len();
        for &v in vertices {
            for &u in self.base.adjacency(v) {
                if self.alive[u] {
                    self.degree[u] -= 1;
                }
            }
        }
    }

    pub fn alive_mask(&self) -> &[bool] {
        &self.alive
    }

    /// Recomputes every alive degree from scratch; used to cross-check the
    /// incremental bookkeeping.
    pub fn recount_degree(&self, v: usize) -> usize {
        self.base
            .adjacency(v)
            .iter()
            .filter(|&&u| self.alive[u])
            .count()
    }
}

impl GraphView for WorkingGraph<'_> {
    fn capacity(&self) -> usize {
        self.base.n()
    }

    fn is_alive(&self, v: usize) -> bool {
        self.alive[v]
    }

    fn order(&self) -> usize {
        self.order
    }

    fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    fn base_neighbors(&self, v: usize) -> &[usize] {
        self.base.adjacency(v)
    }
}

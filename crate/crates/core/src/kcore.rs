//! Core decomposition by bucket peeling (Batagelj–Zaversnik), linear in
//! `n + m`.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::GraphView;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    /// Shell number per vertex id; entries for dead vertices are 0.
    pub shell: Vec<usize>,
    /// Alive vertices in peeling order, shells nondecreasing.
    pub peel_order: Vec<usize>,
}

impl CoreDecomposition {
    pub fn degeneracy(&self) -> usize {
        self.peel_order
            .iter()
            .map(|&v| self.shell[v])
            .max()
            .unwrap_or(0)
    }

    /// Start index of every shell layer in `peel_order`, plus a final
    /// sentinel equal to `peel_order.len()`.
    pub fn layer_boundaries(&self) -> Vec<usize> {
        let mut bounds = Vec::new();
        let mut prev = None;
        for (i, &v) in self.peel_order.iter().enumerate() {
            if prev != Some(self.shell[v]) {
                bounds.push(i);
                prev = Some(self.shell[v]);
            }
        }
        bounds.push(self.peel_order.len());
        bounds
    }
}

pub fn core_decompose<G: GraphView>(g: &G) -> CoreDecomposition {
    let cap = g.capacity();
    let mut degree = vec![0usize; cap];
    let mut max_deg = 0;
    for v in g.vertices() {
        degree[v] = g.degree(v);
        max_deg = max_deg.max(degree[v]);
    }

    // bin[d] = first position of degree-d vertices in `order`
    let mut bin = vec![0usize; max_deg + 2];
    for v in g.vertices() {
        bin[degree[v] + 1] += 1;
    }
    for d in 1..bin.len() {
        bin[d] += bin[d - 1];
    }
    let mut order = vec![0usize; g.order()];
    let mut pos = vec![usize::MAX; cap];
    {
        let mut next = bin.clone();
        for v in g.vertices() {
            pos[v] = next[degree[v]];
            order[pos[v]] = v;
            next[degree[v]] += 1;
        }
    }

    for i in 0..order.len() {
        let v = order[i];
        for u in g.neighbors(v) {
            if degree[u] > degree[v] {
                // swap u with the first vertex of its bin, then shrink the bin
                let du = degree[u];
                let pu = pos[u];
                let pw = bin[du];
                let w = order[pw];
                if u != w {
                    order.swap(pu, pw);
                    pos[u] = pw;
                    pos[w] = pu;
                }
                bin[du] += 1;
                degree[u] -= 1;
            }
        }
    }

    let mut shell = vec![0usize; cap];
    for &v in &order {
        shell[v] = degree[v];
    }
    CoreDecomposition {
        shell,
        peel_order: order,
    }
}

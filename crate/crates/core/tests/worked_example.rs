//! The 13-vertex worked example. Vertex `vi` is id `i - 1`.

use std::time::Duration;

use hycolor_core::clique::exact_lb;
use hycolor_core::oracle::{brute_force_chromatic, verify_coloring};
use hycolor_core::{
    core_decompose, extend_coloring, find_clique_heuristic, max_clique_exact, redu_rule, solve,
    Coloring, Deadline, DeletionStack, Graph, SolverConfig, VirtualClock, WorkingGraph,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const EDGES: [(usize, usize); 33] = [
    (1, 2), (1, 3), (1, 7), (3, 9), (3, 10), (6, 4), (6, 5), (6, 12), (4, 5), (4, 12), (4, 13),
    (5, 12), (5, 13), (12, 13), (12, 9), (12, 10), (12, 2), (12, 7), (12, 11), (13, 9),
    (13, 10), (13, 2), (13, 7), (13, 11), (13, 8), (9, 10), (10, 2), (2, 7), (7, 11), (11, 9),
    (8, 9), (8, 2), (8, 10),
];

fn example13() -> Graph {
    Graph::from_edges(13, EDGES.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap().0
}

fn ids(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v - 1).collect()
}

fn far(clock: &VirtualClock) -> Deadline<'_> {
    Deadline::after(clock, Duration::from_secs(3600))
}

#[test]
fn structure() {
    let g = example13();
    assert_eq!(g.m(), 33);
    let degrees: Vec<usize> = (0..13).map(|v| g.adjacency(v).len()).collect();
    assert_eq!(degrees, [3, 6, 3, 4, 4, 3, 5, 4, 6, 6, 4, 9, 9]);
    assert_eq!(brute_force_chromatic(&g), Ok(5));
    let shells = core_decompose(&g).shell;
    assert_eq!(shells, [3, 4, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4]);
}

#[test]
fn clique_number_is_four() {
    let g = example13();
    let clock = VirtualClock::default();
    let exact = max_clique_exact(&g, 0, &far(&clock));
    assert!(exact.complete);
    assert_eq!(exact.clique.len(), 4);

    let heur = find_clique_heuristic(&g, &mut ChaCha8Rng::seed_from_u64(1), &far(&clock));
    assert_eq!(heur.len(), 4);
    assert!(heur.is_clique_in(&g));

    assert_eq!(exact_lb(&WorkingGraph::new(&g), 3, &far(&clock), 1000), 4);
}

#[test]
fn reduction_rounds_at_four() {
    let g = example13();
    let mut w = WorkingGraph::new(&g);
    let r = redu_rule(&mut w, 4);
    assert_eq!(r.rounds.len(), 2);
    assert_eq!(r.round(0), ids(&[1, 3, 6]));
    assert_eq!(r.round(1), ids(&[4, 5]));
    let left: Vec<usize> = hycolor_core::GraphView::vertices(&w).collect();
    assert_eq!(left, ids(&[2, 7, 8, 9, 10, 11, 12, 13]));
}

#[test]
fn lift_back_of_five_coloring() {
    let g = example13();
    let mut w = WorkingGraph::new(&g);
    let r = redu_rule(&mut w, 4);
    let mut stack = DeletionStack::new();
    stack.push_all(&r.removed, 4);

    // 1-based colors on the reduced graph
    let mut partial = Coloring::empty(13);
    for (v, c) in [(8, 1), (12, 1), (9, 2), (2, 2), (10, 3), (7, 3), (11, 4), (13, 5)] {
        partial.set(v - 1, c - 1);
    }
    let f = extend_coloring(&g, &partial, &stack).unwrap();
    verify_coloring(&g, &f).unwrap();
    assert_eq!(f.num_colors(), 5);
    for (v, c) in [(5, 2), (4, 3), (6, 4), (3, 1), (1, 4)] {
        assert_eq!(f.get(v - 1), Some(c - 1), "v{v}");
    }
}

#[test]
fn solver_finds_five() {
    let g = example13();
    for seed in 1..=10 {
        let cfg = SolverConfig {
            cutoff: Duration::from_secs(2),
            seed,
            ..SolverConfig::default()
        };
        let r = solve(&g, &cfg, &VirtualClock::default()).unwrap();
        verify_coloring(&g, &r.coloring).unwrap();
        assert_eq!(r.num_colors, 5);
        assert_eq!(r.lb_final, 4);
        assert!(!r.optimal);
    }
}

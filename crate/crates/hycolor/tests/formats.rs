use hycolor::format::{parse_dimacs, parse_edgelist, read_solution, write_dimacs, write_solution};
use hycolor::instances;
use hycolor_core::oracle::verify_coloring;
use hycolor_core::{dsatur, Graph};
use proptest::prelude::*;

fn arb_edges() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..30).prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..80)))
}

proptest! {
    #[test]
    fn dimacs_round_trip((n, edges) in arb_edges()) {
        let (g, _) = Graph::from_edges(n, edges).unwrap();
        let mut buf = Vec::new();
        write_dimacs(&g, &mut buf).unwrap();
        let p = parse_dimacs(buf.as_slice()).unwrap();
        prop_assert_eq!(p.graph.n(), g.n());
        prop_assert_eq!(p.graph.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(p.declared_edges, Some(g.m()));
    }

    #[test]
    fn edgelist_counts_unique_pairs(pairs in prop::collection::vec((0u64..50, 0u64..50), 1..100)) {
        let text: String = pairs.iter().map(|(u, v)| format!("{} {}\n", u * 7, v * 7)).collect();
        let p = parse_edgelist(text.as_bytes()).unwrap();
        let mut unique: Vec<(u64, u64)> = pairs
            .iter()
            .filter(|(u, v)| u != v)
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        unique.sort_unstable();
        unique.dedup();
        let mut ids: Vec<u64> = pairs.iter().flat_map(|&(u, v)| [u * 7, v * 7]).collect();
        ids.sort_unstable();
        ids.dedup();
        prop_assert_eq!(p.graph.m(), unique.len());
        prop_assert_eq!(p.graph.labels().unwrap(), ids.as_slice());
    }

    #[test]
    fn solution_round_trip((n, edges) in arb_edges()) {
        let (g, _) = Graph::from_edges(n, edges).unwrap();
        let c = dsatur(&g);
        let mut buf = Vec::new();
        write_solution(&g, &c, &mut buf).unwrap();
        let back = read_solution(&g, buf.as_slice()).unwrap();
        prop_assert!(verify_coloring(&g, &back).is_ok());
        prop_assert_eq!(back, c);
    }
}

#[test]
fn worked_example_as_dimacs() {
    let mut buf = Vec::new();
    write_dimacs(&instances::example13(), &mut buf).unwrap();
    let g = parse_dimacs(buf.as_slice()).unwrap().graph;
    assert_eq!(g.n(), 13);
    let degrees: Vec<usize> = (0..13).map(|v| g.adjacency(v).len()).collect();
    assert_eq!(degrees, [3, 6, 3, 4, 4, 3, 5, 4, 6, 6, 4, 9, 9]);
}

#[test]
fn karate_counts() {
    let p = parse_edgelist(instances::KARATE_EDGELIST.as_bytes()).unwrap();
    assert_eq!((p.graph.n(), p.graph.m()), (34, 78));
    assert_eq!(p.stats.duplicates + p.stats.self_loops, 0);
}

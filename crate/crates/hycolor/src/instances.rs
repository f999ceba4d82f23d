//! Small built-in instances: generated DIMACS families and a few classic
//! graphs that are short enough to ship.

use hycolor_core::Graph;

use crate::format::parse_edgelist;

/// `hamming<bits>-<distance>`: all `bits`-bit words, adjacent when they
/// differ in at least `distance` positions.
pub fn hamming(bits: u32, distance: u32) -> Graph {
    assert!(bits < 32, "hamming: too many bits");
    let n = 1usize << bits;
    let edges = (0..n).flat_map(|u| {
        (u + 1..n)
            .filter(move |&v| (u ^ v).count_ones() >= distance)
            .map(move |v| (u, v))
    });
    Graph::from_edges(n, edges).unwrap().0
}

/// Zachary's karate club, 1-based ids as distributed.
pub const KARATE_EDGELIST: &str = "\
1 2\n1 3\n1 4\n1 5\n1 6\n1 7\n1 8\n1 9\n1 11\n1 12\n1 13\n1 14\n1 18\n1 20\n1 22\n1 32\n\
2 3\n2 4\n2 8\n2 14\n2 18\n2 20\n2 22\n2 31\n3 4\n3 8\n3 9\n3 10\n3 14\n3 28\n3 29\n3 33\n\
4 8\n4 13\n4 14\n5 7\n5 11\n6 7\n6 11\n6 17\n7 17\n9 31\n9 33\n9 34\n10 34\n14 34\n15 33\n\
15 34\n16 33\n16 34\n19 33\n19 34\n20 34\n21 33\n21 34\n23 33\n23 34\n24 26\n24 28\n24 30\n\
24 33\n24 34\n25 26\n25 28\n25 32\n26 32\n27 30\n27 34\n28 34\n29 32\n29 34\n30 33\n30 34\n\
31 33\n31 34\n32 33\n32 34\n33 34\n";

pub fn karate() -> Graph {
    parse_edgelist(KARATE_EDGELIST.as_bytes()).unwrap().graph
}

/// 13-vertex reduction example; `vi` has label `i`.
pub const EXAMPLE13_EDGES: [(usize, usize); 33] = [
    (1, 2), (1, 3), (1, 7), (3, 9), (3, 10), (6, 4), (6, 5), (6, 12), (4, 5), (4, 12), (4, 13),
    (5, 12), (5, 13), (12, 13), (12, 9), (12, 10), (12, 2), (12, 7), (12, 11), (13, 9),
    (13, 10), (13, 2), (13, 7), (13, 11), (13, 8), (9, 10), (10, 2), (2, 7), (7, 11), (11, 9),
    (8, 9), (8, 2), (8, 10),
];

pub fn example13() -> Graph {
    Graph::from_edges(13, EXAMPLE13_EDGES.iter().map(|&(u, v)| (u - 1, v - 1)))
        .unwrap()
        .0
}

pub fn petersen() -> Graph {
    let edges = (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    Graph::from_edges(10, edges).unwrap().0
}

/// Built-in instance by name: `hamming<b>-<d>`, `karate`, `example13`,
/// `petersen`, `K<n>`, `C<n>`.
pub fn builtin(name: &str) -> Option<Graph> {
    match name {
        "karate" => return Some(karate()),
        "example13" => return Some(example13()),
        "petersen" => return Some(petersen()),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix("hamming") {
        let (b, d) = rest.split_once('-')?;
        let (b, d) = (b.parse().ok()?, d.parse().ok()?);
        return (b < 16).then(|| hamming(b, d));
    }
    let (kind, n) = name.split_at_checked(1)?;
    let n: usize = n.parse().ok()?;
    match kind {
        "K" => Some(Graph::complete(n)),
        "C" if n >= 3 => Some(Graph::cycle(n)),
        _ => None,
    }
}

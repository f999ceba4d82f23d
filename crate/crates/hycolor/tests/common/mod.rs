#![allow(dead_code)]

use std::path::{Path, PathBuf};

use hycolor_core::Graph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// G(n, p) with a caller-owned generator.
pub fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap().0
}

/// Shell numbers by repeated deletion of every vertex with degree < k.
pub fn naive_shells(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut shell = vec![0; n];
    let mut alive = vec![true; n];
    for k in 1..=n {
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && g.adjacency(v).iter().filter(|&&u| alive[u]).count() < k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
            }
        }
        if !alive.iter().any(|&a| a) {
            break;
        }
        for v in (0..n).filter(|&v| alive[v]) {
            shell[v] = k;
        }
    }
    shell
}

/// Directory of externally obtained benchmark files, if configured.
pub fn corpus_dir() -> Option<PathBuf> {
    std::env::var_os("HYCOLOR_CORPUS").map(PathBuf::from).filter(|p| p.is_dir())
}

pub fn corpus_required() -> bool {
    std::env::var("HYCOLOR_REQUIRE_CORPUS").is_ok_and(|v| v == "1")
}

/// First file in `dir` whose stem matches one of `names`.
pub fn find_instance(dir: &Path, names: &[&str]) -> Option<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .ok()?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    names.iter().find_map(|name| {
        files
            .iter()
            .find(|p| p.file_stem().and_then(|s| s.to_str()) == Some(name))
            .cloned()
    })
}

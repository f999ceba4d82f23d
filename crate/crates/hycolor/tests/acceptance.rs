//! Exit criteria. Each test prints one PASS/FAIL line straight to stderr so
//! the verdicts show up even when output capture is on.

mod common;

use std::io::Write;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use hycolor::format::{read_graph, Format};
use hycolor::instances;
use hycolor_core::mdd::MddSorter;
use hycolor_core::oracle::{brute_force_chromatic, verify_coloring};
use hycolor_core::{
    core_decompose, dsatur, extend_coloring, find_clique_heuristic, max_clique_exact, mdd_color,
    redu_rule, solve, Coloring, Deadline, DeletionStack, Graph, GraphView, Lambda, MddOrder,
    SolverConfig, VirtualClock, WorkingGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corpus_dir, corpus_required, find_instance, gnp, naive_shells};

fn verdict(criterion: u32, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    let _ = writeln!(std::io::stderr().lock(), "[criterion {criterion}] {tag}: {detail}");
}

fn notice(criterion: u32, tag: &str, detail: &str) {
    let _ = writeln!(std::io::stderr().lock(), "[criterion {criterion}] {tag}: {detail}");
}

fn short_run(seed: u64) -> SolverConfig {
    SolverConfig {
        cutoff: Duration::from_millis(500),
        seed,
        ..SolverConfig::default()
    }
}

#[test]
fn criterion_1_every_result_is_proper() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let densities = [0.05, 0.2, 0.5, 0.9];
    let mut failures = Vec::new();
    for i in 0..500 {
        let n = rng.gen_range(1..=60);
        let p = densities[i % densities.len()];
        let g = gnp(&mut rng, n, p);
        for seed in 1..=3 {
            let r = solve(&g, &short_run(seed), &VirtualClock::default()).unwrap();
            if let Err(v) = verify_coloring(&g, &r.coloring) {
                failures.push(format!("graph {i} seed {seed}: {v}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(120);
    verdict(
        1,
        pass,
        &format!("1500 runs, {} improper, {:.1}s", failures.len(), elapsed.as_secs_f64()),
    );
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
}

#[test]
fn criterion_2_bounds_sandwich_chromatic_number() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let mut failures = Vec::new();
    for i in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.1..0.9);
        let g = gnp(&mut rng, n, p);
        let chi = brute_force_chromatic(&g).unwrap();
        let r = solve(&g, &short_run(i as u64 % 10 + 1), &VirtualClock::default()).unwrap();
        let sandwiched = r.lb_final <= chi && chi <= r.num_colors;
        let sound = !r.optimal || r.num_colors == chi;
        if !sandwiched || !sound {
            failures.push(format!(
                "graph {i}: lb={} chi={chi} k={} optimal={}",
                r.lb_final, r.num_colors, r.optimal
            ));
        }
    }
    let elapsed = start.elapsed();
    let pass = failures.is_empty() && elapsed < Duration::from_secs(300);
    verdict(
        2,
        pass,
        &format!("300 graphs (n <= 14), {} violations, {:.1}s", failures.len(), elapsed.as_secs_f64()),
    );
    assert!(failures.is_empty(), "{failures:?}");
    assert!(elapsed < Duration::from_secs(300));
}

#[test]
fn criterion_3_lift_back_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut checks = 0;
    let mut failures = Vec::new();
    for i in 0..200 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = gnp(&mut rng, n, p);
        let chi = brute_force_chromatic(&g).unwrap();
        for ell in 0..=chi {
            let mut w = WorkingGraph::new(&g);
            let removed = redu_rule(&mut w, ell).removed;
            let mut stack = DeletionStack::new();
            stack.push_all(&removed, ell);
            let order = MddOrder::build(&w, Lambda::DEFAULT, false);
            for partial in [dsatur(&w), mdd_color(&w, None, &order)] {
                checks += 1;
                let k = partial.num_colors();
                let ok = match extend_coloring(&g, &partial, &stack) {
                    Ok(f) => verify_coloring(&g, &f).is_ok() && f.num_colors() <= ell.max(k),
                    Err(_) => false,
                };
                if !ok {
                    failures.push(format!("graph {i} ell={ell} k={k}"));
                }
            }
        }
    }
    verdict(
        3,
        failures.is_empty(),
        &format!("200 graphs (n <= 12), {checks} lift-backs, {} over max(ell, k)", failures.len()),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

#[test]
fn criterion_4_worked_example() {
    let g = instances::example13();
    let clock = VirtualClock::default();
    let far = Deadline::after(&clock, Duration::from_secs(3600));
    let exact = max_clique_exact(&g, 0, &far).clique.len();
    let heuristic = find_clique_heuristic(&g, &mut ChaCha8Rng::seed_from_u64(1), &far).len();

    let mut w = WorkingGraph::new(&g);
    let r = redu_rule(&mut w, 4);
    let ids = |vs: &[usize]| vs.iter().map(|v| v - 1).collect::<Vec<_>>();
    let rounds_ok = r.rounds.len() == 2 && r.round(0) == ids(&[1, 3, 6]) && r.round(1) == ids(&[4, 5]);

    let mut stack = DeletionStack::new();
    stack.push_all(&r.removed, 4);
    let mut partial = Coloring::empty(13);
    for (v, c) in [(8, 1), (12, 1), (9, 2), (2, 2), (10, 3), (7, 3), (11, 4), (13, 5)] {
        partial.set(v - 1, c - 1);
    }
    let lifted = extend_coloring(&g, &partial, &stack).unwrap();
    let lift_ok = verify_coloring(&g, &lifted).is_ok() && lifted.num_colors() == 5;

    let pass = exact == 4 && heuristic == 4 && rounds_ok && lift_ok;
    verdict(
        4,
        pass,
        &format!(
            "clique exact={exact} heuristic={heuristic}, rounds {:?}, lifted to {} colors",
            (0..r.rounds.len()).map(|i| r.round(i).iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            lifted.num_colors()
        ),
    );
    assert!(pass);
}

struct Expected {
    name: &'static str,
    files: &'static [&'static str],
    min: usize,
    slack: usize,
    need_optimal: bool,
}

/// Seeds 1..=10 at a 60 s cutoff on the deterministic clock.
fn min_over_seeds(g: &Graph) -> (usize, bool) {
    let mut best = usize::MAX;
    let mut any_optimal = false;
    for seed in 1..=10 {
        let cfg = SolverConfig {
            seed,
            ..SolverConfig::default()
        };
        let r = solve(g, &cfg, &VirtualClock::default()).unwrap();
        assert!(verify_coloring(g, &r.coloring).is_ok());
        best = best.min(r.num_colors);
        any_optimal |= r.optimal;
    }
    (best, any_optimal)
}

#[test]
fn criterion_5_reported_values() {
    let start = Instant::now();
    let expected = [
        Expected { name: "hamming8-4", files: &[], min: 16, slack: 1, need_optimal: false },
        Expected { name: "MANN_a45", files: &["MANN_a45"], min: 4, slack: 1, need_optimal: false },
        Expected { name: "soc-karate", files: &[], min: 5, slack: 0, need_optimal: true },
        Expected { name: "ca-netscience", files: &["ca-netscience"], min: 9, slack: 0, need_optimal: true },
        Expected { name: "bio-celegans", files: &["bio-celegans"], min: 9, slack: 0, need_optimal: true },
    ];
    let corpus = corpus_dir();
    let mut all_pass = true;
    let mut missing = Vec::new();
    for e in &expected {
        let g = match e.name {
            "hamming8-4" => instances::hamming(8, 4),
            "soc-karate" => instances::karate(),
            _ => match corpus.as_deref().and_then(|d| find_instance(d, e.files)) {
                Some(path) => read_graph(&path, Format::Auto).unwrap().graph,
                None => {
                    notice(5, "NOT RUN", &format!("{}: instance file not available", e.name));
                    missing.push(e.name);
                    continue;
                }
            },
        };
        let (min, optimal) = min_over_seeds(&g);
        let pass = min <= e.min + e.slack && (!e.need_optimal || optimal);
        all_pass &= pass;
        verdict(
            5,
            pass,
            &format!(
                "{}: min {min} (optimal={optimal}), expected {}{}{}",
                e.name,
                e.min,
                if e.slack > 0 { format!(" +{}", e.slack) } else { String::new() },
                if e.need_optimal { " with optimal flag" } else { "" }
            ),
        );
    }
    let elapsed = start.elapsed();
    let in_time = elapsed <= Duration::from_secs(600);
    verdict(5, in_time, &format!("total {:.1}s (limit 600s)", elapsed.as_secs_f64()));
    assert!(all_pass && in_time, "criterion 5 failed");
    assert!(
        missing.is_empty() || !corpus_required(),
        "instances required but missing: {missing:?}"
    );
}

#[test]
fn criterion_6_large_sparse_instance() {
    let names = ["luxembourg_osm", "road-luxembourg-osm"];
    let Some(path) = corpus_dir().and_then(|d| find_instance(&d, &names)) else {
        notice(6, "SKIPPED", "luxembourg_osm not found (set HYCOLOR_CORPUS)");
        assert!(!corpus_required(), "luxembourg_osm required but missing");
        return;
    };
    let g = read_graph(&path, Format::Auto).unwrap().graph;
    let mut best = usize::MAX;
    let mut optimal = false;
    let mut slowest = Duration::ZERO;
    for seed in 1..=10 {
        let cfg = SolverConfig {
            seed,
            ..SolverConfig::default()
        };
        let clock = hycolor::WallClock::start();
        let r = solve(&g, &cfg, &clock).unwrap();
        slowest = slowest.max(hycolor_core::Clock::elapsed(&clock));
        assert!(verify_coloring(&g, &r.coloring).is_ok());
        best = best.min(r.num_colors);
        optimal |= r.optimal && r.num_colors == 3;
    }
    let pass = best == 3 && optimal && slowest <= Duration::from_secs(61);
    verdict(
        6,
        pass,
        &format!("n={} m={}: min {best}, optimal={optimal}, slowest run {:.1}s", g.n(), g.m(), slowest.as_secs_f64()),
    );
    assert!(pass);
}

#[test]
fn criterion_7_out_of_scope() {
    notice(
        7,
        "N/A",
        "full-corpus comparison, rank statistics and alpha sweep need competitor binaries; covered by 1-6",
    );
}

fn bench_csv(dir: &Path, manifest: &Path, jobs: u32, tag: &str) -> String {
    let out = dir.join(format!("{tag}.csv"));
    let status = Command::new(env!("CARGO_BIN_EXE_hycolor"))
        .args(["bench", "--seeds", "1..4", "--cutoff", "2", "--deterministic", "--jobs"])
        .arg(jobs.to_string())
        .arg("--instances")
        .arg(manifest)
        .arg("--out")
        .arg(&out)
        .output()
        .unwrap();
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    std::fs::read_to_string(out).unwrap()
}

/// Drops the `avg_time_to_best` column.
fn result_columns(csv: &str) -> Vec<String> {
    let header: Vec<&str> = csv.lines().next().unwrap().split(',').collect();
    let t = header.iter().position(|&h| h == "avg_time_to_best").unwrap();
    csv.lines()
        .map(|l| {
            let mut cols: Vec<&str> = l.split(',').collect();
            cols.remove(t);
            cols.join(",")
        })
        .collect()
}

#[test]
fn criterion_8_bench_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    let mut manifest = String::from("# generated\nbuiltin:K4\nbuiltin:C5\nbuiltin:petersen\nbuiltin:example13\nbuiltin:karate\n");
    for i in 0..6 {
        let g = gnp(&mut rng, 40 + 10 * i, 0.15);
        let path = dir.path().join(format!("random{i}.col"));
        hycolor::format::write_dimacs(&g, std::fs::File::create(&path).unwrap()).unwrap();
        manifest.push_str(&format!("random{i}.col\n"));
    }
    let manifest_path = dir.path().join("instances.txt");
    std::fs::write(&manifest_path, manifest).unwrap();

    let a = bench_csv(dir.path(), &manifest_path, 1, "a");
    let b = bench_csv(dir.path(), &manifest_path, 1, "b");
    let c = bench_csv(dir.path(), &manifest_path, 3, "c");
    let rows = a.lines().count() - 1;
    let pass = rows == 11 && result_columns(&a) == result_columns(&b) && result_columns(&a) == result_columns(&c);
    verdict(8, pass, &format!("{rows} instances x 4 seeds, repeated and --jobs 3 runs identical"));
    assert!(pass, "\n{a}\n{b}\n{c}");
}

#[test]
fn criterion_9_core_decomposition_and_mixed_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let mut core_mismatch = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=200);
        let p = rng.gen_range(0.0..(8.0 / n as f64).min(1.0));
        let g = gnp(&mut rng, n, p);
        if core_decompose(&g).shell != naive_shells(&g) {
            core_mismatch += 1;
        }
    }
    let mut conservation_breaks = 0;
    let mut rounds = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=100);
        let p = rng.gen_range(0.0..0.5);
        let g = gnp(&mut rng, n, p);
        let lambda = Lambda::from_tenths(rng.gen_range(0..=10)).unwrap();
        let mut sorter = MddSorter::new(&g, lambda);
        while sorter.next_round().is_some() {
            rounds += 1;
            let st = sorter.state();
            if g.vertices().any(|v| st.r_deg(v) + st.e_deg(v) != g.degree(v)) {
                conservation_breaks += 1;
            }
        }
    }
    let pass = core_mismatch == 0 && conservation_breaks == 0;
    verdict(
        9,
        pass,
        &format!("core mismatches {core_mismatch}/200, conservation breaks {conservation_breaks}/{rounds} rounds"),
    );
    assert!(pass);
}

//! Multi-seed benchmark runs over a set of instances.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use hycolor_core::oracle::verify_coloring;
use hycolor_core::{solve, Clock, Graph, SolverConfig, VirtualClock};

use crate::clock::WallClock;
use crate::format::{read_graph, Format};
use crate::instances::builtin;

pub const CSV_HEADER: &str = "instance,n,m,min,avg,optimal_any,avg_time_to_best,error";

/// File extensions picked up when a directory is given.
const INSTANCE_EXTENSIONS: [&str; 7] = ["col", "clq", "dimacs", "txt", "edges", "el", "mtx"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    File(PathBuf),
    Builtin(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub source: Source,
}

impl Instance {
    pub fn file(path: impl Into<PathBuf>) -> Instance {
        let path = path.into();
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
        Instance {
            name: sanitize(stem.as_deref().unwrap_or("instance")),
            source: Source::File(path),
        }
    }

    pub fn builtin(name: &str) -> Instance {
        Instance {
            name: sanitize(name),
            source: Source::Builtin(name.to_owned()),
        }
    }

    fn load(&self) -> Result<Graph, String> {
        match &self.source {
            Source::File(p) => read_graph(p, Format::Auto)
                .map(|parsed| parsed.graph)
                .map_err(|e| format!("{}: {e}", p.display())),
            Source::Builtin(name) => builtin(name).ok_or_else(|| format!("unknown builtin {name}")),
        }
    }
}

/// CSV-safe name: anything outside `[A-Za-z0-9._-]` becomes `_`.
pub fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || "._-".contains(c) { c } else { '_' })
        .collect()
}

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}: no instances found")]
    Empty(PathBuf),
}

/// A directory (every file with a known graph extension, sorted by name) or
/// a manifest: one path per line, relative to the manifest, `#` comments,
/// `builtin:<name>` for generated instances.
pub fn load_instances(path: &Path) -> Result<Vec<Instance>, BenchError> {
    let io_err = |source| BenchError::Io {
        path: path.to_owned(),
        source,
    };
    let mut out = Vec::new();
    if path.is_dir() {
        let mut files = Vec::new();
        for entry in std::fs::read_dir(path).map_err(io_err)? {
            let p = entry.map_err(io_err)?.path();
            let known = p
                .extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| INSTANCE_EXTENSIONS.contains(&e.to_ascii_lowercase().as_str()));
            if p.is_file() && known {
                files.push(p);
            }
        }
        files.sort();
        out.extend(files.into_iter().map(Instance::file));
    } else {
        let text = std::fs::read_to_string(path).map_err(io_err)?;
        let base = path.parent().unwrap_or(Path::new("."));
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            match line.strip_prefix("builtin:") {
                Some(name) => out.push(Instance::builtin(name.trim())),
                None => out.push(Instance::file(base.join(line))),
            }
        }
    }
    if out.is_empty() {
        return Err(BenchError::Empty(path.to_owned()));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeedRecord {
    pub seed: u64,
    pub num_colors: usize,
    pub lb_final: usize,
    pub optimal: bool,
    /// Seconds.
    pub time_to_best: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub records: Vec<SeedRecord>,
    pub error: Option<String>,
}

impl RunReport {
    pub fn min_colors(&self) -> Option<usize> {
        self.records.iter().map(|r| r.num_colors).min()
    }

    pub fn avg_colors(&self) -> Option<f64> {
        let k = self.records.len();
        (k > 0).then(|| self.records.iter().map(|r| r.num_colors as f64).sum::<f64>() / k as f64)
    }

    pub fn any_optimal(&self) -> bool {
        self.records.iter().any(|r| r.optimal)
    }

    pub fn avg_time_to_best(&self) -> Option<f64> {
        let k = self.records.len();
        (k > 0).then(|| self.records.iter().map(|r| r.time_to_best).sum::<f64>() / k as f64)
    }

    /// `Min(Avg)`, with `*` after Min when some run proved optimality.
    pub fn summary(&self) -> String {
        match (self.min_colors(), self.avg_colors()) {
            (Some(min), Some(avg)) => {
                let star = if self.any_optimal() { "*" } else { "" };
                format!("{min}{star}({avg:.1})")
            }
            _ => "-".to_owned(),
        }
    }

    pub fn csv_row(&self) -> String {
        let mut row = format!("{},{},{}", self.instance, self.n, self.m);
        match (self.min_colors(), self.avg_colors(), self.avg_time_to_best()) {
            (Some(min), Some(avg), Some(t)) => {
                write!(row, ",{min},{avg:.1},{},{t:.3}", self.any_optimal()).unwrap();
            }
            _ => row.push_str(",,,,"),
        }
        row.push(',');
        if let Some(e) = &self.error {
            row.push_str(&e.replace([',', '\n', '\r'], ";"));
        }
        row
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub seeds: RangeInclusive<u64>,
    /// Template; the seed is overwritten per run.
    pub solver: SolverConfig,
    pub jobs: usize,
    /// Use a [`VirtualClock`] per run instead of wall time.
    pub deterministic: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            seeds: 1..=10,
            solver: SolverConfig::default(),
            jobs: 1,
            deterministic: false,
        }
    }
}

/// Parses `a..b` (inclusive) or a single seed.
pub fn parse_seed_range(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").unwrap_or((s, s));
    let a: u64 = a.trim().parse().map_err(|_| format!("bad seed range {s:?}"))?;
    let b: u64 = b.trim().parse().map_err(|_| format!("bad seed range {s:?}"))?;
    if a > b {
        return Err(format!("empty seed range {s:?}"));
    }
    Ok(a..=b)
}

/// All seeds of one instance, in order.
pub fn run_instance(inst: &Instance, cfg: &BenchConfig) -> RunReport {
    let mut report = RunReport {
        instance: inst.name.clone(),
        n: 0,
        m: 0,
        records: Vec::new(),
        error: None,
    };
    let g = match inst.load() {
        Ok(g) => g,
        Err(e) => {
            report.error = Some(e);
            return report;
        }
    };
    report.n = g.n();
    report.m = g.m();
    for seed in cfg.seeds.clone() {
        let solver = SolverConfig {
            seed,
            ..cfg.solver.clone()
        };
        let virtual_clock;
        let wall;
        let clock: &dyn Clock = if cfg.deterministic {
            virtual_clock = VirtualClock::default();
            &virtual_clock
        } else {
            wall = WallClock::start();
            &wall
        };
        let result = match solve(&g, &solver, clock) {
            Ok(r) => r,
            Err(e) => {
                report.error = Some(format!("seed {seed}: {e}"));
                break;
            }
        };
        if let Err(v) = verify_coloring(&g, &result.coloring) {
            report.error = Some(format!("seed {seed}: {v}"));
            break;
        }
        report.records.push(SeedRecord {
            seed,
            num_colors: result.num_colors,
            lb_final: result.lb_final,
            optimal: result.optimal,
            time_to_best: result.time_to_best.as_secs_f64(),
        });
    }
    report
}

/// Runs instances on up to `cfg.jobs` threads, seeds of one instance
/// sequentially. `sink` sees reports in input order as soon as all earlier
/// ones are done; the return value is in input order too.
pub fn run_bench(
    instances: &[Instance],
    cfg: &BenchConfig,
    mut sink: impl FnMut(&RunReport),
) -> Vec<RunReport> {
    let jobs = cfg.jobs.clamp(1, instances.len().max(1));
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<RunReport>> = vec![None; instances.len()];
    std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel();
        for _ in 0..jobs {
            let tx = tx.clone();
            let next = &next;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(inst) = instances.get(i) else { break };
                if tx.send((i, run_instance(inst, cfg))).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut emitted = 0;
        for (i, report) in rx {
            slots[i] = Some(report);
            while let Some(Some(r)) = slots.get(emitted) {
                sink(r);
                emitted += 1;
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every instance reported")).collect()
}

pub fn write_csv<W: Write>(reports: &[RunReport], mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in reports {
        writeln!(out, "{}", r.csv_row())?;
    }
    out.flush()
}

pub fn print_table<W: Write>(reports: &[RunReport], mut out: W) -> io::Result<()> {
    let width = reports.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
    writeln!(out, "{:width$}  {:>8}  {:>9}  {:>12}  {:>10}", "instance", "n", "m", "Min(Avg)", "time")?;
    for r in reports {
        let time = r.avg_time_to_best().map_or("-".to_owned(), |t| format!("{t:.3}"));
        let summary = match &r.error {
            Some(_) => "ERROR".to_owned(),
            None => r.summary(),
        };
        writeln!(out, "{:width$}  {:>8}  {:>9}  {:>12}  {:>10}", r.instance, r.n, r.m, summary, time)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::time::Duration;

    fn report(colors: &[usize]) -> RunReport {
        RunReport {
            instance: "x".into(),
            n: 5,
            m: 4,
            records: colors
                .iter()
                .enumerate()
                .map(|(i, &k)| SeedRecord {
                    seed: i as u64 + 1,
                    num_colors: k,
                    lb_final: 2,
                    optimal: k == 2,
                    time_to_best: 0.5,
                })
                .collect(),
            error: None,
        }
    }

    #[test]
    fn aggregates() {
        let r = report(&[3, 2, 3]);
        assert_eq!(r.min_colors(), Some(2));
        assert_eq!(r.summary(), "2*(2.7)");
        assert_eq!(r.csv_row(), "x,5,4,2,2.7,true,0.500,");
    }

    #[test]
    fn csv_matches_records() {
        for colors in [vec![7], vec![5, 6, 6], vec![137, 138, 137, 137, 137, 138, 138, 137, 137, 137]] {
            let r = report(&colors);
            let row = r.csv_row();
            let cols: Vec<&str> = row.split(',').collect();
            let min = colors.iter().min().unwrap();
            let avg = colors.iter().sum::<usize>() as f64 / colors.len() as f64;
            assert_eq!(cols[3], min.to_string());
            assert_eq!(cols[4], format!("{avg:.1}"));
        }
        assert_eq!(report(&[137, 138, 137]).summary(), "137(137.3)");
    }

    #[test]
    fn failed_row_keeps_columns() {
        let mut r = report(&[]);
        r.error = Some("bad, very bad".into());
        assert_eq!(r.csv_row(), "x,5,4,,,,,bad; very bad");
        assert_eq!(r.csv_row().split(',').count(), CSV_HEADER.split(',').count());
    }

    #[test]
    fn seed_ranges() {
        assert_eq!(parse_seed_range("1..10"), Ok(1..=10));
        assert_eq!(parse_seed_range("7"), Ok(7..=7));
        assert!(parse_seed_range("3..1").is_err());
        assert!(parse_seed_range("a..b").is_err());
    }

    #[test]
    fn names_sanitized() {
        assert_eq!(sanitize("my graph,1"), "my_graph_1");
        assert_eq!(Instance::file("/a/b/ca-net.science.mtx").name, "ca-net.science");
    }

    #[test]
    fn small_bench_mins() {
        let instances: Vec<Instance> = ["K4", "C5", "petersen"].map(Instance::builtin).into();
        let cfg = BenchConfig {
            seeds: 1..=3,
            solver: SolverConfig {
                cutoff: Duration::from_secs(1),
                ..SolverConfig::default()
            },
            jobs: 2,
            deterministic: true,
        };
        let mut order = Vec::new();
        let reports = run_bench(&instances, &cfg, |r| order.push(r.instance.clone()));
        assert_eq!(order, ["K4", "C5", "petersen"]);
        let mins: Vec<_> = reports.iter().map(|r| r.min_colors()).collect();
        assert_eq!(mins, [Some(4), Some(3), Some(3)]);
    }

    #[test]
    fn unknown_builtin_recorded() {
        let r = run_instance(&Instance::builtin("nope"), &BenchConfig::default());
        assert!(r.error.is_some());
        assert!(r.records.is_empty());
    }
}

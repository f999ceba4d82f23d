//! Command-line front end. Exit codes: 0 success, 2 bad input or arguments,
//! 3 internal invariant violation.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use hycolor_core::oracle::verify_coloring;
use hycolor_core::{solve, Clock, Lambda, SolveError, SolverConfig, VirtualClock};
use serde::Serialize;

use crate::bench::{self, load_instances, parse_seed_range, BenchConfig};
use crate::clock::WallClock;
use crate::format::{read_graph, write_dimacs, write_solution, Format};
use crate::instances::builtin;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

const EXIT_HELP: &str = "\
Exit codes:
  0  success
  2  unreadable or malformed input, invalid arguments
  3  internal invariant violation (improper or inconsistent result)";

#[derive(Debug, Parser)]
#[command(name = "hycolor", version, about = "Heuristic graph coloring with clique lower bounds")]
#[command(after_help = EXIT_HELP)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color one graph.
    Solve(SolveArgs),
    /// Run every instance for a range of seeds and report Min(Avg).
    Bench(BenchArgs),
    /// Write a built-in instance as DIMACS (hamming<b>-<d>, karate, example13,
    /// petersen, K<n>, C<n>).
    Gen {
        name: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    /// Time limit in seconds, checked between iterations.
    #[arg(long, default_value = "60", value_parser = seconds)]
    pub cutoff: Duration,
    /// Probability of reordering core layers by mixed degree.
    #[arg(long, default_value_t = 0.2, value_parser = probability)]
    pub alpha: f64,
    /// Weight of already-placed neighbors in the mixed degree, in [0, 1].
    #[arg(long, default_value = "0.7", value_parser = lambda)]
    pub lambda: Lambda,
    /// Seconds per exact lower-bound call.
    #[arg(long, default_value = "1", value_parser = seconds)]
    pub exactlb_budget: Duration,
    /// Largest subgraph handed to the exact clique solver.
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    pub size_upper: u64,
    /// Seconds per heuristic clique search.
    #[arg(long, default_value = "0.05", value_parser = seconds)]
    pub findclq_budget: Duration,
    /// Count time in clock reads (1 ms each) instead of wall time, making
    /// runs reproducible.
    #[arg(long)]
    pub deterministic: bool,
}

impl SolverArgs {
    fn config(&self, seed: u64) -> SolverConfig {
        SolverConfig {
            cutoff: self.cutoff,
            seed,
            alpha: self.alpha,
            lambda: self.lambda,
            exactlb_budget: self.exactlb_budget,
            size_upper: self.size_upper as usize,
            findclq_budget: self.findclq_budget,
        }
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    pub format: Format,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the coloring here.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Print a JSON report instead of the summary line.
    #[arg(long)]
    pub json: bool,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of instances or a manifest file.
    #[arg(long)]
    pub instances: PathBuf,
    /// Inclusive seed range `a..b`.
    #[arg(long, default_value = "1..10", value_parser = parse_seed_range)]
    pub seeds: std::ops::RangeInclusive<u64>,
    /// CSV output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: u64,
    #[command(flatten)]
    pub solver: SolverArgs,
}

fn seconds(s: &str) -> Result<Duration, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if !x.is_finite() || x <= 0.0 {
        return Err(format!("{s} must be a positive number of seconds"));
    }
    Duration::try_from_secs_f64(x).map_err(|e| e.to_string())
}

fn probability(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if !(0.0..=1.0).contains(&x) {
        return Err(format!("{s} is outside [0, 1]"));
    }
    Ok(x)
}

fn lambda(s: &str) -> Result<Lambda, String> {
    let x: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    Lambda::from_f64(x).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct JsonReport<'a> {
    input: &'a str,
    n: usize,
    m: usize,
    seed: u64,
    num_colors: usize,
    lb_final: usize,
    optimal: bool,
    time_to_best: f64,
    iterations: usize,
    reduced_vertices: usize,
    /// `[label, color]`, colors from 1.
    coloring: Vec<(u64, u32)>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                return EXIT_INPUT;
            }
            let _ = write!(stdout, "{text}");
            return EXIT_OK;
        }
    };
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(&a, stdout),
        Command::Bench(a) => cmd_bench(&a, stdout),
        Command::Gen { name, output } => cmd_gen(&name, output.as_ref(), stdout),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "hycolor: {msg}");
            code
        }
    }
}

type CmdResult = Result<(), (i32, String)>;

fn input_err(e: impl std::fmt::Display) -> (i32, String) {
    (EXIT_INPUT, e.to_string())
}

fn create(path: &PathBuf) -> Result<BufWriter<File>, (i32, String)> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))
}

pub fn cmd_solve(a: &SolveArgs, stdout: &mut dyn Write) -> CmdResult {
    let parsed = read_graph(&a.input, a.format).map_err(|e| input_err(format!("{}: {e}", a.input.display())))?;
    let g = parsed.graph;
    let cfg = a.solver.config(a.seed);
    let virtual_clock = VirtualClock::default();
    let wall = WallClock::start();
    let clock: &dyn Clock = if a.solver.deterministic { &virtual_clock } else { &wall };

    let r = solve(&g, &cfg, clock).map_err(|e| match e {
        SolveError::Config(e) => input_err(e),
        e @ SolveError::Extend(_) => (EXIT_INVARIANT, e.to_string()),
    })?;
    verify_coloring(&g, &r.coloring).map_err(|v| (EXIT_INVARIANT, format!("result is not proper: {v}")))?;

    if let Some(path) = &a.output {
        write_solution(&g, &r.coloring, create(path)?).map_err(input_err)?;
    }
    let time = r.time_to_best.as_secs_f64();
    if a.json {
        let mut coloring: Vec<(u64, u32)> = (0..g.n())
            .map(|v| (g.label(v), r.coloring.get(v).unwrap() + 1))
            .collect();
        coloring.sort_unstable();
        let report = JsonReport {
            input: &a.input.to_string_lossy(),
            n: g.n(),
            m: g.m(),
            seed: a.seed,
            num_colors: r.num_colors,
            lb_final: r.lb_final,
            optimal: r.optimal,
            time_to_best: time,
            iterations: r.iterations,
            reduced_vertices: r.reduced_vertices,
            coloring,
        };
        serde_json::to_writer_pretty(&mut *stdout, &report).map_err(input_err)?;
        writeln!(stdout).map_err(input_err)?;
    } else {
        writeln!(
            stdout,
            "s {} lb={} optimal={} time={time:.3}",
            r.num_colors, r.lb_final, r.optimal
        )
        .map_err(input_err)?;
    }
    Ok(())
}

pub fn cmd_bench(a: &BenchArgs, stdout: &mut dyn Write) -> CmdResult {
    let instances = load_instances(&a.instances).map_err(input_err)?;
    let cfg = BenchConfig {
        seeds: a.seeds.clone(),
        solver: a.solver.config(*a.seeds.start()),
        jobs: a.jobs as usize,
        deterministic: a.solver.deterministic,
    };
    let mut csv = match &a.out {
        Some(path) => {
            let mut w = create(path)?;
            writeln!(w, "{}", bench::CSV_HEADER).map_err(input_err)?;
            Some(w)
        }
        None => None,
    };
    let mut write_err = None;
    let reports = bench::run_bench(&instances, &cfg, |r| {
        if let Some(w) = csv.as_mut() {
            if let Err(e) = writeln!(w, "{}", r.csv_row()).and_then(|_| w.flush()) {
                write_err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = write_err {
        return Err(input_err(e));
    }
    bench::print_table(&reports, &mut *stdout).map_err(input_err)?;
    for r in &reports {
        if let Some(e) = &r.error {
            writeln!(stdout, "{}: {e}", r.instance).map_err(input_err)?;
        }
    }
    Ok(())
}

fn cmd_gen(name: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> CmdResult {
    let g = builtin(name).ok_or_else(|| input_err(format!("unknown instance {name:?}")))?;
    let written = match output {
        Some(path) => write_dimacs(&g, create(path)?),
        None => write_dimacs(&g, &mut *stdout),
    };
    written.map_err(input_err)
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

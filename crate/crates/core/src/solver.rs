//! The main bounding loop: improve the clique lower bound, shrink the
//! working graph with it, recolor what is left, and stop once the bounds
//! meet or time runs out. Deleted vertices are colored back at the end.

use alloc::vec::Vec;
use core::fmt;
use core::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::{exact_lb, find_clique_heuristic, DEFAULT_SIZE_UPPER};
use crate::clock::{Clock, Deadline};
use crate::coloring::{dsatur, Coloring};
use crate::graph::{Graph, GraphView, WorkingGraph};
use crate::mdd::{mdd_color, Lambda, MddOrder};
use crate::reduce::{extend_coloring, redu_rule, DeletionStack, ExtendError};

/// RNG stream for clique restarts.
const STREAM_CLIQUE: u64 = 1;
/// RNG stream for the layer-reorder coin.
const STREAM_ORDER: u64 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub cutoff: Duration,
    pub seed: u64,
    /// Probability of reordering core layers by mixed degree.
    pub alpha: f64,
    pub lambda: Lambda,
    pub exactlb_budget: Duration,
    pub size_upper: usize,
    pub findclq_budget: Duration,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cutoff: Duration::from_secs(60),
            seed: 1,
            alpha: 0.2,
            lambda: Lambda::DEFAULT,
            exactlb_budget: Duration::from_secs(1),
            size_upper: DEFAULT_SIZE_UPPER,
            findclq_budget: Duration::from_millis(50),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ConfigError {
    ZeroBudget(&'static str),
    Alpha(f64),
    SizeUpper,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::ZeroBudget(name) => write!(f, "{name} must be positive"),
            ConfigError::Alpha(a) => write!(f, "alpha {a} outside [0, 1]"),
            ConfigError::SizeUpper => write!(f, "size_upper must be positive"),
        }
    }
}

impl core::error::Error for ConfigError {}

impl SolverConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, d) in [
            ("cutoff", self.cutoff),
            ("exactlb_budget", self.exactlb_budget),
            ("findclq_budget", self.findclq_budget),
        ] {
            if d.is_zero() {
                return Err(ConfigError::ZeroBudget(name));
            }
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return Err(ConfigError::Alpha(self.alpha));
        }
        if self.size_upper == 0 {
            return Err(ConfigError::SizeUpper);
        }
        Ok(())
    }
}

/// Which stage last raised the lower bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LowerSource {
    None,
    CliqueHeuristic,
    ExactLb,
}

/// Which stage produced the incumbent coloring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UpperSource {
    Trivial,
    MddColor,
    Dsatur,
}

/// `lb_star` bounds the chromatic number from below; `ub_star` counts the
/// colors of the incumbent on the working graph it was computed for, so the
/// final coloring uses at most `max(lb_star, ub_star)` colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsState {
    pub lb_star: usize,
    pub ub_star: usize,
    pub last_lb_e: usize,
    pub exactlb_enabled: bool,
    pub reduced_this_iter: bool,
    pub lower_source: LowerSource,
    pub upper_source: UpperSource,
}

impl BoundsState {
    pub fn new(n: usize) -> Self {
        BoundsState {
            lb_star: 0,
            ub_star: n,
            last_lb_e: 0,
            exactlb_enabled: true,
            reduced_this_iter: false,
            lower_source: LowerSource::None,
            upper_source: UpperSource::Trivial,
        }
    }
}

/// Bounds at the end of one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterationRecord {
    pub lb_star: usize,
    pub ub_star: usize,
    pub alive: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    /// Proper coloring of the whole input, colors `0..num_colors`.
    pub coloring: Coloring,
    pub num_colors: usize,
    pub lb_final: usize,
    pub optimal: bool,
    pub time_to_best: Duration,
    pub iterations: usize,
    pub reduced_vertices: usize,
    pub bounds: BoundsState,
    pub trajectory: Vec<IterationRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    Config(ConfigError),
    /// The lift-back step rejected the solver's own state.
    Extend(ExtendError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Config(e) => write!(f, "invalid configuration: {e}"),
            SolveError::Extend(e) => write!(f, "internal invariant violated: {e}"),
        }
    }
}

impl core::error::Error for SolveError {}

impl From<ConfigError> for SolveError {
    fn from(e: ConfigError) -> Self {
        SolveError::Config(e)
    }
}

impl From<ExtendError> for SolveError {
    fn from(e: ExtendError) -> Self {
        SolveError::Extend(e)
    }
}

fn stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

struct Run<'g, 'c> {
    graph: &'g Graph,
    cfg: &'c SolverConfig,
    clock: &'c dyn Clock,
    work: WorkingGraph<'g>,
    bounds: BoundsState,
    stack: DeletionStack,
    best: Option<Coloring>,
    clique_rng: ChaCha8Rng,
    order_rng: ChaCha8Rng,
}

impl Run<'_, '_> {
    fn reduce(&mut self) {
        let r = redu_rule(&mut self.work, self.bounds.lb_star);
        if r.reduced() {
            self.stack.push_all(&r.removed, self.bounds.lb_star);
            self.bounds.reduced_this_iter = true;
        }
    }

    fn raise_lower_bounds(&mut self) {
        let last_lb = self.bounds.lb_star;
        let deadline = Deadline::after(self.clock, self.cfg.findclq_budget);
        let clique = find_clique_heuristic(&self.work, &mut self.clique_rng, &deadline);
        if clique.len() > self.bounds.lb_star {
            self.bounds.lb_star = clique.len();
            self.bounds.lower_source = LowerSource::CliqueHeuristic;
        }
        if self.bounds.lb_star > last_lb {
            self.reduce();
        }

        if self.bounds.exactlb_enabled {
            let deadline = Deadline::after(self.clock, self.cfg.exactlb_budget);
            let lb_e = exact_lb(&self.work, self.bounds.lb_star, &deadline, self.cfg.size_upper);
            if lb_e > self.bounds.lb_star {
                self.bounds.lb_star = lb_e;
                self.bounds.lower_source = LowerSource::ExactLb;
                self.reduce();
            }
            if lb_e == self.bounds.last_lb_e {
                self.bounds.exactlb_enabled = false;
            }
            self.bounds.last_lb_e = lb_e;
        }
    }

    fn color_working_graph(&mut self) -> (Coloring, UpperSource) {
        let first = self.bounds.ub_star == self.graph.n();
        if self.bounds.reduced_this_iter || first {
            let incumbent = self.best.as_ref().map(|f| {
                let mut f = f.restrict(&self.work);
                f.compact();
                f
            });
            let reorder = self.order_rng.gen_bool(self.cfg.alpha);
            let order = MddOrder::build(&self.work, self.cfg.lambda, reorder);
            (mdd_color(&self.work, incumbent.as_ref(), &order), UpperSource::MddColor)
        } else {
            (dsatur(&self.work), UpperSource::Dsatur)
        }
    }

    /// Colors the final coloring is guaranteed not to exceed.
    fn guaranteed(&self) -> usize {
        if self.work.is_empty() {
            self.bounds.lb_star
        } else {
            self.bounds.lb_star.max(self.bounds.ub_star)
        }
    }
}

/// Colors `g` within `cfg.cutoff` as measured by `clock`. The cutoff is
/// only checked between iterations.
pub fn solve(g: &Graph, cfg: &SolverConfig, clock: &dyn Clock) -> Result<SolveResult, SolveError> {
    cfg.validate()?;
    let n = g.n();
    let mut run = Run {
        graph: g,
        cfg,
        clock,
        work: WorkingGraph::new(g),
        bounds: BoundsState::new(n),
        stack: DeletionStack::new(),
        best: None,
        clique_rng: stream(cfg.seed, STREAM_CLIQUE),
        order_rng: stream(cfg.seed, STREAM_ORDER),
    };
    let mut iterations = 0;
    let mut trajectory = Vec::new();
    let mut time_to_best = Duration::ZERO;
    let mut best_guarantee = usize::MAX;

    while n > 0 && clock.elapsed() < cfg.cutoff {
        iterations += 1;
        run.bounds.reduced_this_iter = false;
        run.raise_lower_bounds();

        if !run.work.is_empty() {
            let (f, source) = run.color_working_graph();
            let k = f.num_colors();
            if k < run.bounds.ub_star {
                run.bounds.ub_star = k;
                run.bounds.upper_source = source;
                run.best = Some(f);
            }
        }

        trajectory.push(IterationRecord {
            lb_star: run.bounds.lb_star,
            ub_star: run.bounds.ub_star,
            alive: run.work.order(),
        });
        let guarantee = run.guaranteed();
        if guarantee < best_guarantee {
            best_guarantee = guarantee;
            time_to_best = clock.elapsed();
        }
        // the reduced graph may need fewer colors than lb_star; the lift-back
        // then still uses exactly lb_star
        if run.work.is_empty() || run.bounds.ub_star <= run.bounds.lb_star {
            break;
        }
    }

    let partial = match &run.best {
        Some(f) => f.restrict(&run.work),
        None => dsatur(&run.work),
    };
    let mut coloring = extend_coloring(g, &partial, &run.stack)?;
    coloring.compact();
    let num_colors = coloring.num_colors();
    debug_assert!(crate::oracle::verify_coloring(g, &coloring).is_ok());
    debug_assert!(num_colors <= run.guaranteed().max(run.bounds.lb_star) || run.best.is_none());

    let lb_final = run.bounds.lb_star;
    Ok(SolveResult {
        coloring,
        num_colors,
        lb_final,
        optimal: num_colors == lb_final,
        time_to_best,
        iterations,
        reduced_vertices: run.stack.len(),
        bounds: run.bounds,
        trajectory,
    })
}

//! Time sources. The solver only ever asks "how long since start", so a
//! wall clock (in the std crate) and a deterministic virtual clock are
//! interchangeable.

use core::cell::Cell;
use core::time::Duration;

pub trait Clock {
    /// Time elapsed since the clock was created.
    fn elapsed(&self) -> Duration;
}

impl<C: Clock + ?Sized> Clock for &C {
    fn elapsed(&self) -> Duration {
        (**self).elapsed()
    }
}

/// Deterministic clock: every read advances time by a fixed quantum, so
/// budgets become counts of checkpoints and runs replay exactly.
#[derive(Debug)]
pub struct VirtualClock {
    quantum: Duration,
    reads: Cell<u64>,
}

impl VirtualClock {
    pub const DEFAULT_QUANTUM: Duration = Duration::from_millis(1);

    pub fn new(quantum: Duration) -> Self {
        VirtualClock {
            quantum,
            reads: Cell::new(0),
        }
    }

    pub fn reads(&self) -> u64 {
        self.reads.get()
    }
}

impl Default for VirtualClock {
    fn default() -> Self {
        VirtualClock::new(Self::DEFAULT_QUANTUM)
    }
}

impl Clock for VirtualClock {
    fn elapsed(&self) -> Duration {
        let r = self.reads.get() + 1;
        self.reads.set(r);
        self.quantum.saturating_mul(r.min(u32::MAX as u64) as u32)
    }
}

/// A budget measured from the moment it was created.
pub struct Deadline<'c> {
    clock: &'c dyn Clock,
    end: Duration,
}

impl<'c> Deadline<'c> {
    pub fn after(clock: &'c dyn Clock, budget: Duration) -> Self {
        let end = clock.elapsed().saturating_add(budget);
        Deadline { clock, end }
    }

    pub fn expired(&self) -> bool {
        self.clock.elapsed() >= self.end
    }
}

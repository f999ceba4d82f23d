//! File formats, wall-clock timing, built-in instances, the benchmark
//! harness and the command-line front end around [`hycolor_core`].

pub mod bench;
pub mod cli;
pub mod clock;
pub mod format;
pub mod instances;

pub use clock::WallClock;

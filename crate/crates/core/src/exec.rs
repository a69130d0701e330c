//! Pluggable execution of independent search partitions.
//!
//! The distance kernels split their work by leading column index. An
//! [`Executor`] decides how those partitions run; the answer must not depend
//! on the executor.

/// Runs a family of independent boolean probes.
pub trait Executor: Sync {
    /// Returns `true` iff `probe(i)` is true for some `i < tasks`.
    fn any(&self, tasks: usize, probe: &(dyn Fn(usize) -> bool + Sync)) -> bool;
}

/// Runs every partition on the calling thread, in index order.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn any(&self, tasks: usize, probe: &(dyn Fn(usize) -> bool + Sync)) -> bool {
        (0..tasks).any(probe)
    }
}
